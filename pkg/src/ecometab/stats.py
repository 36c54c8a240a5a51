"""Simple linear regression with full inference, self-contained.

The engine is closed-form OLS computed on a mean-centered regressor for
numerical stability (calendar years against statement-scale values produce
~1e10 intercepts); results are reported in the uncentered parameterization.
Two-sided t and upper-tail F probabilities share one regularized incomplete
beta function evaluated by continued fraction, so the F(1, d) = t(d)^2
duality holds to the last bit.
"""

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AlignmentError,
    DegenerateRegressorError,
    DomainError,
    InsufficientDataError,
)
from .ledger import Series

# Continued-fraction convergence: relative tolerance and iteration cap.
_BETA_TOL = 1e-14
_BETA_MAX_ITER = 300

# Residual sum of squares below this fraction of the response variance is
# treated as an exact fit (pure floating-point noise).
_EXACT_FIT_RSS_FRACTION = 1e-24


@dataclass(frozen=True)
class Descriptives:
    """Count, mean, sample standard deviation (n-1), min and max."""

    n: int
    mean: float
    sd: float
    minimum: float
    maximum: float


@dataclass(frozen=True)
class RegressionFit:
    """Full result of a simple OLS regression.

    ``degenerate`` marks a constant response (slope forced to zero);
    ``exact_fit`` marks a noiseless relation (standard errors are zero and
    p-values are reported as zero instead of dividing by zero).
    """

    n: int
    intercept: float
    slope: float
    se_intercept: float
    se_slope: float
    standardized_slope: float
    r_squared: float
    f_statistic: float
    p_slope: float
    p_f: float
    residuals: tuple[float, ...]
    degenerate: bool = False
    exact_fit: bool = False


def descriptives(values: Sequence[float]) -> Descriptives:
    """Summarize a sequence: mean, sample sd (0 when n == 1), min, max."""
    n = len(values)
    if n == 0:
        raise InsufficientDataError("descriptives need at least one value")
    minimum = min(values)
    maximum = max(values)
    # fsum/n can land an ulp outside [min, max]; the true mean never does.
    mean = min(max(math.fsum(values) / n, minimum), maximum)
    if n == 1:
        sd = 0.0
    else:
        sd = math.sqrt(math.fsum((v - mean) ** 2 for v in values) / (n - 1))
    return Descriptives(n=n, mean=mean, sd=sd, minimum=minimum, maximum=maximum)


def _beta_cf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz method)."""
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        coef = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + coef * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + coef / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        coef = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + coef * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + coef / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_TOL:
            break
    return h


def betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b).

    Uses the continued-fraction expansion with the symmetry switch at
    x = (a + 1)/(a + b + 2).
    """
    if a <= 0 or b <= 0:
        raise DomainError("betainc needs a > 0 and b > 0")
    if x < 0 or x > 1:
        raise DomainError("betainc needs 0 <= x <= 1")
    if x == 0:
        return 0.0
    if x == 1:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def p_value_t(t: float, df: int) -> float:
    """Two-sided tail probability P(|T| >= |t|) for Student t with df."""
    if df < 1:
        raise DomainError("p_value_t needs df >= 1")
    if not math.isfinite(t):
        raise DomainError("p_value_t needs a finite statistic")
    if t == 0:
        return 1.0
    return betainc(df / 2.0, 0.5, df / (df + t * t))


def p_value_f(f: float, df1: int, df2: int) -> float:
    """Upper-tail probability P(F >= f) for the F distribution."""
    if df1 < 1 or df2 < 1:
        raise DomainError("p_value_f needs df1 >= 1 and df2 >= 1")
    if not math.isfinite(f) or f < 0:
        raise DomainError("p_value_f needs a finite statistic >= 0")
    if f == 0:
        return 1.0
    return betainc(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f))


def t_critical(alpha: float, df: int) -> float:
    """Two-sided critical value: the t with P(|T| >= t) = alpha."""
    if not 0.0 < alpha < 1.0:
        raise DomainError("t_critical needs 0 < alpha < 1")
    if df < 1:
        raise DomainError("t_critical needs df >= 1")
    lo, hi = 0.0, 1.0
    while p_value_t(hi, df) > alpha:
        hi *= 2.0
        if hi > 1e300:
            raise DomainError("t_critical did not bracket the root")
    while hi - lo > 1e-13 * max(1.0, lo):
        mid = 0.5 * (lo + hi)
        if p_value_t(mid, df) > alpha:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def significance_stars(p: float) -> str:
    """Star rule for tables: *** p<0.001, ** p<0.01, * p<0.05."""
    if p < 0.001:
        return "***"
    if p < 0.01:
        return "**"
    if p < 0.05:
        return "*"
    return ""


def ols_fit(x: Series, y: Series) -> RegressionFit:
    """Fit y = intercept + slope * x by ordinary least squares.

    Both series must share the same year set. Inference (standard errors,
    standardized coefficient, R^2, F, two-sided p-values) comes with the
    fit; residuals are returned in year order.

    Raises:
        AlignmentError: the year sets differ.
        InsufficientDataError: fewer than 3 points.
        DegenerateRegressorError: x has zero variance.
    """
    if x.years != y.years:
        raise AlignmentError("x and y must share the same years")
    n = len(x)
    if n < 3:
        raise InsufficientDataError(f"ols_fit needs at least 3 points, got {n}")
    x_mean = math.fsum(x.values) / n
    y_mean = math.fsum(y.values) / n
    dx = [v - x_mean for v in x.values]
    dy = [v - y_mean for v in y.values]
    sxx = math.fsum(d * d for d in dx)
    if sxx == 0.0:
        raise DegenerateRegressorError("explanatory variable is constant")
    syy = math.fsum(d * d for d in dy)
    df = n - 2

    if min(y.values) == max(y.values):
        # Constant response: slope is zero with certainty, no signal to explain.
        residuals = tuple(dy)
        sse = math.fsum(r * r for r in residuals)
        sigma2 = sse / df
        return RegressionFit(
            n=n,
            intercept=y_mean,
            slope=0.0,
            se_intercept=math.sqrt(sigma2 * (1.0 / n + x_mean * x_mean / sxx)),
            se_slope=math.sqrt(sigma2 / sxx),
            standardized_slope=0.0,
            r_squared=0.0,
            f_statistic=0.0,
            p_slope=1.0,
            p_f=1.0,
            residuals=residuals,
            degenerate=True,
        )

    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean
    residuals = tuple(b - slope * a for a, b in zip(dx, dy))
    sse = math.fsum(r * r for r in residuals)

    if sse <= _EXACT_FIT_RSS_FRACTION * syy:
        return RegressionFit(
            n=n,
            intercept=intercept,
            slope=slope,
            se_intercept=0.0,
            se_slope=0.0,
            standardized_slope=math.copysign(1.0, slope),
            r_squared=1.0,
            f_statistic=math.inf,
            p_slope=0.0,
            p_f=0.0,
            residuals=residuals,
            exact_fit=True,
        )

    sigma2 = sse / df
    se_slope = math.sqrt(sigma2 / sxx)
    se_intercept = math.sqrt(sigma2 * (1.0 / n + x_mean * x_mean / sxx))
    r = sxy / math.sqrt(sxx * syy)
    r = max(-1.0, min(1.0, r))
    t_stat = slope / se_slope
    f_stat = t_stat * t_stat
    return RegressionFit(
        n=n,
        intercept=intercept,
        slope=slope,
        se_intercept=se_intercept,
        se_slope=se_slope,
        standardized_slope=r,
        r_squared=r * r,
        f_statistic=f_stat,
        p_slope=p_value_t(t_stat, df),
        p_f=p_value_f(f_stat, 1, df),
        residuals=residuals,
    )
