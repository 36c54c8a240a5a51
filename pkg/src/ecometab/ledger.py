"""Income-statement data model and delimited-text ingestion.

Input files are delimited text (comma by default, UTF-8) with a header row
of exact lowercase column names:

    year,currency,total_revenue,cost_of_personnel,salary,
    social_security_taxes,severance_pay,personnel_other_costs,
    materials_and_products,services,leased_assets_third_parties,
    other_costs,total_cost,surplus_or_loss

``currency`` is ``EUR`` or ``ITL``; pre-euro lira amounts are converted at
the fixed ECB rate of 1936.27 lire per euro. A blank cell means "not
reported" and is never conflated with zero. Numbers use a ``.`` decimal
separator and no thousands separators.

All types here are immutable after construction and safe to share across
threads; parsing is single-threaded per stream.
"""

import csv
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator, TextIO

from .errors import DomainError, EmptyPeriodError, MissingDataError, ParseError

# Fixed ECB conversion rate: 1 euro = 1936.27 Italian lire.
LIRE_PER_EURO = 1936.27

# Relative tolerance for the personnel-components decomposition check.
DECOMPOSITION_RTOL = 1e-6


class Currency(Enum):
    EUR = "EUR"
    ITL = "ITL"


# Canonical column order of the input/output file format.
COLUMNS = (
    "year",
    "currency",
    "total_revenue",
    "cost_of_personnel",
    "salary",
    "social_security_taxes",
    "severance_pay",
    "personnel_other_costs",
    "materials_and_products",
    "services",
    "leased_assets_third_parties",
    "other_costs",
    "total_cost",
    "surplus_or_loss",
)

REQUIRED_COLUMNS = ("year", "currency", "total_revenue", "cost_of_personnel", "total_cost")

# Every monetary item, in canonical order.
MONEY_ITEMS = COLUMNS[2:]

# Monetary items that must be non-negative (all but the bottom line).
NONNEGATIVE_ITEMS = tuple(i for i in MONEY_ITEMS if i != "surplus_or_loss")

# Items that are costs (candidates for the mean-cost profile).
COST_ITEMS = (
    "cost_of_personnel",
    "salary",
    "social_security_taxes",
    "severance_pay",
    "personnel_other_costs",
    "materials_and_products",
    "services",
    "leased_assets_third_parties",
    "other_costs",
    "total_cost",
)

# Top-level cost items (the components of the personnel cost excluded).
MAIN_COST_ITEMS = (
    "cost_of_personnel",
    "materials_and_products",
    "services",
    "leased_assets_third_parties",
    "other_costs",
)

PERSONNEL_COMPONENTS = (
    "salary",
    "social_security_taxes",
    "severance_pay",
    "personnel_other_costs",
)


@dataclass(frozen=True)
class FiscalRecord:
    """One fiscal year's income-statement items in a declared currency.

    Optional items are ``None`` when the statement does not report them.
    ``surplus_or_loss`` is the only monetary field allowed to be negative.
    """

    year: int
    currency: Currency
    total_revenue: float
    cost_of_personnel: float
    total_cost: float
    salary: float | None = None
    social_security_taxes: float | None = None
    severance_pay: float | None = None
    personnel_other_costs: float | None = None
    materials_and_products: float | None = None
    services: float | None = None
    leased_assets_third_parties: float | None = None
    other_costs: float | None = None
    surplus_or_loss: float | None = None

    def item(self, name: str) -> float | None:
        """Return a monetary item by column name (``None`` if not reported)."""
        if name not in MONEY_ITEMS:
            raise DomainError(f"unknown item '{name}'")
        return getattr(self, name)


@dataclass(frozen=True)
class LedgerSeries:
    """Year-ordered income statements of one organization, one currency."""

    organization: str
    records: tuple[FiscalRecord, ...]

    def __post_init__(self):
        for prev, cur in zip(self.records, self.records[1:]):
            if cur.year <= prev.year:
                raise DomainError(
                    f"records must have strictly increasing years "
                    f"({prev.year} followed by {cur.year})"
                )
        currencies = {r.currency for r in self.records}
        if len(currencies) > 1:
            raise DomainError("records mix currencies; normalize before building a series")

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[FiscalRecord]:
        return iter(self.records)

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(r.year for r in self.records)


@dataclass(frozen=True)
class Series:
    """Ordered (year, value) pairs for one item."""

    years: tuple[int, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.years) != len(self.values):
            raise DomainError("years and values differ in length")
        for prev, cur in zip(self.years, self.years[1:]):
            if cur <= prev:
                raise DomainError("years must be strictly increasing")

    def __len__(self) -> int:
        return len(self.years)

    def items(self) -> Iterator[tuple[int, float]]:
        return zip(self.years, self.values)

    def value_at(self, year: int) -> float:
        try:
            return self.values[self.years.index(year)]
        except ValueError:
            raise MissingDataError(f"no value for year {year}") from None


@dataclass(frozen=True)
class ValidationFinding:
    """One non-fatal issue found while checking a ledger."""

    kind: str
    year: int | None
    message: str


def normalize_currency(record: FiscalRecord) -> FiscalRecord:
    """Convert a record to euros; euro records are returned unchanged."""
    if record.currency is Currency.EUR:
        return record
    converted = {
        name: record.item(name) / LIRE_PER_EURO
        for name in MONEY_ITEMS
        if record.item(name) is not None
    }
    return replace(record, currency=Currency.EUR, **converted)


def normalize_ledger(ledger: LedgerSeries) -> LedgerSeries:
    """Convert every record of a ledger to euros."""
    return LedgerSeries(ledger.organization, tuple(normalize_currency(r) for r in ledger.records))


def _parse_number(cell: str, row: int, column: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(f"malformed number {cell!r}", row=row, column=column) from None
    if value != value or value in (float("inf"), float("-inf")):
        raise ParseError(f"non-finite number {cell!r}", row=row, column=column)
    return value


def parse_ledger(stream: TextIO, organization: str = "", delimiter: str = ",") -> LedgerSeries:
    """Parse a delimited income-statement file into a euro-normalized ledger.

    Args:
        stream: text stream with a header row followed by one row per year.
        organization: label stored on the resulting series.
        delimiter: field separator (comma by default).

    Returns:
        A ``LedgerSeries`` sorted by year with every record converted to EUR.

    Raises:
        ParseError: malformed number, unknown currency code, duplicate year,
            negative value in a non-negative item, or missing required
            column, naming the offending row and column.
    """
    reader = csv.reader(stream, delimiter=delimiter)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty input: missing header row") from None
    header = [name.strip() for name in header]
    seen: set[str] = set()
    for name in header:
        if name not in COLUMNS:
            raise ParseError(f"unknown column '{name}'", row=1)
        if name in seen:
            raise ParseError(f"duplicate column '{name}'", row=1)
        seen.add(name)
    for name in REQUIRED_COLUMNS:
        if name not in seen:
            raise ParseError(f"missing required column '{name}'", row=1)

    records: list[FiscalRecord] = []
    years: set[int] = set()
    for row_no, cells in enumerate(reader, start=2):
        if not cells or all(not c.strip() for c in cells):
            continue
        if len(cells) != len(header):
            raise ParseError(
                f"expected {len(header)} fields, found {len(cells)}", row=row_no
            )
        raw = {name: cell.strip() for name, cell in zip(header, cells)}

        for name in REQUIRED_COLUMNS:
            if not raw[name]:
                raise ParseError("missing required value", row=row_no, column=name)
        try:
            year = int(raw["year"])
        except ValueError:
            raise ParseError(
                f"malformed year {raw['year']!r}", row=row_no, column="year"
            ) from None
        if year in years:
            raise ParseError(f"duplicate year {year}", row=row_no, column="year")
        years.add(year)
        try:
            currency = Currency(raw["currency"])
        except ValueError:
            raise ParseError(
                f"unknown currency code {raw['currency']!r}", row=row_no, column="currency"
            ) from None

        money: dict[str, float] = {}
        for name in MONEY_ITEMS:
            cell = raw.get(name, "")
            if not cell:
                continue
            value = _parse_number(cell, row_no, name)
            if value < 0 and name in NONNEGATIVE_ITEMS:
                raise ParseError(f"negative value {value!r}", row=row_no, column=name)
            money[name] = value
        records.append(normalize_currency(FiscalRecord(year=year, currency=currency, **money)))

    if not records:
        raise ParseError("no data rows")
    records.sort(key=lambda r: r.year)
    return LedgerSeries(organization, tuple(records))


def write_ledger(ledger: LedgerSeries, stream: TextIO, delimiter: str = ",") -> None:
    """Write a ledger in the canonical input format (round-trips exactly)."""
    writer = csv.writer(stream, delimiter=delimiter, lineterminator="\n")
    writer.writerow(COLUMNS)
    for record in ledger.records:
        row: list[str] = [str(record.year), record.currency.value]
        for name in MONEY_ITEMS:
            value = record.item(name)
            row.append("" if value is None else repr(value))
        writer.writerow(row)


def extract_series(
    ledger: LedgerSeries, item: str, period: tuple[int, int] | None = None
) -> Series:
    """Select one item as a (year, value) series, optionally windowed.

    ``period`` is an inclusive (first, last) year window; records outside it
    are dropped. Every record inside the window must report the item.
    """
    if item not in MONEY_ITEMS:
        raise DomainError(f"unknown item '{item}'")
    if period is None:
        selected = list(ledger.records)
    else:
        start, end = period
        selected = [r for r in ledger.records if start <= r.year <= end]
    if not selected:
        raise EmptyPeriodError(
            "no records in period" if period is None else f"no records in period {period[0]}-{period[1]}"
        )
    missing = [r.year for r in selected if r.item(item) is None]
    if missing:
        raise MissingDataError(
            f"'{item}' not reported for years: {', '.join(str(y) for y in missing)}"
        )
    return Series(
        tuple(r.year for r in selected),
        tuple(r.item(item) for r in selected),
    )


def validate_ledger(ledger: LedgerSeries) -> list[ValidationFinding]:
    """Check a ledger for soft issues; never mutates or raises.

    Findings cover personnel-decomposition mismatches beyond tolerance,
    negative values in non-negative items, and gaps in the year sequence.
    """
    findings: list[ValidationFinding] = []
    for record in ledger.records:
        for name in NONNEGATIVE_ITEMS:
            value = record.item(name)
            if value is not None and value < 0:
                findings.append(
                    ValidationFinding(
                        "negative_value", record.year, f"{name} is negative ({value!r})"
                    )
                )
        components = [record.item(name) for name in PERSONNEL_COMPONENTS]
        if all(v is not None for v in components):
            total = sum(components)
            reference = record.cost_of_personnel
            if abs(total - reference) > DECOMPOSITION_RTOL * abs(reference):
                findings.append(
                    ValidationFinding(
                        "personnel_decomposition_mismatch",
                        record.year,
                        f"personnel components sum to {total!r}, "
                        f"cost_of_personnel is {reference!r}",
                    )
                )
    for prev, cur in zip(ledger.records, ledger.records[1:]):
        if cur.year - prev.year > 1:
            gap = ", ".join(str(y) for y in range(prev.year + 1, cur.year))
            findings.append(
                ValidationFinding("year_gap", prev.year, f"missing years: {gap}")
            )
    return findings
