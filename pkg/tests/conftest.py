# Keeps this directory importable so tests can use the oracles and helpers.
