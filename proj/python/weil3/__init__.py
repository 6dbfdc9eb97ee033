"""Weil polynomials of abelian threefolds over finite fields.

Thin wrappers over the C++ core; records come back as parsed JSON.
"""

import csv
import io
import json

from . import _core

__all__ = ["check", "is_weil", "is_irreducible", "enumerate", "census", "verify", "SCHEMA_VERSION"]

SCHEMA_VERSION = _core.schema_version


def _s(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected int, got {type(x).__name__}")
    return str(x)


def check(q, a1, a2, a3):
    """Classification record for t^6 + a1 t^5 + a2 t^4 + a3 t^3 + q a2 t^2 + q^2 a1 t + q^3."""
    return json.loads(_core.check(_s(q), _s(a1), _s(a2), _s(a3)))


def is_weil(q, a1, a2, a3):
    return _core.is_weil(_s(q), _s(a1), _s(a2), _s(a3))


def is_irreducible(q, a1, a2, a3):
    return _core.is_irreducible(_s(q), _s(a1), _s(a2), _s(a3))


def enumerate(q, threads=1):
    """All Weil triples of q with their records, lexicographic in (a1, a2, a3)."""
    text = _core.enumerate(_s(q), "jsonl", threads)
    return [json.loads(line) for line in text.splitlines()]


def census(qs, threads=1):
    """Census rows as dicts of ints (wall_time_ms as float)."""
    lines = [_core.census_header()] + [_core.census_row(_s(q), threads) for q in qs]
    rows = []
    for row in csv.DictReader(io.StringIO("\n".join(lines))):
        rows.append({k: float(v) if k == "wall_time_ms" else int(v) for k, v in row.items()})
    return rows


def verify(qs, mode="full", seed=0, samples=4000, threads=1, mutation=""):
    """Returns (passed, report_text)."""
    return _core.verify([_s(q) for q in qs], mode, seed, samples, threads, mutation)
