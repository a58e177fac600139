"""Exact rank of sparse rational matrices."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


def _integral(row: Mapping[int, Number]) -> dict[int, int]:
    """Scale a rational row to a primitive integer row."""
    row = {c: Fraction(v) for c, v in row.items() if v}
    if not row:
        return {}
    den = math.lcm(*(v.denominator for v in row.values()))
    ints = {c: int(v * den) for c, v in row.items()}
    g = math.gcd(*ints.values())
    return {c: v // g for c, v in ints.items()}


def exact_rank(rows: Iterable[Mapping[int, Number] | Sequence[Number]]) -> int:
    """Rank over Q of the matrix whose rows are given sparsely ({column: value}) or densely.

    Fraction-free elimination: rows are kept as primitive integer vectors and a
    pivot is cleared by ``row * p - pivot_row * c`` followed by division by the gcd.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        if not isinstance(raw, Mapping):
            raw = {c: v for c, v in enumerate(raw) if v}
        row = _integral(raw)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                break
            p, c = piv[col], row[col]
            new = {k: v * p for k, v in row.items()}
            for k, v in piv.items():
                new[k] = new.get(k, 0) - c * v
            new = {k: v for k, v in new.items() if v}
            if new:
                g = math.gcd(*new.values())
                new = {k: v // g for k, v in new.items()}
            row = new
    return len(pivots)
