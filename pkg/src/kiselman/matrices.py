"""Small dense square matrices over exact rings (int, Fraction, MPoly)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .errors import NotNilpotentError


@dataclass(frozen=True)
class Matrix:
    """Square matrix stored as a tuple of row tuples; hashable, so images can be deduplicated."""

    rows: tuple[tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int, one: Any = 1, zero: Any = 0) -> Matrix:
        return cls(tuple(tuple(one if r == c else zero for c in range(n)) for r in range(n)))

    @classmethod
    def zeros(cls, n: int, zero: Any = 0) -> Matrix:
        return cls(tuple((zero,) * n for _ in range(n)))

    def __getitem__(self, rc: tuple[int, int]) -> Any:
        r, c = rc
        return self.rows[r][c]

    def __matmul__(self, other: Matrix) -> Matrix:
        n = self.n
        if other.n != n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        zero = self.rows[0][0] * 0 if n else 0
        out = []
        for row in self.rows:
            nz = [(k, a) for k, a in enumerate(row) if a]
            new_row = []
            for col in cols:
                acc = zero
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = a * b + acc
                new_row.append(acc)
            out.append(tuple(new_row))
        return Matrix(tuple(out))

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scale(self, c: Any) -> Matrix:
        return self.map(lambda a: c * a)

    def map(self, f: Callable[[Any], Any]) -> Matrix:
        return Matrix(tuple(tuple(f(a) for a in r) for r in self.rows))

    def entries(self) -> list[Any]:
        return [a for r in self.rows for a in r]

    def is_zero(self) -> bool:
        return not any(self.entries())

    def __pow__(self, k: int) -> Matrix:
        if k < 0:
            raise ValueError("negative power")
        out = Matrix.identity(self.n)
        for _ in range(k):
            out = out @ self
        return out

    def tolist(self) -> list[list[Any]]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        return f"Matrix({self.tolist()})"


def int_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return Matrix(tuple(tuple(int(a) for a in r) for r in rows))


def diagonal_unit(n: int, i: int) -> Matrix:
    """``D_i``: the n x n matrix with a single 1 at diagonal position ``(i, i)`` (1-based)."""
    return Matrix(tuple(tuple(int(r == c == i - 1) for c in range(n)) for r in range(n)))


def nilpotency_class_of_matrix(m: Matrix) -> int:
    """Least ``k >= 1`` with ``m**k == 0``."""
    power = m
    for k in range(1, m.n + 1):
        if power.is_zero():
            return k
        power = power @ m
    raise NotNilpotentError(f"matrix is not nilpotent: its {m.n}-th power is nonzero")


def height_of_matrix(m: Matrix) -> int:
    """Sum over rows (1-based) of ``2**row`` times the number of nonzero entries in the row."""
    return sum(sum(1 for a in row if a) << r for r, row in enumerate(m.rows, start=1))


def matrix_to_json(m: Matrix) -> dict:
    def enc(a: Any) -> str:
        if isinstance(a, Fraction):
            return str(a) if a.denominator != 1 else str(a.numerator)
        return str(a)
    return {"n": m.n, "entries": [[enc(a) for a in r] for r in m.rows]}


def matrix_from_json(data: dict) -> Matrix:
    return Matrix(tuple(tuple(Fraction(a) if "/" in a else int(a) for a in r)
                        for r in data["entries"]))
