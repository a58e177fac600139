"""Sparse multivariate polynomials with integer coefficients in variables xi[i, j].

A polynomial maps monomials to nonzero ``int`` coefficients. A monomial is a
sorted tuple of ``((i, j), exponent)`` pairs, so ``xi[1,2]**2 * xi[1,3]`` is
``(((1, 2), 2), ((1, 3), 1))`` and the constant monomial is ``()``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Var = tuple[int, int]
Monomial = tuple[tuple[Var, int], ...]

Scalar = Union[int, "MPoly"]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class MPoly:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> MPoly:
        return cls({(): c})

    @classmethod
    def var(cls, i: int, j: int) -> MPoly:
        if not 1 <= i < j:
            raise ValueError(f"variable xi[{i},{j}] needs 1 <= i < j")
        return cls({(((i, j), 1),): 1})

    @staticmethod
    def lift(x: Scalar) -> MPoly:
        return x if isinstance(x, MPoly) else MPoly.const(int(x))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: Scalar) -> MPoly:
        other = MPoly.lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Scalar) -> MPoly:
        return self + (-MPoly.lift(other))

    def __rsub__(self, other: Scalar) -> MPoly:
        return MPoly.lift(other) - self

    def __mul__(self, other: Scalar) -> MPoly:
        other = MPoly.lift(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v, _ in m}

    def evaluate(self, values: Mapping[Var, int]) -> int:
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t *= values[v] ** e
            total += t
        return total

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms by total degree, then lexicographically by monomial."""
        return sorted(self.terms.items(), key=lambda mc: (_degree(mc[0]), mc[0]))

    def coefficients(self) -> Iterable[int]:
        return self.terms.values()

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"xi{i}{j}" + (f"^{e}" if e > 1 else "") for (i, j), e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "monomial": {f"{i},{j}": e for (i, j), e in m}}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> MPoly:
        terms = {}
        for t in data:
            mono = tuple(sorted(
                ((int(k.split(",")[0]), int(k.split(",")[1])), int(e))
                for k, e in t["monomial"].items()
            ))
            terms[mono] = int(t["coeff"])
        return cls(terms)
