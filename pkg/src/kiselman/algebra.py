"""The rational semigroup algebra QK_n.

An :class:`AlgebraElement` is a finite rational combination of elements of
K_n, stored by canonical word. The zero element ``e_{1..n}`` of K_n is an
ordinary basis vector here; only :class:`IdealModule` drops it, which realizes
the quotient by the ideal it spans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union


from .errors import InvalidContentError, NotIdempotentError, RankMismatchError
from .linalg import exact_rank
from .matrices import Matrix
from .representations import kiselman_generator
from .rewrite import normal_form
from .semigroup import Element, SemigroupTable, all_contents, enumerate_semigroup, idempotent
from .words import Word, check_rank

Coeff = Union[int, Fraction]


class AlgebraElement:
    """Immutable element of QK_n; ``terms`` maps canonical letter tuples to nonzero Fractions."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], Coeff] | None = None):
        self.n = check_rank(n)
        self.terms: dict[tuple[int, ...], Fraction] = {
            w: Fraction(c) for w, c in (terms or {}).items() if c
        }

    @classmethod
    def zero(cls, n: int) -> AlgebraElement:
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> AlgebraElement:
        return cls(n, {(): 1})

    @classmethod
    def of(cls, x: Element | Iterable[int], n: int | None = None, coeff: Coeff = 1) -> AlgebraElement:
        if isinstance(x, Element):
            return cls(x.n, {x.letters: coeff})
        if n is None:
            raise ValueError("rank required for a raw word")
        return cls(n, {normal_form(tuple(x)): coeff})

    @classmethod
    def generator(cls, i: int, n: int) -> AlgebraElement:
        return cls.of(Element.generator(i, n))

    @property
    def coeffs(self) -> dict[Element, Fraction]:
        return {Element(Word(w, self.n)): c for w, c in self.terms.items()}

    def _check(self, other: AlgebraElement) -> None:
        if other.n != self.n:
            raise RankMismatchError(f"rank {self.n} vs rank {other.n}")

    def _lift(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, Element):
            return AlgebraElement.of(other)
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.n, {(): other})
        return NotImplemented

    def __add__(self, other) -> AlgebraElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return AlgebraElement(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> AlgebraElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> AlgebraElement:
        return (-self) + other

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.n, {w: c * other for w, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], Fraction] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = normal_form(u + v)
                out[w] = out.get(w, 0) + a * b
        return AlgebraElement(self.n, out)

    def __rmul__(self, other) -> AlgebraElement:
        if isinstance(other, (int, Fraction)):
            return self * other
        return self._lift(other) * self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_idempotent(self) -> bool:
        return self * self == self

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            name = "".join(f"a{a}" for a in w) or "e"
            parts.append(name if c == 1 else f"-{name}" if c == -1 else f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self, table: SemigroupTable | None = None) -> list[dict]:
        if table is None:
            items = self.sorted_terms()
        else:
            items = sorted(self.terms.items(), key=lambda wc: table.index[wc[0]])
        return [{"word": list(w), "coeff": f"{c.numerator}/{c.denominator}"} for w, c in items]

    @classmethod
    def from_json(cls, data: list[dict], n: int) -> AlgebraElement:
        return cls(n, {normal_form(tuple(t["word"])): Fraction(t["coeff"]) for t in data})


def algebra_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


# --- one-dimensional representations ---------------------------------------

def rho(X: Iterable[int], x: Element) -> Fraction:
    """1 if the content of ``x`` lies in ``X``, else 0."""
    return Fraction(int(frozenset(x.letters) <= frozenset(X)))


def rho_linear(X: Iterable[int], a: AlgebraElement) -> Fraction:
    X = frozenset(X)
    return sum((c for w, c in a.terms.items() if frozenset(w) <= X), Fraction(0))


# --- primitive idempotents -------------------------------------------------

def primitive_idempotent(X: Iterable[int], n: int) -> AlgebraElement:
    """``a_{i_1} ... a_{i_s} (e - a_{j_1}) ... (e - a_{j_t})``.

    ``i_1 > ... > i_s`` run over ``X`` and ``j_1 < ... < j_t`` over its complement.
    """
    X = frozenset(X)
    out = AlgebraElement.of(idempotent(X, n))
    one = AlgebraElement.unit(n)
    for j in sorted(set(range(1, n + 1)) - X):
        out = out * (one - AlgebraElement.generator(j, n))
    return out


@dataclass
class IdempotentSystemReport:
    n: int
    count: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def idempotent_system_check(n: int) -> IdempotentSystemReport:
    """Idempotency, pairwise orthogonality, sum equal to ``e`` and ``rho_Y(e_X) = [X == Y]``."""
    contents = all_contents(n)
    es = {X: primitive_idempotent(X, n) for X in contents}
    report = IdempotentSystemReport(n, len(es))
    total = AlgebraElement.zero(n)
    for X, ex in es.items():
        total = total + ex
        if not ex.is_idempotent():
            report.violations.append(f"e_{sorted(X)} is not idempotent")
        for Y, ey in es.items():
            if X != Y and not (ex * ey).is_zero():
                report.violations.append(f"e_{sorted(X)} e_{sorted(Y)} != 0")
            if rho_linear(Y, ex) != int(X == Y):
                report.violations.append(f"rho_{sorted(Y)}(e_{sorted(X)}) = {rho_linear(Y, ex)}")
    if total != AlgebraElement.unit(n):
        report.violations.append(f"sum of idempotents is {total!r}, not e")
    return report


def kiselman_projection(n: int, i: int) -> AlgebraElement:
    """``pi_i = a_n a_{n-1} ... a_{n-i+2} - a_n ... a_{n-i+1}``; ``pi_1 = e - a_n``, ``pi_n = a_n ... a_2``."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} not in 1..{n}")
    head = AlgebraElement.of(tuple(range(n, n - i + 1, -1)), n)
    if i == n:
        return head
    return head - AlgebraElement.of(tuple(range(n, n - i, -1)), n)


def psi_linear(a: AlgebraElement) -> Matrix:
    """Linear extension of Kiselman's representation to QK_n."""
    n = a.n
    out = Matrix.zeros(n, Fraction(0))
    for w, c in a.terms.items():
        m = Matrix.identity(n)
        for letter in w:
            m = m @ kiselman_generator(n, letter)
        out = out + m.scale(c)
    return out


# --- corner algebras -------------------------------------------------------

def _index_terms(table: SemigroupTable, a: AlgebraElement) -> list[tuple[int, Fraction]]:
    if a.n != table.n:
        raise RankMismatchError(f"rank {a.n} vs table rank {table.n}")
    return [(table.index[w], c) for w, c in a.terms.items()]


def sandwich_vectors(table: SemigroupTable, left: AlgebraElement,
                     right: AlgebraElement) -> list[dict[int, Fraction]]:
    """Coefficient vectors of ``left * x * right`` for every ``x`` in K_n (table order)."""
    p = table.product
    rows: list[dict[int, Fraction]] = [{} for _ in range(len(table))]
    for a, ca in _index_terms(table, left):
        ax = p[a, :]
        for b, cb in _index_terms(table, right):
            targets = p[ax, b]
            c = ca * cb
            for x, t in enumerate(targets.tolist()):
                rows[x][t] = rows[x].get(t, 0) + c
    return rows


def corner_dimension(table: SemigroupTable, left: AlgebraElement, right: AlgebraElement) -> int:
    """Dimension of ``left QK_n right`` for idempotents ``left`` and ``right``."""
    for f in (left, right):
        if not f.is_idempotent():
            raise NotIdempotentError(f"{f!r} is not idempotent")
    return exact_rank(sandwich_vectors(table, left, right))


@dataclass(frozen=True)
class CornerDimensions:
    """Dimensions of the four corners cut out by ``a_n`` and ``e - a_n``."""

    n: int
    top: int            # a_n QK_n a_n
    mixed_down: int     # (e - a_n) QK_n a_n
    mixed_up: int       # a_n QK_n (e - a_n)
    bottom: int         # (e - a_n) QK_n (e - a_n)

    @property
    def total(self) -> int:
        return self.top + self.mixed_down + self.mixed_up + self.bottom


def corner_dimensions(n: int) -> CornerDimensions:
    table = enumerate_semigroup(n)
    an = AlgebraElement.generator(n, n)
    comp = AlgebraElement.unit(n) - an
    return CornerDimensions(
        n,
        corner_dimension(table, an, an),
        corner_dimension(table, comp, an),
        corner_dimension(table, an, comp),
        corner_dimension(table, comp, comp),
    )


def size_recursion_check(n: int) -> bool:
    """``|K_n| = 2 |K_{n-1}| + dim (e - a_n) QK_n a_n`` with all quantities computed."""
    if n < 2:
        raise ValueError("needs n >= 2")
    table = enumerate_semigroup(n)
    an = AlgebraElement.generator(n, n)
    mixed = corner_dimension(table, AlgebraElement.unit(n) - an, an)
    return len(table) == 2 * len(enumerate_semigroup(n - 1)) + mixed


# --- the faithful projective module ---------------------------------------

@dataclass(frozen=True)
class IdealModule:
    """Left ideal ``K_n e_{2..n}`` without the zero element, with K_n acting on the left.

    Products landing on the zero element act as 0.
    """

    n: int
    basis: tuple[Element, ...]
    _position: dict = field(repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def action(self, x: Element) -> Matrix:
        dim = len(self.basis)
        cols = [self._position.get(normal_form(x.letters + b.letters)) for b in self.basis]
        return Matrix(tuple(
            tuple(int(cols[c] == r) for c in range(dim)) for r in range(dim)
        ))

    def action_matrices(self, table: SemigroupTable) -> list[Matrix]:
        return [self.action(x) for x in table.elements]


def projective_module(n: int) -> IdealModule:
    table = enumerate_semigroup(n)
    f = table.index_of(idempotent(range(2, n + 1), n))
    ideal = sorted(set(table.product[:, f].tolist()) - {table.zero})
    basis = tuple(table.elements[i] for i in ideal)
    return IdealModule(n, basis, {b.letters: k for k, b in enumerate(basis)})


def module_faithfulness_check(m: IdealModule, table: SemigroupTable) -> bool:
    mats = m.action_matrices(table)
    return len(set(mats)) == len(mats)


def module_is_homomorphism(m: IdealModule, table: SemigroupTable) -> bool:
    """``action(x y) = action(x) action(y)`` over the whole table, and ``action(e) = I``."""
    mats = m.action_matrices(table)
    if mats[0] != Matrix.identity(m.dimension):
        return False
    p = table.product
    return all(mats[p[x, y]] == mats[x] @ mats[y]
               for x in range(len(table)) for y in range(len(table)))


def nonfaithful_projective_witness(n: int, X: Iterable[int]) -> bool:
    """Whether ``(e_{2..n} - e_{1..n}) x e_X^{(n)} = 0`` for every ``x`` in K_n."""
    X = frozenset(X)
    if X == frozenset(range(2, n + 1)):
        raise InvalidContentError("X = {2..n} gives the faithful projective module")
    table = enumerate_semigroup(n)
    w = AlgebraElement.of(idempotent(range(2, n + 1), n)) - AlgebraElement.of(
        idempotent(range(1, n + 1), n))
    ex = primitive_idempotent(X, n)
    return all(not any(row.values()) for row in sandwich_vectors(table, w, ex))
