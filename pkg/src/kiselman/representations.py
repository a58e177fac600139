"""Matrix representations of K_n.

* ``psi``: Kiselman's 0/1 representation, ``a_i -> A_{n-i+1}``;
* ``kappa``: its parametric version over ``Z[xi[i,j] : 1 <= i < j <= n]``;
* ``kappa_prime``: ``kappa`` evaluated at ``xi[i,j] = m_j**i``, a faithful
  representation by nonnegative integer matrices.

Generators are indexed by letter: ``kiselman_generator(n, i)`` is the image of
``a_i``. Matrix rows and columns are 1-based in docstrings, 0-based in code.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Literal, Sequence

from .errors import LetterOutOfRangeError
from .matrices import Matrix, height_of_matrix
from .polynomials import MPoly
from .semigroup import Element, SemigroupTable

RepKind = Literal["psi", "kappa", "kappa-prime"]


def _column_index(n: int, i: int) -> int:
    if not 1 <= i <= n:
        raise LetterOutOfRangeError(f"letter {i} not in 1..{n}")
    return n - i + 1


@lru_cache(maxsize=None)
def kiselman_generator(n: int, i: int) -> Matrix:
    """Image of ``a_i`` under psi: ``A_j`` with ``j = n-i+1``.

    ``A_j`` is the identity with row ``j`` zeroed and column ``j`` replaced by
    ones in rows ``1..j-1``.
    """
    j = _column_index(n, i)
    return Matrix(tuple(
        tuple(int((r == c and r != j) or (c == j and r < j)) for c in range(1, n + 1))
        for r in range(1, n + 1)
    ))


@lru_cache(maxsize=None)
def kappa_generator(n: int, i: int) -> Matrix:
    """Image of ``a_i`` under kappa: like ``A_j`` but column ``j`` holds ``xi[1,j], ..., xi[j-1,j]``."""
    j = _column_index(n, i)
    zero, one = MPoly(), MPoly.const(1)

    def entry(r: int, c: int) -> MPoly:
        if r == c and r != j:
            return one
        if c == j and r < j:
            return MPoly.var(r, j)
        return zero

    return Matrix(tuple(tuple(entry(r, c) for c in range(1, n + 1)) for r in range(1, n + 1)))


@dataclass(frozen=True)
class MLSequences:
    m: tuple[int, ...]
    l: tuple[int, ...]  # noqa: E741

    def m_at(self, i: int) -> int:
        return self.m[i - 1]

    def l_at(self, i: int) -> int:
        return self.l[i - 1]


@lru_cache(maxsize=None)
def ml_sequences(upto: int) -> MLSequences:
    """``m_1 = l_1 = 1``, ``m_i = l_{i-1} + 1``, ``l_i = i**(2**i) * m_i**(i * 2**i)``."""
    if upto < 1:
        raise ValueError("upto must be >= 1")
    m, l = [1], [1]  # noqa: E741
    for i in range(2, upto + 1):
        m.append(l[-1] + 1)
        l.append(i ** (2**i) * m[-1] ** (i * 2**i))
    return MLSequences(tuple(m), tuple(l))


def kappa_prime_values(n: int) -> dict[tuple[int, int], int]:
    """The evaluation point ``xi[i,j] -> m_j**i``."""
    seq = ml_sequences(n)
    return {(i, j): seq.m_at(j) ** i for j in range(2, n + 1) for i in range(1, j)}


def specialize(m: Matrix, values: dict[tuple[int, int], int]) -> Matrix:
    return m.map(lambda p: p.evaluate(values))


@lru_cache(maxsize=None)
def kappa_prime_generator(n: int, i: int) -> Matrix:
    return specialize(kappa_generator(n, i), kappa_prime_values(n))


def _generator_fn(kind: RepKind) -> Callable[[int, int], Matrix]:
    try:
        return {"psi": kiselman_generator, "kappa": kappa_generator,
                "kappa-prime": kappa_prime_generator}[kind]
    except KeyError:
        raise ValueError(f"unknown representation {kind!r}") from None


def _identity(kind: RepKind, n: int) -> Matrix:
    if kind == "kappa":
        return Matrix.identity(n, MPoly.const(1), MPoly())
    return Matrix.identity(n)


def image_of_word(letters: Sequence[int], n: int, kind: RepKind = "psi") -> Matrix:
    """Product of generator images along an arbitrary word."""
    gen = _generator_fn(kind)
    out = _identity(kind, n)
    for a in letters:
        out = out @ gen(n, a)
    return out


def psi(x: Element) -> Matrix:
    return image_of_word(x.letters, x.n, "psi")


def kappa(x: Element) -> Matrix:
    return image_of_word(x.letters, x.n, "kappa")


def kappa_prime(x: Element) -> Matrix:
    return image_of_word(x.letters, x.n, "kappa-prime")


def height(x: Element) -> int:
    return height_of_matrix(psi(x))


_IMAGE_CACHE: "weakref.WeakKeyDictionary[SemigroupTable, dict[str, list[Matrix]]]" = \
    weakref.WeakKeyDictionary()


def images(table: SemigroupTable, kind: RepKind = "psi") -> list[Matrix]:
    """Images of all elements, in table order.

    Each element's canonical word extends that of its prefix, so one matrix
    product per element suffices. Results are memoized per table.
    """
    per_table = _IMAGE_CACHE.setdefault(table, {})
    if kind in per_table:
        return per_table[kind]
    gen = _generator_fn(kind)
    out = [_identity(kind, table.n)]
    for el in table.elements[1:]:
        w = el.letters
        out.append(out[table.index[w[:-1]]] @ gen(table.n, w[-1]))
    per_table[kind] = out
    return out


@dataclass(frozen=True)
class FaithfulnessResult:
    faithful: bool
    witness: tuple[Element, Element] | None = None

    def __iter__(self):
        return iter((self.faithful, self.witness))


def faithfulness_check(table: SemigroupTable, rep: RepKind = "psi") -> FaithfulnessResult:
    """Whether ``rep`` separates all elements; otherwise the first colliding pair in table order."""
    seen: dict[Matrix, int] = {}
    for idx, m in enumerate(images(table, rep)):
        prev = seen.setdefault(m, idx)
        if prev != idx:
            return FaithfulnessResult(False, (table.elements[prev], table.elements[idx]))
    return FaithfulnessResult(True)


def generator_relations_hold(gens: Sequence[Matrix]) -> bool:
    """Check ``M_i**2 = M_i`` and ``M_i M_j M_i = M_j M_i M_j = M_j M_i`` for ``i < j``.

    ``gens[k]`` is the image of letter ``k+1``.
    """
    for i, a in enumerate(gens):
        if a @ a != a:
            return False
        for b in gens[i + 1:]:
            ba = b @ a
            if a @ b @ a != ba or b @ a @ b != ba:
                return False
    return True
