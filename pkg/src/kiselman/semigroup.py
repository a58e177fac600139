"""The Kiselman semigroup K_n: elements, enumeration and structure.

Elements are stored by their canonical words. Enumeration walks the right
Cayley graph from the unit; the full product table is derived from it column
by column, so it costs one vectorized lookup per element rather than one
normalization per pair.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Literal

import numpy as np

from .errors import (
    NotIdempotentError,
    NotUnionClosedError,
    RankMismatchError,
    ResourceLimitError,
)
from .rewrite import StepKind, normal_form, normalize_traced
from .words import Word, check_rank, content_mask, is_canonical, length_bound, mask_to_set

DEFAULT_ELEMENT_CAP = 200_000
# Dense |S| x |S| product tables beyond this size are refused (n = 6 would need ~28 GB).
PRODUCT_TABLE_CAP = 20_000


@dataclass(frozen=True)
class Element:
    """An element of K_n, identified with its canonical word."""

    word: Word

    def __post_init__(self) -> None:
        if not is_canonical(self.word):
            raise ValueError(f"{self.word} is not canonical; use Element.of()")

    @classmethod
    def of(cls, letters: Iterable[int], n: int) -> Element:
        """The element represented by an arbitrary word."""
        return cls(Word(normal_form(tuple(letters)), n))

    @classmethod
    def unit(cls, n: int) -> Element:
        return cls(Word((), n))

    @classmethod
    def generator(cls, i: int, n: int) -> Element:
        return cls(Word((i,), n))

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def letters(self) -> tuple[int, ...]:
        return self.word.letters

    @property
    def content(self) -> frozenset[int]:
        return frozenset(self.word.letters)

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __pow__(self, k: int) -> Element:
        if k < 1:
            raise ValueError("only positive powers are defined")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return str(self.word)

    def __repr__(self) -> str:
        return f"Element({list(self.letters)}, n={self.n})"


def multiply(x: Element, y: Element) -> Element:
    if x.n != y.n:
        raise RankMismatchError(f"rank {x.n} vs rank {y.n}")
    return Element(Word(normal_form(x.letters + y.letters), x.n))


def _shortlex(letters: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (len(letters), letters)


@dataclass(frozen=True, eq=False)
class SemigroupTable:
    """All elements of K_n in shortlex order, with Cayley graphs and the product table.

    ``right[x, g-1]`` is the index of ``x * a_g`` and ``left[x, g-1]`` that of
    ``a_g * x``. The dense ``product`` array is built on first access.
    """

    n: int
    elements: tuple[Element, ...]
    index: dict[tuple[int, ...], int] = field(repr=False)
    right: np.ndarray = field(repr=False)
    left: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def index_of(self, x: Element | Iterable[int]) -> int:
        letters = x.letters if isinstance(x, Element) else normal_form(tuple(x))
        return self.index[letters]

    def __getitem__(self, i: int) -> Element:
        return self.elements[i]

    @cached_property
    def product(self) -> np.ndarray:
        size = len(self.elements)
        if size > PRODUCT_TABLE_CAP:
            raise ResourceLimitError(
                f"product table for {size} elements exceeds cap {PRODUCT_TABLE_CAP}"
            )
        table = np.empty((size, size), dtype=np.int32)
        table[:, 0] = np.arange(size)
        # shortlex order puts the prefix y[:-1] before y, so its column is ready
        for j, el in enumerate(self.elements[1:], start=1):
            w = el.letters
            table[:, j] = self.right[table[:, self.index[w[:-1]]], w[-1] - 1]
        table.setflags(write=False)
        return table

    def mul(self, i: int, j: int) -> int:
        return int(self.product[i, j])

    @cached_property
    def contents(self) -> np.ndarray:
        """Content bitmask of each element."""
        return np.array([content_mask(el.letters) for el in self.elements], dtype=np.int64)

    @cached_property
    def zero(self) -> int:
        return self.index[tuple(range(self.n, 0, -1))]

    def is_associative(self) -> bool:
        p = self.product
        # (xy)z == x(yz) for all triples, one z column at a time
        for z in range(len(self)):
            if not np.array_equal(p[p, z], p[:, p[:, z]]):
                return False
        return True


@lru_cache(maxsize=16)
def enumerate_semigroup(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> SemigroupTable:
    """Enumerate K_n by breadth-first closure of ``{e}`` under right multiplication."""
    check_rank(n)
    seen = {(): None}
    queue = deque([()])
    while queue:
        w = queue.popleft()
        for g in range(1, n + 1):
            v = normal_form(w + (g,))
            if v not in seen:
                seen[v] = None
                if len(seen) > element_cap:
                    raise ResourceLimitError(f"K_{n} has more than {element_cap} elements")
                queue.append(v)
    words = sorted(seen, key=_shortlex)
    index = {w: i for i, w in enumerate(words)}
    right = np.array([[index[normal_form(w + (g,))] for g in range(1, n + 1)] for w in words],
                     dtype=np.int32)
    left = np.array([[index[normal_form((g,) + w)] for g in range(1, n + 1)] for w in words],
                    dtype=np.int32)
    right.setflags(write=False)
    left.setflags(write=False)
    elements = tuple(Element(Word(w, n)) for w in words)
    return SemigroupTable(n, elements, index, right, left)


def size_bound(n: int) -> int:
    """Upper bound ``1 + n**L(n)`` on |K_n|."""
    return 1 + n ** length_bound(n)


# --- idempotents -----------------------------------------------------------

def idempotent(X: Iterable[int], n: int) -> Element:
    """``e_X``: the generators indexed by ``X`` multiplied in decreasing order."""
    xs = sorted(set(X), reverse=True)
    return Element(Word(tuple(xs), n))


def all_contents(n: int) -> list[frozenset[int]]:
    return [mask_to_set(m) for m in range(2**n)]


def idempotents(n: int) -> set[Element]:
    return {idempotent(X, n) for X in all_contents(n)}


def is_idempotent(x: Element) -> bool:
    return x * x == x


def power_to_idempotent(w: Element) -> tuple[int, Element]:
    """Least ``k >= 1`` with ``w**k`` idempotent, together with that idempotent."""
    k, p = 1, w
    while not is_idempotent(p):
        p = p * w
        k += 1
    return k, p


def idempotent_product(X: Iterable[int], Y: Iterable[int], n: int) -> tuple[bool, Element]:
    """``e_X e_Y`` and whether it is idempotent.

    It is idempotent exactly when every letter in X minus Y exceeds every
    letter in Y minus X; in that case it equals ``e_{X | Y}``.
    """
    X, Y = frozenset(X), frozenset(Y)
    value = idempotent(X, n) * idempotent(Y, n)
    ok = all(i > j for i in X - Y for j in Y - X)
    return ok, value


def natural_leq(f1: Element, f2: Element) -> bool:
    """Natural partial order ``f1 <= f2`` iff ``f1 f2 = f2 f1 = f1``."""
    for f in (f1, f2):
        if not is_idempotent(f):
            raise NotIdempotentError(f"{f!r} is not idempotent")
    return f1 * f2 == f1 and f2 * f1 == f1


# --- nilpotent subsemigroups ----------------------------------------------

@dataclass(frozen=True)
class NilpotentSubsemigroup:
    members: frozenset[Element]
    zero: Element
    nilpotency_class: int


def nilpotent_subsemigroup(table: SemigroupTable, X: Iterable[int]) -> NilpotentSubsemigroup:
    """``Nil(X)``, the elements of content exactly ``X``.

    The nilpotency class is measured by iterating set products until only the
    zero ``e_X`` remains.
    """
    mask = content_mask(X)
    idx = np.flatnonzero(table.contents == mask)
    zero = table.index_of(idempotent(X, table.n))
    p = table.product
    power = set(idx.tolist())
    k = 1
    while power != {zero}:
        power = set(np.unique(p[np.fromiter(power, dtype=np.int64)][:, idx]).tolist())
        k += 1
        if k > table.n + 1:
            raise AssertionError(f"Nil({sorted(X)}) is not nilpotent")
    members = frozenset(table.elements[i] for i in idx)
    return NilpotentSubsemigroup(members, table.elements[zero], k)


def nilpotent_partition(table: SemigroupTable) -> dict[frozenset[int], frozenset[Element]]:
    blocks: dict[frozenset[int], set[Element]] = {}
    for el, m in zip(table.elements, table.contents.tolist()):
        blocks.setdefault(mask_to_set(m), set()).add(el)
    return {X: frozenset(b) for X, b in blocks.items()}


# --- Green's relations ----------------------------------------------------

GreenRelation = Literal["L", "R", "H", "D", "J"]


@dataclass(frozen=True)
class GreenClasses:
    relation: str
    blocks: tuple[tuple[int, ...], ...]

    def is_trivial(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)


def _ideal_matrices(table: SemigroupTable) -> dict[str, np.ndarray]:
    p = table.product
    size = len(table)
    rows = np.arange(size)[:, None]
    right_ideal = np.zeros((size, size), dtype=bool)
    right_ideal[rows, p] = True        # x S^1
    left_ideal = np.zeros((size, size), dtype=bool)
    left_ideal[rows, p.T] = True       # S^1 x
    # S^1 x S^1 is the union of the right ideals of all s x
    two_sided = (left_ideal.astype(np.int32) @ right_ideal.astype(np.int32)) > 0
    return {"R": right_ideal, "L": left_ideal, "J": two_sided}


def _partition_by_keys(keys: list) -> tuple[tuple[int, ...], ...]:
    groups: dict = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return tuple(tuple(g) for g in groups.values())


def green_classes(table: SemigroupTable, which: GreenRelation) -> GreenClasses:
    """Green's classes from equality of principal ideals (D = J as K_n is finite)."""
    if which not in ("L", "R", "H", "D", "J"):
        raise ValueError(f"unknown Green relation {which!r}")
    ideals = _ideal_matrices(table)
    key = lambda rel: [row.tobytes() for row in ideals[rel]]  # noqa: E731
    if which == "H":
        keys = list(zip(key("L"), key("R")))
    else:
        keys = key("J" if which == "D" else which)
    return GreenClasses(which, _partition_by_keys(keys))


def maximal_subgroups_trivial(table: SemigroupTable) -> bool:
    """True iff each idempotent ``f`` is the only unit of its local monoid ``f S f``."""
    p = table.product
    idx = np.arange(len(table))
    for f in range(len(table)):
        if p[f, f] != f:
            continue
        cand = idx[(p[:, f] == idx) & (p[f, :] == idx)]
        for x in cand:
            if x == f:
                continue
            if np.any((p[x, :] == f) & (p[:, x] == f)):
                return False
    return True


# --- (anti)automorphisms --------------------------------------------------

def automorphisms(table: SemigroupTable) -> list[tuple[int, ...]]:
    """Generator permutations that extend to automorphisms.

    A permutation ``sigma`` (``sigma[i-1]`` is the image of letter ``i``) is kept
    when the induced map on canonical words is bijective and respects the
    product table.
    """
    n = table.n
    p = table.product
    found = []
    for sigma in itertools.permutations(range(1, n + 1)):
        phi = np.array([table.index_of(tuple(sigma[a - 1] for a in el.letters))
                        for el in table.elements])
        if len(set(phi.tolist())) != len(phi):
            continue
        if np.array_equal(phi[p], p[phi][:, phi]):
            found.append(sigma)
    return found


def antiautomorphism_tau(x: Element) -> Element:
    """Image under the antiautomorphism induced by ``a_i -> a_{n-i+1}``."""
    n = x.n
    return Element.of((n + 1 - a for a in reversed(x.letters)), n)


# --- isolated subsemigroups -----------------------------------------------

def _is_union_closed(masks: set[int]) -> bool:
    return all(a | b in masks for a in masks for b in masks)


def union_closed_families(n: int) -> set[frozenset[frozenset[int]]]:
    """All nonempty union-closed families of subsets of ``{1..n}``; feasible for n <= 4."""
    if n > 4:
        raise ResourceLimitError("union-closed families are enumerated for n <= 4 only")
    universe = 2**n
    found = set()
    for bits in range(1, 2**universe):
        masks = {m for m in range(universe) if bits >> m & 1}
        if _is_union_closed(masks):
            found.add(frozenset(mask_to_set(m) for m in masks))
    return found


def isolated_preimage(table: SemigroupTable, T: Iterable[Iterable[int]]) -> frozenset[Element]:
    """Elements whose content lies in the union-closed family ``T``."""
    masks = {content_mask(X) for X in T}
    if not masks or not _is_union_closed(masks):
        raise NotUnionClosedError("family is not a nonempty union-closed family")
    return frozenset(el for el, m in zip(table.elements, table.contents.tolist()) if m in masks)


def is_subsemigroup(table: SemigroupTable, S: Iterable[Element]) -> bool:
    idx = np.array(sorted(table.index_of(x) for x in S))
    return bool(np.isin(table.product[np.ix_(idx, idx)], idx).all())


def is_isolated(table: SemigroupTable, S: Iterable[Element]) -> bool:
    """Brute force: a subsemigroup with ``x**l in S => x in S``."""
    S = set(S)
    if not is_subsemigroup(table, S):
        return False
    inside = np.zeros(len(table), dtype=bool)
    inside[[table.index_of(x) for x in S]] = True
    p = table.product
    for x in range(len(table)):
        if inside[x]:
            continue
        power = x
        for _ in range(table.n + 1):
            if inside[power]:
                return False
            power = p[power, x]
    return True


def is_completely_isolated(table: SemigroupTable, S: Iterable[Element]) -> bool:
    """Brute force: ``xy in S => x in S or y in S``."""
    S = set(S)
    if not is_subsemigroup(table, S):
        return False
    inside = np.zeros(len(table), dtype=bool)
    inside[[table.index_of(x) for x in S]] = True
    prod_inside = inside[table.product]
    either = inside[:, None] | inside[None, :]
    return bool(np.all(either | ~prod_inside))


def completely_isolated_check(T: Iterable[Iterable[int]], n: int) -> bool:
    """Whether the union-closed family ``T`` satisfies ``A | B in T => A in T or B in T``."""
    masks = {content_mask(X) for X in T}
    if not masks or not _is_union_closed(masks):
        raise NotUnionClosedError("family is not a nonempty union-closed family")
    universe = range(2**n)
    return all(a in masks or b in masks for a in universe for b in universe if a | b in masks)


# --- deletion properties --------------------------------------------------

@lru_cache(maxsize=16)
def canonical_words_without_one(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical words over ``{2..n}`` (K_{n-1} shifted up by one letter)."""
    if n == 1:
        return ((),)
    return tuple(tuple(a + 1 for a in el.letters) for el in enumerate_semigroup(n - 1))


def trace_locality_violation(alpha: tuple[int, ...], beta: tuple[int, ...], n: int) -> str | None:
    """Check the trace locality of ``alpha beta`` when ``alpha 1 beta`` is canonical.

    Every step must delete a letter of the ``alpha`` part by the drop-left rule
    and, under the rightmost-deletion strategy, deletions move strictly left.
    Returns a description of the first violation, or None.
    """
    w = Word(alpha + beta, n)
    for strategy in ("leftmost", "rightmost"):
        trace = normalize_traced(w, strategy)
        deleted = [s.deleted_position for s in trace.steps]
        for j, s in enumerate(trace.steps):
            if s.kind is not StepKind.DROP_LEFT or s.deleted_position >= len(alpha) - j:
                return f"{strategy}: step {s} leaves the alpha region"
        if strategy == "rightmost" and any(b >= a for a, b in zip(deleted, deleted[1:])):
            return f"rightmost: deletions {deleted} do not move left"
    return None


@dataclass(frozen=True)
class DeletionReport:
    mode: str
    n: int
    exhaustive: bool
    checked: int
    counterexamples: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def deletion_report(n: int, mode: Literal["prop15", "prop16"], budget: int = 10_000,
                    seed: int = 0, exhaustive: bool | None = None) -> DeletionReport:
    """Search for counterexamples to the first (prop15) or second (prop16) deletion property.

    By default all instances are checked when there are at most ``budget`` of
    them; otherwise ``budget`` instances are drawn (with replacement) from a
    seeded generator. Pass ``exhaustive`` to force either behaviour. For prop16
    each instance also checks trace locality of ``w u`` and ``w v``.
    """
    if n < 2:
        raise ValueError("deletion properties need n >= 2")
    nf = normal_form
    words = canonical_words_without_one(n)
    f = tuple(range(n, 1, -1))
    bad = []
    if mode == "prop15":
        if exhaustive is None:
            exhaustive = len(words) ** 2 <= budget
        if exhaustive:
            pairs = itertools.product(words, repeat=2)
        else:
            rng = random.Random(seed)
            pairs = (tuple(rng.sample(words, 2)) for _ in range(budget))
        checked = 0
        for v, w in pairs:
            if v == w:
                continue
            checked += 1
            if nf(v + (1,) + f) == nf(w + (1,) + f):
                bad.append((v, w))
        return DeletionReport(mode, n, exhaustive, checked, tuple(bad))
    if mode != "prop16":
        raise ValueError(f"unknown mode {mode!r}")

    # admissible (w, u) pairs: w 1 u canonical
    tails: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for w in words:
        tails[w] = [u for u in words if is_canonical(w + (1,) + u)]
    triples = [(w, u, v) for w in words for u in tails[w] for v in tails[w] if u != v]
    if exhaustive is None:
        exhaustive = len(triples) <= budget
    if exhaustive:
        sample = triples
    else:
        rng = random.Random(seed)
        sample = [rng.choice(triples) for _ in range(budget)]
    for w, u, v in sample:
        if (nf(w + v) == nf(w + u)
                or nf(w + v + (1,)) == nf(w + u + (1,))
                or nf(w + v + (1,) + f) == nf(w + u + (1,) + f)):
            bad.append((w, u, v))
        for tail in (u, v):
            msg = trace_locality_violation(w, tail, n)
            if msg:
                bad.append((w, tail, msg))
    return DeletionReport(mode, n, exhaustive, len(sample), tuple(bad))


def deletion_property_check(n: int, mode: Literal["prop15", "prop16"], budget: int = 10_000,
                            seed: int = 0, exhaustive: bool | None = None) -> bool:
    return deletion_report(n, mode, budget, seed, exhaustive).ok
