"""Words over the alphabet a_1, ..., a_n and their combinatorics.

Letters are 1-based integers, so the word ``a_3 a_1 a_2`` is ``Word((3, 1, 2), n)``.
The empty word stands for the unit ``e``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import LetterOutOfRangeError, RankMismatchError, WordParseError

# Largest rank the library is tested with. Word arithmetic itself has no cap;
# enumeration of the semigroup is what becomes infeasible (|K_6| = 83973 already).
MAX_RANK = 16

Content = frozenset  # frozenset[int], subset of {1..n}


def check_rank(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank must be a positive integer, got {n!r}")
    if n > MAX_RANK:
        raise ValueError(f"rank {n} exceeds supported maximum {MAX_RANK}")
    return n


@dataclass(frozen=True)
class Word:
    """An immutable word over ``{1..n}``."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        check_rank(self.n)
        for a in self.letters:
            if not 1 <= a <= self.n:
                raise LetterOutOfRangeError(f"letter {a} not in 1..{self.n}")

    @classmethod
    def unit(cls, n: int) -> Word:
        return cls((), n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if other.n != self.n:
            raise RankMismatchError(f"cannot concatenate words of rank {self.n} and {other.n}")
        return Word(self.letters + other.letters, self.n)

    def __str__(self) -> str:
        return format_word(self.letters)


def concat(u: Word, v: Word) -> Word:
    return u + v


def as_letters(w: Word | Sequence[int]) -> tuple[int, ...]:
    return w.letters if isinstance(w, Word) else tuple(w)


def parse_word(text: str, n: int) -> Word:
    """Parse ``"3,4,2,1"`` (or the digit shorthand ``"3421"`` when n <= 9)."""
    text = text.strip()
    if not text:
        return Word.unit(n)
    try:
        if "," in text:
            letters = tuple(int(tok) for tok in text.split(","))
        elif text.isdigit():
            if n > 9 and len(text) > 1:
                raise WordParseError(f"digit shorthand is ambiguous for n={n}; use commas")
            letters = tuple(int(ch) for ch in text)
        else:
            raise WordParseError(f"cannot parse word {text!r}")
        return Word(letters, n)
    except (ValueError, LetterOutOfRangeError) as exc:
        if isinstance(exc, WordParseError):
            raise
        raise WordParseError(f"cannot parse word {text!r}: {exc}") from exc


def format_word(letters: Iterable[int]) -> str:
    return ",".join(str(a) for a in letters)


def parse_content(text: str, n: int) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        xs = frozenset(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise WordParseError(f"cannot parse content {text!r}") from exc
    bad = [x for x in xs if not 1 <= x <= n]
    if bad:
        raise WordParseError(f"content letters {sorted(bad)} not in 1..{n}")
    return xs


def content(w: Word | Sequence[int]) -> frozenset[int]:
    """The set of letters occurring in ``w``."""
    return frozenset(as_letters(w))


def content_mask(letters: Iterable[int]) -> int:
    """Content as a bitset: bit ``i-1`` is set iff letter ``i`` occurs."""
    m = 0
    for a in letters:
        m |= 1 << (a - 1)
    return m


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def multiplicity(w: Word | Sequence[int], i: int) -> int:
    return as_letters(w).count(i)


def is_canonical(w: Word | Sequence[int]) -> bool:
    """True iff between any two occurrences of a letter ``i`` there is a larger
    and a smaller letter.

    Only consecutive occurrences are inspected. If a longer gap lacks, say, a
    larger letter, every consecutive sub-gap inside it lacks one too, so the
    consecutive check already fails there.
    """
    letters = as_letters(w)
    last: dict[int, int] = {}
    for pos, a in enumerate(letters):
        prev = last.get(a)
        if prev is not None:
            gap = letters[prev + 1:pos]
            if not (any(b > a for b in gap) and any(b < a for b in gap)):
                return False
        last[a] = pos
    return True


def length_bound(n: int) -> int:
    """Maximal length L(n) of a canonical word of rank n."""
    check_rank(n)
    k, odd = divmod(n, 2)
    return 3 * 2**k - 2 if odd else 2 ** (k + 1) - 2


def letter_multiplicity_bounds(n: int) -> list[int]:
    """Per-letter occurrence caps in canonical words; entry ``i-1`` is the cap for letter ``i``."""
    check_rank(n)
    half = math.ceil(n / 2)
    return [2 ** (i - 1) if i <= half else 2 ** (n - i) for i in range(1, n + 1)]


def delete_letter(w: Word, i: int) -> Word:
    """Remove every occurrence of letter ``i``."""
    if not 1 <= i <= w.n:
        raise LetterOutOfRangeError(f"letter {i} not in 1..{w.n}")
    return Word(tuple(a for a in w.letters if a != i), w.n)


def sharpness_word(n: int) -> Word:
    """A canonical word of the maximal length L(n).

    Built from the pairs ``(1, n), (2, n-1), ...`` (a single middle letter when n is
    odd): each stage wraps the next pair around every block of the previous stage.
    """
    check_rank(n)
    k = math.ceil(n / 2)
    pairs = [(i, n - i + 1) for i in range(1, k)]
    pairs.append((k, n - k + 1) if n % 2 == 0 else (k,))
    blocks: list[tuple[int, ...]] = [pairs[0]]
    for w in pairs[1:]:
        nxt = [w]
        for b in blocks:
            nxt += [b, w]
        blocks = nxt
    return Word(tuple(a for b in blocks for a in b), n)
