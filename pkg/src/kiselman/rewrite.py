"""Length-reducing rewriting of words to their canonical forms.

A factor ``a_i u a_i`` with ``i`` not in ``u`` can be shortened in two ways:

* drop-right: if every letter of ``u`` is smaller than ``i``, ``a_i u a_i -> a_i u``;
* drop-left: if every letter of ``u`` is larger than ``i``, ``a_i u a_i -> u a_i``.

Both rules hold in K_n, every step removes one letter, and the system is
confluent, so every maximal reduction sequence ends in the same canonical word.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import StepNotApplicableError
from .words import Word, is_canonical


class StepKind(str, enum.Enum):
    DROP_RIGHT = "drop-right"
    DROP_LEFT = "drop-left"


@dataclass(frozen=True)
class ReductionStep:
    """One rewrite of the factor ``w[start..end]`` (inclusive), both ends equal to ``letter``."""

    start: int
    end: int
    letter: int
    kind: StepKind

    @property
    def deleted_position(self) -> int:
        return self.end if self.kind is StepKind.DROP_RIGHT else self.start


@dataclass(frozen=True)
class ReductionTrace:
    initial: Word
    steps: tuple[ReductionStep, ...]
    result: Word


def _steps(letters: Sequence[int]) -> list[ReductionStep]:
    found = []
    last: dict[int, int] = {}
    for pos, a in enumerate(letters):
        prev = last.get(a)
        if prev is not None:
            gap = letters[prev + 1:pos]
            if all(b < a for b in gap):
                found.append(ReductionStep(prev, pos, a, StepKind.DROP_RIGHT))
            if all(b > a for b in gap):
                found.append(ReductionStep(prev, pos, a, StepKind.DROP_LEFT))
        last[a] = pos
    # ties at one position: drop-right first
    found.sort(key=lambda s: (s.start, s.kind is not StepKind.DROP_RIGHT))
    return found


def _apply(letters: tuple[int, ...], step: ReductionStep) -> tuple[int, ...]:
    p = step.deleted_position
    return letters[:p] + letters[p + 1:]


def applicable_steps(w: Word) -> list[ReductionStep]:
    """All reduction steps applicable to ``w``, ordered by start position."""
    return _steps(w.letters)


def apply_step(w: Word, step: ReductionStep) -> Word:
    if step not in _steps(w.letters):
        raise StepNotApplicableError(f"{step} does not apply to {w}")
    return Word(_apply(w.letters, step), w.n)


@lru_cache(maxsize=1 << 18)
def normal_form(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form of a raw letter tuple (leftmost-step strategy)."""
    while True:
        steps = _steps(letters)
        if not steps:
            return letters
        letters = _apply(letters, steps[0])


def normalize(w: Word) -> Word:
    """The unique canonical word equal to ``w`` in K_n."""
    return Word(normal_form(w.letters), w.n)


def normalize_traced(w: Word, strategy: str = "leftmost") -> ReductionTrace:
    """Normalize ``w`` and record every step.

    ``strategy="leftmost"`` follows :func:`normalize`; ``"rightmost"`` always
    deletes the rightmost deletable letter instead.
    """
    if strategy == "leftmost":
        pick = lambda steps: steps[0]  # noqa: E731
    elif strategy == "rightmost":
        pick = lambda steps: max(steps, key=lambda s: s.deleted_position)  # noqa: E731
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    letters = w.letters
    log = []
    while True:
        steps = _steps(letters)
        if not steps:
            break
        step = pick(steps)
        log.append(step)
        letters = _apply(letters, step)
    return ReductionTrace(w, tuple(log), Word(letters, w.n))


def replay(trace: ReductionTrace) -> Word:
    w = trace.initial
    for step in trace.steps:
        w = apply_step(w, step)
    return w


def random_normal_form(w: Word, rng: random.Random) -> Word:
    """Reduce ``w`` picking each step uniformly among the applicable ones."""
    letters = w.letters
    while True:
        steps = _steps(letters)
        if not steps:
            return Word(letters, w.n)
        letters = _apply(letters, rng.choice(steps))


def confluence_check(w: Word, trials: int = 100, seed: int = 0) -> bool:
    """Check that ``trials`` random reduction orders all agree with :func:`normalize`."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    target = normalize(w)
    for _ in range(trials):
        got = random_normal_form(w, rng)
        if got != target or not is_canonical(got):
            return False
    return True
