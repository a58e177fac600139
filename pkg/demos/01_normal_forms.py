"""
Normal forms in K_n
===================

Words in the generators a_1, ..., a_n reduce to a unique shortest word.
This walks through a reduction step by step and then checks that random
reduction orders always land on the same word.
"""

import random

from kiselman.rewrite import applicable_steps, normalize, normalize_traced, random_normal_form
from kiselman.words import Word, is_canonical, length_bound, sharpness_word

# a_1 a_2 a_1 a_2 in K_3: both ends of the factor 1,2,1 can be trimmed.
w = Word((1, 2, 1, 2), 3)
print("word:", w)
for step in applicable_steps(w):
    print("  applicable:", step.kind.value, "on letter", step.letter,
          "between positions", step.start, "and", step.end)

trace = normalize_traced(w)
for step in trace.steps:
    print(f"  {step.kind.value:10s} letter {step.letter}")
print("normal form:", trace.result, "canonical:", is_canonical(trace.result))

# Any order of reductions ends in the same place.
rng = random.Random(1)
long_word = Word(tuple(rng.randint(1, 4) for _ in range(12)), 4)
target = normalize(long_word)
orders = {random_normal_form(long_word, rng) for _ in range(50)}
print(f"\n{long_word} -> {target}; 50 random orders gave {len(orders)} distinct result(s)")

# Canonical words cannot be longer than L(n), and the bound is reached.
for n in range(1, 9):
    s = sharpness_word(n)
    print(f"n={n}  L(n)={length_bound(n):3d}  longest word: {s}")
