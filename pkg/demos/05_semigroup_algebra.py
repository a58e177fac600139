"""
The semigroup algebra QK_n
==========================

Primitive orthogonal idempotents, the corner decomposition behind the
size recursion, and a faithful projective module.
"""

from kiselman.algebra import (
    AlgebraElement,
    corner_dimensions,
    idempotent_system_check,
    module_faithfulness_check,
    primitive_idempotent,
    projective_module,
)
from kiselman.semigroup import all_contents, enumerate_semigroup

n = 3
for X in sorted(all_contents(n), key=lambda X: (len(X), sorted(X))):
    print(f"e_{sorted(X)!s:10s} = {primitive_idempotent(X, n)!r}")
print("system check:", idempotent_system_check(n).ok)

total = sum((primitive_idempotent(X, n) for X in all_contents(n)), AlgebraElement.zero(n))
print("sum of all e_X:", total)

# |K_n| = 2|K_{n-1}| + dim (e - a_n) QK_n a_n
print()
for m in range(2, 6):
    d = corner_dimensions(m)
    print(f"n={m}: corners {d.top}, {d.mixed_down}, {d.mixed_up}, {d.bottom}"
          f"  ->  {len(enumerate_semigroup(m))} = 2*{len(enumerate_semigroup(m - 1))} + {d.mixed_down}")

for m in range(1, 5):
    mod = projective_module(m)
    print(f"projective module for n={m}: dimension {mod.dimension},"
          f" faithful {module_faithfulness_check(mod, enumerate_semigroup(m))}")
