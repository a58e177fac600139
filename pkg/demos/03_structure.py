"""
Idempotents, nilpotent pieces and Green's relations
===================================================

K_n has exactly 2^n idempotents, one per subset of generators, and the
elements with a fixed content form a nilpotent subsemigroup. Green's
relations are all trivial.
"""

from kiselman.semigroup import (
    antiautomorphism_tau,
    automorphisms,
    enumerate_semigroup,
    green_classes,
    idempotents,
    natural_leq,
    nilpotent_partition,
    nilpotent_subsemigroup,
)

n = 3
table = enumerate_semigroup(n)

ids = sorted(idempotents(n), key=lambda f: (len(f), f.letters))
print("idempotents of K_3:", [str(f) or "e" for f in ids])

# Natural order on idempotents is reverse inclusion of contents.
print("\nf <= g  (rows f, columns g)")
for f in ids:
    print(f"{str(f) or 'e':>6s}", " ".join("x" if natural_leq(f, g) else "." for g in ids))

print("\nnilpotent blocks by content:")
for X, block in sorted(nilpotent_partition(table).items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
    nil = nilpotent_subsemigroup(table, X)
    print(f"  {sorted(X)!s:10s} size {len(block):2d}  zero {nil.zero}  class {nil.nilpotency_class}")

for rel in "LRHDJ":
    gc = green_classes(table, rel)
    print(f"Green {rel}: {len(gc.blocks)} classes for {len(table)} elements")

print("\nautomorphisms:", automorphisms(table))
x = table.elements[7]
print(f"tau({x}) = {antiautomorphism_tau(x)}")
