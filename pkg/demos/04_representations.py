"""
Matrix representations
======================

Kiselman's 0/1 matrices represent K_3 faithfully but not K_4. Replacing
the ones above the diagonal by independent variables fixes that, and a
specific integer evaluation keeps it faithful.
"""

from kiselman.representations import (
    faithfulness_check,
    height,
    images,
    kappa,
    kappa_prime,
    ml_sequences,
    psi,
)
from kiselman.semigroup import Element, enumerate_semigroup

for n in (3, 4):
    result = faithfulness_check(enumerate_semigroup(n), "psi")
    print(f"psi_{n} faithful: {result.faithful}")
    if result.witness:
        u, v = result.witness
        print("  collision:", u, "and", v)
        print(psi(u))

u = Element.of((3, 4, 2, 1, 3, 2), 4)
print("\nsymbolic image of", u)
print(kappa(u))
big = kappa_prime(u)[0, 3]
print(f"integer image: one nonzero entry with {big.bit_length()} bits,"
      f" below l_4 which has {ml_sequences(4).l_at(4).bit_length()} bits")

for n in (3, 4):
    table = enumerate_semigroup(n)
    print(f"kappa_{n} faithful: {faithfulness_check(table, 'kappa').faithful};"
          f" distinct kappa' images: {len(set(images(table, 'kappa-prime')))} of {len(table)}")

# Left multiplication by a generator never increases the height.
x = Element.of((1, 2), 3)
for i in (1, 2, 3):
    y = Element.generator(i, 3) * x
    print(f"height(a{i}*{x}) = {height(y)}  vs  height({x}) = {height(x)}")
