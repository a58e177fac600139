"""
Enumerating K_n
===============

Builds K_n for small n, prints the sizes next to the crude bound and
shows the multiplication table of K_2.
"""

import time

import numpy as np

from kiselman.export import cayley_table_csv
from kiselman.semigroup import enumerate_semigroup, size_bound

for n in range(1, 6):
    t = time.perf_counter()
    table = enumerate_semigroup(n)
    dt = time.perf_counter() - t
    lengths = np.bincount([len(el) for el in table.elements])
    print(f"|K_{n}| = {len(table):5d}   bound {size_bound(n):>12d}   "
          f"{dt:.3f}s   words by length {lengths.tolist()}")

# Elements are indexed in shortlex order; row x, column y holds x*y.
k2 = enumerate_semigroup(2)
print("\nelements of K_2:", [str(el) or "e" for el in k2.elements])
print(cayley_table_csv(k2))

# The element 2,1 is the zero of K_2.
print("zero element:", k2.elements[k2.zero])
