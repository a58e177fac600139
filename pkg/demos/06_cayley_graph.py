"""
Cayley graph export
===================

Writes the right Cayley graph of K_3 in DOT format. Render it with
``dot -Tsvg k3.dot -o k3.svg`` if Graphviz is installed.
"""

import sys

from kiselman.export import cayley_graph_dot
from kiselman.semigroup import enumerate_semigroup

path = sys.argv[1] if len(sys.argv) > 1 else "k3.dot"
dot = cayley_graph_dot(enumerate_semigroup(3))
with open(path, "w") as fh:
    fh.write(dot)
print(f"wrote {path}: {dot.count('->')} edges")
print("\n".join(dot.splitlines()[:6]))
