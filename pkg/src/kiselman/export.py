"""Text serializations of tables, elements, matrices and algebra elements."""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .matrices import Matrix, matrix_to_json
from .polynomials import MPoly
from .semigroup import SemigroupTable, is_idempotent


def cayley_table_csv(table: SemigroupTable) -> str:
    """Header row of element indices; row ``x``, column ``y`` holds the index of ``x*y``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    size = len(table)
    writer.writerow([""] + list(range(size)))
    for x, row in enumerate(table.product.tolist()):
        writer.writerow([x] + row)
    return buf.getvalue()


def elements_records(table: SemigroupTable) -> list[dict[str, Any]]:
    return [
        {
            "index": i,
            "word": list(el.letters),
            "content": sorted(el.content),
            "idempotent": is_idempotent(el),
        }
        for i, el in enumerate(table.elements)
    ]


def elements_json(table: SemigroupTable) -> str:
    return json.dumps(elements_records(table))


def _label(letters) -> str:
    return ",".join(map(str, letters)) or "e"


def cayley_graph_dot(table: SemigroupTable, name: str | None = None) -> str:
    """Right Cayley graph: an edge ``x -> x*a_g`` labelled ``g`` for every element and generator."""
    name = name or f"K{table.n}"
    lines = [f"digraph {name} {{"]
    for i, el in enumerate(table.elements):
        lines.append(f'  {i} [label="{_label(el.letters)}"];')
    for i in range(len(table)):
        for g, j in enumerate(table.right[i].tolist(), start=1):
            lines.append(f'  {i} -> {j} [label="{g}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrix_json(m: Matrix) -> str:
    return json.dumps(matrix_to_json(m))


def poly_matrix_json(m: Matrix) -> str:
    """Each entry is a polynomial: a list of ``{"coeff", "monomial"}`` records."""
    return json.dumps({"n": m.n, "entries": [[MPoly.lift(p).to_json() for p in row]
                                             for row in m.rows]})
