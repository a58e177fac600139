"""Command line interface: ``kiselman <command> -n N [options]``.

Exit codes: 0 success, 1 failed verification, 2 usage or parse error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import algebra as alg
from . import export
from . import representations as rep
from . import semigroup as sg
from .checks import SUITES, run_suites
from .errors import KiselmanError, ResourceLimitError
from .rewrite import normalize
from .words import format_word, is_canonical, length_bound, parse_content, parse_word

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# command -> (allowed formats, default format)
FORMATS = {
    "normalize": (("plain", "json"), "plain"),
    "size": (("plain", "json"), "plain"),
    "check": (("json",), "json"),
    "elements": (("json",), "json"),
    "table": (("csv", "json"), "csv"),
    "idempotents": (("json", "plain"), "json"),
    "green": (("json",), "json"),
    "nilpotent": (("json",), "json"),
    "repr": (("json",), "json"),
    "algebra-idempotents": (("json",), "json"),
    "corner-dims": (("json", "plain"), "json"),
    "export-cayley-graph": (("dot",), "dot"),
}


class UsageError(Exception):
    pass


def _table(args) -> sg.SemigroupTable:
    return sg.enumerate_semigroup(args.rank, args.element_cap)


def cmd_normalize(args) -> str:
    w = parse_word(args.word_text if args.word_text is not None else (args.word or ""), args.rank)
    v = normalize(w)
    if args.format == "json":
        return json.dumps({"input": list(w.letters), "canonical": list(v.letters),
                           "input_is_canonical": is_canonical(w)})
    return format_word(v.letters)


def cmd_size(args) -> str:
    size = len(_table(args))
    bound = sg.size_bound(args.rank)
    if args.format == "json":
        return json.dumps({"n": args.rank, "size": size, "bound": str(bound),
                           "max_length": length_bound(args.rank)})
    return f"{size}\nbound 1+n^L(n) = {bound}"


def cmd_elements(args) -> str:
    return export.elements_json(_table(args))


def cmd_table(args) -> str:
    table = _table(args)
    if args.format == "json":
        return json.dumps(table.product.tolist())
    return export.cayley_table_csv(table)


def cmd_idempotents(args) -> str:
    if args.content is not None:
        f = sg.idempotent(parse_content(args.content, args.rank), args.rank)
        return format_word(f.letters) if args.format == "plain" else json.dumps(list(f.letters))
    ids = sorted(sg.idempotents(args.rank), key=lambda f: (len(f), f.letters))
    if args.format == "plain":
        return "\n".join(format_word(f.letters) for f in ids)
    return json.dumps([list(f.letters) for f in ids])


def cmd_green(args) -> str:
    table = _table(args)
    rels = [args.relation] if args.relation else list("LRHDJ")
    out = {}
    for r in rels:
        gc = sg.green_classes(table, r)
        out[r] = {"classes": len(gc.blocks), "trivial": gc.is_trivial()}
    return json.dumps({"n": args.rank, "size": len(table), "relations": out})


def _nil_record(table, X) -> dict:
    nil = sg.nilpotent_subsemigroup(table, X)
    return {"content": sorted(X), "size": len(nil.members), "zero": list(nil.zero.letters),
            "class": nil.nilpotency_class,
            "members": sorted(list(m.letters) for m in nil.members)}


def cmd_nilpotent(args) -> str:
    table = _table(args)
    if args.content is not None:
        return json.dumps(_nil_record(table, parse_content(args.content, args.rank)))
    blocks = sg.nilpotent_partition(table)
    keys = sorted(blocks, key=lambda X: (len(X), sorted(X)))
    return json.dumps([_nil_record(table, X) for X in keys])


def cmd_repr(args) -> str:
    if args.word is not None:
        x = sg.Element.of(parse_word(args.word, args.rank).letters, args.rank)
        m = {"psi": rep.psi, "kappa": rep.kappa, "kappa-prime": rep.kappa_prime}[args.kind](x)
        if args.kind == "kappa":
            return export.poly_matrix_json(m)
        return export.matrix_json(m)
    result = rep.faithfulness_check(_table(args), args.kind)
    witness = None if result.witness is None else [list(w.letters) for w in result.witness]
    return json.dumps({"n": args.rank, "kind": args.kind, "faithful": result.faithful,
                       "witness": witness})


def cmd_algebra_idempotents(args) -> str:
    n = args.rank
    table = _table(args)
    out = []
    for X in sorted(sg.all_contents(n), key=lambda X: (len(X), sorted(X))):
        out.append({"X": sorted(X), "element": alg.primitive_idempotent(X, n).to_json(table)})
    return json.dumps(out)


def cmd_corner_dims(args) -> str:
    n = args.rank
    if n < 2:
        raise UsageError("corner-dims needs n >= 2")
    dims = alg.corner_dimensions(n)
    prev = len(sg.enumerate_semigroup(n - 1, args.element_cap))
    record = {"n": n, "a_n*a_n": dims.top, "(e-a_n)*a_n": dims.mixed_down,
              "a_n*(e-a_n)": dims.mixed_up, "(e-a_n)*(e-a_n)": dims.bottom,
              "size": len(_table(args)), "size_prev": prev,
              "recursion_holds": alg.size_recursion_check(n)}
    if args.format == "plain":
        return "\n".join(f"{k} {v}" for k, v in record.items())
    return json.dumps(record)


def cmd_export_cayley_graph(args) -> str:
    return export.cayley_graph_dot(_table(args))


def cmd_check(args) -> tuple[str, int]:
    report = run_suites(args.rank, args.suite, args.seed or 0)
    return json.dumps(report, indent=2), EXIT_OK if report["passed"] else EXIT_FAILED


COMMANDS = {
    "normalize": cmd_normalize,
    "size": cmd_size,
    "check": cmd_check,
    "elements": cmd_elements,
    "table": cmd_table,
    "idempotents": cmd_idempotents,
    "green": cmd_green,
    "nilpotent": cmd_nilpotent,
    "repr": cmd_repr,
    "algebra-idempotents": cmd_algebra_idempotents,
    "corner-dims": cmd_corner_dims,
    "export-cayley-graph": cmd_export_cayley_graph,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--rank", type=int, required=True, help="number of generators")
    common.add_argument("--format", choices=("json", "csv", "dot", "plain"))
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--element-cap", type=int, default=sg.DEFAULT_ELEMENT_CAP)
    common.add_argument("--out", help="write output to this path instead of stdout")

    parser = argparse.ArgumentParser(prog="kiselman", description="Exact computations in K_n.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("normalize", parents=[common], help="canonical form of a word")
    p.add_argument("word_text", nargs="?", help='word, e.g. "3,2,1,3" (or use --word)')
    p.add_argument("--word")
    sub.add_parser("size", parents=[common], help="|K_n| and the a priori bound")
    p = sub.add_parser("check", parents=[common], help="run invariant suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    sub.add_parser("elements", parents=[common], help="element list as JSON")
    sub.add_parser("table", parents=[common], help="Cayley table")
    p = sub.add_parser("idempotents", parents=[common], help="the 2^n idempotents e_X")
    p.add_argument("--content", help="only e_X for this comma-separated subset")
    p = sub.add_parser("green", parents=[common], help="Green's classes")
    p.add_argument("--relation", choices=tuple("LRHDJ"))
    p = sub.add_parser("nilpotent", parents=[common], help="maximal nilpotent subsemigroups")
    p.add_argument("--content", help="comma-separated subset, e.g. 1,3")
    p = sub.add_parser("repr", parents=[common], help="matrix representations")
    p.add_argument("--kind", choices=("psi", "kappa", "kappa-prime"), default="psi")
    p.add_argument("--word")
    sub.add_parser("algebra-idempotents", parents=[common],
                   help="primitive orthogonal idempotents of QK_n")
    sub.add_parser("corner-dims", parents=[common], help="corner algebra dimensions")
    sub.add_parser("export-cayley-graph", parents=[common], help="right Cayley graph as DOT")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    allowed, default = FORMATS[args.command]
    if args.format is None:
        args.format = default
    try:
        if args.format not in allowed:
            raise UsageError(f"format {args.format!r} not valid for {args.command}; "
                             f"choose from {', '.join(allowed)}")
        result = COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"kiselman: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, KiselmanError, ValueError) as exc:
        print(f"kiselman: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
