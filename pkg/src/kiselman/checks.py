"""Invariant suites over K_n, grouped as in the command line ``check`` subcommand."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import algebra as alg
from . import representations as rep
from . import semigroup as sg
from .errors import ResourceLimitError
from .matrices import diagonal_unit, height_of_matrix, nilpotency_class_of_matrix
from .rewrite import applicable_steps, confluence_check, normalize
from .words import Word, content, is_canonical, length_bound, sharpness_word

SUITES = ("rewrite", "structure", "repr", "algebra")

# Witness pair for the non-faithfulness of psi_4.
PSI4_COLLISION = ((3, 4, 2, 1, 3, 2), (3, 2, 4, 3, 1, 2))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), detail)


def random_words(n: int, count: int, max_len: int, seed: int) -> list[Word]:
    rng = random.Random(seed)
    return [Word(tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len))), n)
            for _ in range(count)]


def rewrite_suite(n: int, seed: int = 0, samples: int = 500) -> list[CheckResult]:
    out = []
    words = random_words(n, samples, 12, seed)
    bad = [w for w in words if not confluence_check(w, trials=5, seed=seed)]
    out.append(_result("confluence", not bad, f"{len(words)} words, seed {seed}"
                       + (f"; first failure {bad[0]}" if bad else "")))
    nfs = [normalize(w) for w in words]
    out.append(_result("normal-form-canonical", all(is_canonical(v) for v in nfs)))
    out.append(_result("normalize-idempotent", all(normalize(v) == v for v in nfs)))
    out.append(_result("content-preserved",
                       all(content(v) == content(w) for v, w in zip(nfs, words))))
    table = sg.enumerate_semigroup(n)
    out.append(_result("canonical-iff-irreducible",
                       all(not applicable_steps(el.word) for el in table.elements)
                       and all(is_canonical(w) == (not applicable_steps(w)) for w in words)))
    sw = sharpness_word(n)
    out.append(_result("sharpness-word", is_canonical(sw) and len(sw) == length_bound(n),
                       f"length {len(sw)}"))
    return out


def structure_suite(n: int, seed: int = 0) -> list[CheckResult]:
    out = []
    table = sg.enumerate_semigroup(n)
    out.append(_result("size-bound", len(table) <= sg.size_bound(n), f"|K_{n}| = {len(table)}"))
    out.append(_result("associative", table.is_associative()))
    p = table.product
    idem = {table.elements[i] for i in range(len(table)) if p[i, i] == i}
    out.append(_result("idempotent-census", idem == sg.idempotents(n) and len(idem) == 2**n,
                       f"{len(idem)} idempotents"))
    z = table.zero
    out.append(_result("zero-element", bool(np.all(p[z, :] == z) and np.all(p[:, z] == z))))
    for rel in "LRHDJ":
        gc = sg.green_classes(table, rel)
        out.append(_result(f"green-{rel}-trivial", gc.is_trivial(), f"{len(gc.blocks)} classes"))
    out.append(_result("maximal-subgroups-trivial", sg.maximal_subgroups_trivial(table)))
    powers_ok = all(el ** max(len(el.content), 1) == sg.idempotent(el.content, n)
                 for el in table.elements)
    out.append(_result("power-reaches-idempotent", powers_ok))
    ids = sorted(sg.idempotents(n), key=lambda f: f.letters)
    order_ok = all(sg.natural_leq(f1, f2) == (f2.content <= f1.content) for f1 in ids for f2 in ids)
    out.append(_result("natural-order", order_ok))
    blocks = sg.nilpotent_partition(table)
    out.append(_result("nilpotent-partition",
                       len(blocks) == 2**n and sum(map(len, blocks.values())) == len(table)))
    classes_ok = all(sg.nilpotent_subsemigroup(table, X).nilpotency_class == max(len(X), 1)
                     for X in blocks)
    out.append(_result("nilpotency-classes", classes_ok))
    tau = sg.antiautomorphism_tau
    tau_ok = all(tau(tau(x)) == x for x in table.elements)
    rng = random.Random(seed)
    pairs = [(rng.choice(table.elements), rng.choice(table.elements)) for _ in range(500)]
    tau_ok = tau_ok and all(tau(x * y) == tau(y) * tau(x) for x, y in pairs)
    out.append(_result("antiautomorphism", tau_ok))
    autos = sg.automorphisms(table)
    out.append(_result("automorphisms-trivial", autos == [tuple(range(1, n + 1))],
                       f"{len(autos)} extending permutations"))
    out.append(_result("max-length", max(len(el) for el in table.elements) == length_bound(n)))
    if n >= 2:
        for mode in ("prop15", "prop16"):
            r = sg.deletion_report(n, mode, seed=seed)
            out.append(_result(f"deletion-{mode}", r.ok, f"{r.checked} instances"))
    return out


def repr_suite(n: int, seed: int = 0) -> list[CheckResult]:
    out = []
    table = sg.enumerate_semigroup(n)
    for kind, gen in (("psi", rep.kiselman_generator), ("kappa", rep.kappa_generator),
                      ("kappa-prime", rep.kappa_prime_generator)):
        gens = [gen(n, i) for i in range(1, n + 1)]
        out.append(_result(f"{kind}-relations", rep.generator_relations_hold(gens)))
    faithful, witness = rep.faithfulness_check(table, "psi")
    expect = n <= 3
    detail = "" if witness is None else f"collision {witness[0]} / {witness[1]}"
    out.append(_result("psi-faithfulness", faithful == expect, detail))
    if n == 4:
        u, v = (sg.Element.of(w, 4) for w in PSI4_COLLISION)
        out.append(_result("psi4-remark-witness", u != v and rep.psi(u) == rep.psi(v)))
    out.append(_result("kappa-faithful", rep.faithfulness_check(table, "kappa").faithful))
    kappas = rep.images(table, "kappa")
    psis = rep.images(table, "psi")
    ones = {(i, j): 1 for j in range(2, n + 1) for i in range(1, j)}
    out.append(_result("kappa-specializes-to-psi",
                       all(rep.specialize(k, ones) == m for k, m in zip(kappas, psis))))
    if n <= 4:
        primes = rep.images(table, "kappa-prime")
        bound = rep.ml_sequences(n).l_at(n)
        out.append(_result("kappa-prime-faithful", len(set(primes)) == len(primes)))
        if n >= 2:  # l_1 = 1 while the unit matrix already has entry 1
            out.append(_result("kappa-prime-entry-bound",
                               all(0 <= a < bound for m in primes for a in m.entries())))
    heights = [height_of_matrix(m) for m in psis]
    heights_ok = all(heights[y] < heights[x]
                 for x in range(len(table)) for y in table.left[x].tolist() if y != x)
    out.append(_result("height-decreases", heights_ok))
    chain = sg.Element.of(range(1, n + 1), n)
    out.append(_result("nilpotency-class-n", nilpotency_class_of_matrix(rep.psi(chain)) == n))
    return out


def algebra_suite(n: int, seed: int = 0) -> list[CheckResult]:
    out = []
    table = sg.enumerate_semigroup(n)
    report = alg.idempotent_system_check(n)
    out.append(_result("primitive-idempotents", report.ok, "; ".join(report.violations[:3])))
    contents = sg.all_contents(n)
    p = table.product
    mult_ok = True
    for X in contents:
        vals = np.array([int(alg.rho(X, el)) for el in table.elements])
        mult_ok &= bool(np.all(vals[p] == vals[:, None] * vals[None, :]))
    out.append(_result("rho-multiplicative", mult_ok))
    signatures = {tuple(alg.rho(X, sg.Element.generator(i, n)) for i in range(1, n + 1))
                  for X in contents}
    out.append(_result("rho-distinct", len(signatures) == 2**n))
    out.append(_result("projections-diagonal",
                       all(alg.psi_linear(alg.kiselman_projection(n, i)) == diagonal_unit(n, i)
                           for i in range(1, n + 1))))
    if n >= 2:
        dims = alg.corner_dimensions(n)
        prev = len(sg.enumerate_semigroup(n - 1))
        out.append(_result("hom-p1-p2-zero", dims.mixed_up == 0))
        out.append(_result("corner-algebras", dims.top == dims.bottom == prev,
                           f"{dims.top}, {dims.bottom} vs |K_{n-1}| = {prev}"))
        out.append(_result("size-recursion", alg.size_recursion_check(n),
                           f"{len(table)} = 2*{prev} + {dims.mixed_down}"))
    module = alg.projective_module(n)
    out.append(_result("projective-module-faithful", alg.module_faithfulness_check(module, table),
                       f"dimension {module.dimension}"))
    if n <= 4:
        f = frozenset(range(2, n + 1))
        out.append(_result("non-faithful-projectives",
                           all(alg.nonfaithful_projective_witness(n, X)
                               for X in contents if X != f)))
    return out


SUITE_FUNCS: dict[str, Callable[..., list[CheckResult]]] = {
    "rewrite": rewrite_suite,
    "structure": structure_suite,
    "repr": repr_suite,
    "algebra": algebra_suite,
}


def run_suites(n: int, suite: str = "all", seed: int = 0) -> dict:
    """Run one suite (or all) and return a JSON-ready report; raises ResourceLimitError."""
    names = SUITES if suite == "all" else (suite,)
    if any(name not in SUITE_FUNCS for name in names):
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for name in names:
        for r in SUITE_FUNCS[name](n, seed=seed):
            results.append({"suite": name, **asdict(r)})
    return {
        "n": n,
        "suite": suite,
        "seed": seed,
        "passed": all(r["passed"] for r in results),
        "checks": results,
    }


__all__ = ["CheckResult", "run_suites", "SUITES", "ResourceLimitError"]
