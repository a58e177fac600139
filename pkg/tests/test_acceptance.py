"""Acceptance criteria 1-12, one test each.

Every test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary, and also when this file is run directly with python3.
"""

from __future__ import annotations

import functools
import itertools
import subprocess
import sys
import time

from kiselman import algebra as alg
from kiselman import representations as rep
from kiselman import semigroup as sg
from kiselman.checks import PSI4_COLLISION, random_words
from kiselman.matrices import diagonal_unit, nilpotency_class_of_matrix
from kiselman.rewrite import confluence_check, normalize
from kiselman.words import is_canonical, length_bound, sharpness_word
from oracles import canonical_words_up_to

RESULTS: dict[int, tuple[bool, str]] = {}


def criterion(number: int, title: str):
    """Record the outcome of the wrapped test under ``number``."""
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            try:
                detail = fn() or ""
            except Exception as exc:
                RESULTS[number] = (False, f"{title}: {type(exc).__name__}: {exc}")
                raise
            RESULTS[number] = (True, f"{title}: {detail}" if detail else title)
        return run
    return wrap


def report_lines() -> list[str]:
    return [f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {msg}"
            for k, (ok, msg) in sorted(RESULTS.items())]


def brute_closure(n: int) -> set[tuple[int, ...]]:
    """Close {e} under right multiplication by generators, rewriting only by the oracle."""
    from oracles import all_irreducible_descendants
    seen, frontier = {()}, [()]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, n + 1):
                (v,) = all_irreducible_descendants(w + (i,))
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


@criterion(1, "|K_3| = 18 and `size -n 3` under 1 s")
def test_c01_size_k3():
    assert len(sg.enumerate_semigroup(3)) == 18
    t = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "kiselman", "size", "-n", "3"],
                          capture_output=True, text=True, check=True)
    elapsed = time.perf_counter() - t
    assert proc.stdout.splitlines()[0] == "18"
    assert elapsed < 1.0, elapsed
    return f"{elapsed:.2f} s"


@criterion(2, "sizes 2, 5, 18, 115, 1710; stable; n <= 5 under 60 s; size recursion n = 2..5")
def test_c02_sizes():
    assert len(brute_closure(1)) == 2 and len(brute_closure(2)) == 5
    fresh = sg.enumerate_semigroup.__wrapped__
    t = time.perf_counter()
    first = [fresh(n) for n in range(1, 6)]
    elapsed = time.perf_counter() - t
    second = [fresh(n) for n in range(1, 6)]
    assert [len(s) for s in first] == [2, 5, 18, 115, 1710]
    assert [s.elements for s in first] == [s.elements for s in second]
    assert elapsed < 60, elapsed
    for n in range(2, 6):
        assert alg.size_recursion_check(n), n
    return f"enumeration {elapsed:.2f} s"


@criterion(3, "confluence on 10000 seeded random words, n <= 5, length <= 12")
def test_c03_confluence():
    total = 0
    for n in range(1, 6):
        for w in random_words(n, 2000, 12, seed=100 + n):
            assert confluence_check(w, trials=3, seed=n), w
            assert is_canonical(normalize(w))
            total += 1
    assert total >= 10_000
    return f"{total} words, 3 random orders each"


@criterion(4, "2^n idempotents equal to {e_X} (n <= 5); e_X e_Y criterion on all pairs (n <= 4)")
def test_c04_idempotents():
    for n in range(1, 6):
        table = sg.enumerate_semigroup(n)
        p = table.product
        found = {table.elements[i] for i in range(len(table)) if p[i, i] == i}
        assert found == sg.idempotents(n) and len(found) == 2**n
    pairs = 0
    for n in range(1, 5):
        for X, Y in itertools.product(sg.all_contents(n), repeat=2):
            crit, value = sg.idempotent_product(X, Y, n)
            assert value == sg.idempotent(X, n) * sg.idempotent(Y, n)
            assert crit is sg.is_idempotent(value)
            pairs += 1
    return f"{pairs} pairs"


@criterion(5, "Green's L, R, H, D, J trivial and maximal subgroups trivial (n <= 4)")
def test_c05_green():
    for n in range(1, 5):
        table = sg.enumerate_semigroup(n)
        for which in "LRHDJ":
            gc = sg.green_classes(table, which)
            assert len(gc.blocks) == len(table) and gc.is_trivial()
        assert sg.maximal_subgroups_trivial(table)


@criterion(6, "w^|c(w)| = e_c(w) for every w (n <= 4)")
def test_c06_power():
    count = 0
    for n in range(1, 5):
        for w in sg.enumerate_semigroup(n):
            assert w ** max(len(w.content), 1) == sg.idempotent(w.content, n)
            count += 1
    return f"{count} elements"


@criterion(7, "max canonical length = L(n) (n <= 5); sharpness word canonical of length L(n) (n <= 8)")
def test_c07_lengths():
    for n in range(1, 6):
        assert max(len(el) for el in sg.enumerate_semigroup(n)) == length_bound(n)
    for n in range(1, 5):
        assert {el.letters for el in sg.enumerate_semigroup(n)} == canonical_words_up_to(
            n, length_bound(n))
    for n in range(1, 9):
        w = sharpness_word(n)
        assert is_canonical(w) and len(w) == length_bound(n)


@criterion(8, "psi_3 faithful, psi_4 witness, kappa faithful (n <= 4), kappa' (n <= 3), xi = 1 gives psi")
def test_c08_representations():
    t = time.perf_counter()
    t3, t4 = sg.enumerate_semigroup(3), sg.enumerate_semigroup(4)
    assert len(set(rep.images(t3, "psi"))) == 18
    assert rep.faithfulness_check(t3, "psi").faithful
    faithful, witness = rep.faithfulness_check(t4, "psi")
    assert not faithful and witness is not None
    u, v = (sg.Element.of(w, 4) for w in PSI4_COLLISION)
    assert u.letters == PSI4_COLLISION[0] and v.letters == PSI4_COLLISION[1]
    assert u != v and rep.psi(u) == rep.psi(v)
    for n in range(1, 5):
        assert rep.faithfulness_check(sg.enumerate_semigroup(n), "kappa").faithful
    for n in range(1, 4):
        table = sg.enumerate_semigroup(n)
        assert rep.faithfulness_check(table, "kappa-prime").faithful
        if n >= 2:
            bound = rep.ml_sequences(n).l_at(n)
            assert all(0 <= a < bound for m in rep.images(table, "kappa-prime") for a in m.entries())
    for n in range(1, 5):
        table = sg.enumerate_semigroup(n)
        ones = {(i, j): 1 for j in range(2, n + 1) for i in range(1, j)}
        assert all(rep.specialize(k, ones) == m
                   for k, m in zip(rep.images(table, "kappa"), rep.images(table, "psi")))
    elapsed = time.perf_counter() - t
    assert elapsed < 120, elapsed
    return f"{elapsed:.2f} s"


@criterion(9, "height strictly decreases (n <= 4); psi(a_1...a_n) has class n (n <= 6)")
def test_c09_height():
    pairs = 0
    for n in range(1, 5):
        table = sg.enumerate_semigroup(n)
        for x in table:
            for i in range(1, n + 1):
                y = sg.Element.generator(i, n) * x
                if y != x:
                    assert rep.height(y) < rep.height(x)
                    pairs += 1
    for n in range(1, 7):
        assert nilpotency_class_of_matrix(rep.psi(sg.Element.of(range(1, n + 1), n))) == n
    return f"{pairs} strict pairs"


@criterion(10, "primitive idempotents, psi(pi_i) = D_i, corner dimensions (n <= 4)")
def test_c10_algebra():
    for n in range(1, 5):
        report = alg.idempotent_system_check(n)
        assert report.ok, report.violations
        for i in range(1, n + 1):
            assert alg.psi_linear(alg.kiselman_projection(n, i)) == diagonal_unit(n, i)
    for n in range(2, 5):
        table = sg.enumerate_semigroup(n)
        an = alg.AlgebraElement.generator(n, n)
        comp = alg.AlgebraElement.unit(n) - an
        prev = len(sg.enumerate_semigroup(n - 1))
        assert alg.corner_dimension(table, an, comp) == 0
        assert alg.corner_dimension(table, an, an) == prev
        assert alg.corner_dimension(table, comp, comp) == prev


@criterion(11, "projective module faithful (n <= 4); annihilation certificate for X != {2..n} (n <= 3)")
def test_c11_module():
    for n in range(1, 5):
        table = sg.enumerate_semigroup(n)
        m = alg.projective_module(n)
        assert alg.module_faithfulness_check(m, table)
        assert alg.module_is_homomorphism(m, table)
    checked = 0
    for n in range(1, 4):
        for X in sg.all_contents(n):
            if X != frozenset(range(2, n + 1)):
                assert alg.nonfaithful_projective_witness(n, X)
                checked += 1
    return f"{checked} contents"


@criterion(12, "deletion properties exhaustive (n = 3) and 10000 samples (n = 4); trace locality")
def test_c12_deletion():
    parts = []
    for mode in ("prop15", "prop16"):
        r3 = sg.deletion_report(3, mode, exhaustive=True)
        r4 = sg.deletion_report(4, mode, budget=10_000, seed=2024, exhaustive=False)
        assert r3.ok and r4.ok, (r3.counterexamples[:3], r4.counterexamples[:3])
        assert r4.checked >= 10_000
        parts.append(f"{mode}: {r3.checked} + {r4.checked}")
    return "; ".join(parts)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except Exception:
                failed += 1
    print("\n".join(report_lines()))
    sys.exit(1 if failed else 0)
