"""Acceptance criteria, one printed PASS/FAIL line each.

Every check is exact integer arithmetic; the only tolerances are the
wall-clock budgets pinned below.
"""

import random
import time

import pytest

from braidhom.coxeter import CoxeterSystem, type_a, type_b
from braidhom.linalg import homology
from braidhom.oracle import compare_homology, fox_resolution_complex, random_custom_reps, random_word
from braidhom.representations import (
    burau_minus1,
    charpoly_of_word,
    find_intertwiner,
    intertwines,
    symplectic_rep,
    trivial_rep,
)
from braidhom.salvetti import build_complex, is_augmented, specialize, verify_d_squared
from braidhom.suites import suite_double_cover, suite_splitting_lemma, suite_torsion_theorem

TORSION_BUDGET_S = 60.0
TORSION_STRETCH_BUDGET_S = 600.0
D_SQUARED_BUDGET_S = 300.0
SPLITTING_BUDGET_S = 300.0
SEED = 20240601


def test_torsion_theorem(record):
    start = time.perf_counter()
    results = {n: suite_torsion_theorem(n, n - 1) for n in (3, 5, 7)}
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in results.values()) and elapsed < TORSION_BUDGET_S
    exps = {n: r.data["max_observed_exponent"] for n, r in results.items()}
    record("1", ok, f"n=3,5,7, k<=n-1, max exponents {exps}, {elapsed:.1f}s < {TORSION_BUDGET_S:.0f}s")
    assert ok


def test_torsion_theorem_stretch(record):
    start = time.perf_counter()
    r = suite_torsion_theorem(9, 8)
    elapsed = time.perf_counter() - start
    ok = r.passed and elapsed < TORSION_STRETCH_BUDGET_S
    record("1 stretch", ok, f"n=9, {elapsed:.1f}s < {TORSION_STRETCH_BUDGET_S:.0f}s")
    assert ok


def test_engine_soundness(record):
    start = time.perf_counter()
    bad = [str(s) for t in ("A", "B") for r in range(1, 9)
           for s in [CoxeterSystem(t, r)] if not verify_d_squared(build_complex(s)).ok]
    elapsed = time.perf_counter() - start
    # both wrong parities of the position sign, and a wrong length sign
    control = [not verify_d_squared(build_complex(type_a(4), (1, 0))).ok,
               not verify_d_squared(build_complex(type_b(3), (0, 0))).ok,
               not is_augmented(build_complex(type_a(3), (0, 1)))]
    ok = not bad and all(control) and elapsed < D_SQUARED_BUDGET_S
    record("2", ok, f"d^2=0 for A1..A8, B1..B8 ({elapsed:.1f}s), corrupted conventions caught: {control}")
    assert ok


def test_oracle_equivalence(record):
    rng = random.Random(SEED)
    failures = []
    cx3 = build_complex(type_a(3))
    reps3 = [trivial_rep(type_a(3)), symplectic_rep(3)] + random_custom_reps(3, 5, rng.randrange(2 ** 31))
    for rep in reps3:
        a = homology(specialize(cx3, rep))
        b = homology(fox_resolution_complex(3, rep))
        if not compare_homology(a, b, [0, 1, 2]).ok:
            failures.append(f"n=3 {rep.name}")
    for n in range(3, 10):
        cx = build_complex(type_a(n))
        reps = [trivial_rep(type_a(n))] + ([symplectic_rep(n)] if n % 2 else [])
        for rep in reps:
            a = homology(specialize(cx, rep), [0, 1])
            b = homology(fox_resolution_complex(n, rep), [0, 1])
            if not compare_homology(a, b, [0, 1]).ok:
                failures.append(f"n={n} {rep.name}")
    record("3", not failures, f"n=3 all degrees x {len(reps3)} coefficient systems; degrees 0-1 for n=3..9"
           + (f"; mismatches {failures}" if failures else ""))
    assert not failures


def test_representation_cross_check(record):
    rng = random.Random(SEED)
    details = []
    ok = True
    for n in (3, 5, 7):
        sym, bur = symplectic_rep(n), burau_minus1(n)
        P = find_intertwiner(sym, bur)
        words = [random_word(sym.system, rng.randint(1, 15), rng) for _ in range(200)]
        have_p = P is not None and intertwines(P, sym, bur)
        charpolys = all(charpoly_of_word(sym, w) == charpoly_of_word(bur, w) for w in words[:100])
        form = all(sym.preserves_form(sym.image(w)) for w in words)
        ok &= have_p and charpolys and form
        details.append(f"n={n}: P={P}")
    record("4", ok, "; ".join(details))
    assert ok


def test_splitting_lemma(record):
    start = time.perf_counter()
    reports = {n: suite_splitting_lemma(n, n - 1) for n in range(2, 7)}
    elapsed = time.perf_counter() - start
    failed = [n for n, r in reports.items() if not r.passed]
    ok = not failed and elapsed < SPLITTING_BUDGET_S
    record("5", ok, f"2<=n<=6, k<=n-1, {elapsed:.1f}s" + (f"; failing n {failed}" if failed else ""))
    assert ok


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_double_cover(record, n):
    r = suite_double_cover(n, n)
    failed = [v.assertion for v in r.verdicts if not v.passed]
    record(f"6 (n={n})", r.passed, "; ".join(failed) if failed else "all identities hold in every degree")
    assert not failed, "; ".join(failed)


def test_mapping_class_group_side_out_of_scope(record):
    record("7", False, "needs homology of mapping class groups; out of desk-computable scope", status="NOT RUN")
    pytest.skip("criterion 7 is explicitly not reproducible at desk scale")
