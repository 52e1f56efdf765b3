"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

All comparisons are exact (zero tolerance).
"""

import random
import time

import pytest

from weldbraid.burau import burau_evaluated, word_matrix
from weldbraid.fox import fox_action_matrix, fundamental_check
from weldbraid.galgebra import kron, laurent_matrix
from weldbraid.gassner import delete_rows_cols, gassner_evaluated, gassner_symbolic, iterate
from weldbraid.laurent import BETA, ONE, alpha
from weldbraid.presentations import Family, forbidden_relator, relators, twin_relator
from weldbraid.verify import verify_rep
from weldbraid.words import sigma, tau, word_to_auto

from test_gassner import EXAMPLE_12, EXAMPLE_12_RENDERED


@pytest.fixture
def report(capsys):
    def emit(number, title, checks, elapsed=None):
        failed = [name for name, ok in checks if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"[{status}] criterion {number}: {title}"
        if elapsed is not None:
            line += f" ({elapsed:.2f}s)"
        if failed:
            line += " -- failed: " + "; ".join(failed)
        with capsys.disabled():
            print("\n" + line)
        assert not failed, line

    return emit


def _pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def test_criterion_1_artin_suite(report):
    start = time.perf_counter()
    checks = []
    for n in range(3, 7):
        ok = all(word_to_auto(r.lhs, n) == word_to_auto(r.rhs, n) for r in relators(Family.WELDED, n))
        checks.append((f"WB_{n} relators act trivially", ok))
    twin = twin_relator(1, 3)
    checks.append(("twin sides differ at n=3", word_to_auto(twin.lhs, 3) != word_to_auto(twin.rhs, 3)))
    elapsed = time.perf_counter() - start
    checks.append(("runtime < 5 s", elapsed < 5))
    report(1, "Artin suite", checks, elapsed)


def test_criterion_2_burau_relators(report):
    start = time.perf_counter()
    checks = []
    for n in (3, 4):
        for rep in ("burau-symbolic", "burau-evaluated"):
            checks.append((f"VB_{n} {rep}", verify_rep(Family.VIRTUAL, n, rep).all_passed))
    elapsed = time.perf_counter() - start
    checks.append(("runtime < 30 s", elapsed < 30))
    report(2, "Burau variant represents VB_n", checks, elapsed)


def _relator_holds(rel, n, bindings=None):
    lhs, rhs = word_matrix(rel.lhs, n), word_matrix(rel.rhs, n)
    if bindings:
        lhs, rhs = lhs.substitute(bindings), rhs.substitute(bindings)
    return lhs == rhs


def test_criterion_3_burau_factorization(report):
    forbidden = forbidden_relator(1, 3)
    twin = twin_relator(1, 3)
    checks = [
        ("forbidden fails generically", not _relator_holds(forbidden, 3)),
        ("forbidden passes under b=1", _relator_holds(forbidden, 3, {BETA: ONE})),
        ("twin fails generically", not _relator_holds(twin, 3)),
        ("twin passes under b=a", _relator_holds(twin, 3, {BETA: alpha()})),
        ("n=2 sigma display", burau_evaluated(sigma(1), 2) == laurent_matrix([["1 - a", "a"], [1, 0]], "delta")),
        ("n=2 tau display", burau_evaluated(tau(1), 2) == laurent_matrix([[0, "b^-1"], ["b", 0]], "delta")),
    ]
    report(3, "Burau factorization through WB_n / twin group", checks)


def test_criterion_4_fox_oracle(report):
    checks = []
    for n in (3, 4, 5):
        ok = all(fox_action_matrix(f"q{i}.{j}", n) == gassner_symbolic(i, j, n) for i, j in _pairs(n))
        checks.append((f"n={n} all ordered pairs", ok))
    report(4, "Fox action equals closed-form Gassner matrices", checks)


def test_criterion_5_fundamental_formula(report):
    rng = random.Random(5)
    random_ok = True
    for _ in range(200):
        n = rng.randint(1, 4)
        w = [rng.choice([1, -1]) * rng.randint(1, n) for _ in range(rng.randint(0, 12))]
        random_ok &= fundamental_check(w, n)
    gens_ok = all(fundamental_check([s * k], n) for n in range(1, 5) for k in range(1, n + 1) for s in (1, -1))
    report(5, "fundamental formula of free calculus", [("200 random words", random_ok), ("all generators", gens_ok)])


def test_criterion_6_gassner_suites(report):
    start = time.perf_counter()
    checks = []
    for n in (3, 4, 5):
        for rep in ("gassner-symbolic", "gassner-evaluated"):
            checks.append((f"PW_{n} {rep}", verify_rep(Family.PURE_WELDED, n, rep).all_passed))
    elapsed = time.perf_counter() - start
    checks.append(("runtime < 60 s", elapsed < 60))
    report(6, "McCool relators under Gassner matrices", checks, elapsed)


def test_criterion_7_iteration_example(report):
    m = iterate(4, 2, 1, 2)
    checks = [
        ("12x12 entries", m == laurent_matrix(EXAMPLE_12, "iter2")),
        ("12x12 canonical rendering", m.render() == EXAMPLE_12_RENDERED),
    ]
    for i, j in _pairs(3):
        reduced = delete_rows_cols(iterate(4, 2, i, j), [4, 8, 12])
        expected = kron(gassner_evaluated(i, j, 3, level=2), gassner_evaluated(i, j, 3, level=1))
        checks.append((f"tensor identity for xi_{i},{j}", reduced.entries == expected.entries))
    report(7, "iteration reproduces the worked example", checks)


def _generator_matrices():
    for n in (2, 3, 4):
        for i in range(1, n):
            for g in (sigma(i), sigma(i, -1), tau(i)):
                yield f"burau n={n} {g}", burau_evaluated(g, n)
    for n in (3, 4, 5):
        for i, j in _pairs(n):
            for inv in (False, True):
                yield f"gassner n={n} ({i},{j}) inv={inv}", gassner_evaluated(i, j, n, inverse=inv)
                yield f"gassner(sym, augmented) n={n} ({i},{j}) inv={inv}", gassner_symbolic(i, j, n, inv).augment("a")
    for n, r in ((4, 1), (4, 2), (5, 2), (4, 3)):
        for i, j in _pairs(n + 1 - r):
            yield f"iterated n={n} r={r} ({i},{j})", iterate(n, r, i, j)


def test_criterion_8_unit_determinants(report):
    checks = [(name, m.determinant().is_unit()) for name, m in _generator_matrices()]
    report(8, f"unit determinants ({len(checks)} generator matrices)", checks)
