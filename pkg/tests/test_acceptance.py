"""Acceptance suite: the headline identities at their stated scopes, on
the rational fixtures, with one pass/fail line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete; the whole module is budgeted to finish well under ten minutes.
"""

import sys

from ellalg import verify as V


def _report(num, label, checks):
    ok = all(c["ok"] for c in checks)
    line = "ACCEPTANCE %-3s %s: %s" % (num, "PASS" if ok else "FAIL", label)
    print(line, file=sys.stderr)
    assert ok, [c for c in checks if not c["ok"]]


def test_acceptance_01_riemann_roch(q3):
    checks = V.criterion_riemann_roch(q3, n_random=50)
    _report("1", "Riemann-Roch dims + valuation certificates, 50 random divisors", checks)


def test_acceptance_02_surjectivity_table(q3):
    checks = V.criterion_surjectivity_table(q3)
    _report("2", "surjectivity criterion vs linear algebra over the degree table", checks)


def test_acceptance_03_closed_form(q3, q9):
    checks = V.criterion_closed_form(q3, q9, upto=10)
    _report("3", "closed-form dims = recursion, k <= n <= 10, both ample degrees", checks)


def test_acceptance_04_mult_certificates(q3):
    checks = V.criterion_mult_certificates(q3, kl_max=2, mn_max=4)
    _report("4", "multiplication certificates, generic and top-degree ranges", checks)


def test_acceptance_05_absorption(q3):
    checks = V.criterion_absorption(q3, n_random=200)
    _report("5", "closed absorption = iteration; matrix oracle agrees (200 random)", checks)


def test_acceptance_06_lattice(q3):
    checks = V.criterion_lattice(q3, n_random=100)
    _report("6", "layering lattice = matrix-ideal intersection/sum (100 random)", checks)


def test_acceptance_07_series(q3, q9):
    checks = V.criterion_series(q3, q9, upto=12)
    _report("7", "blowup series with the t-shift; discrepancy documented; chain", checks)


def test_acceptance_08_line_module(q3):
    checks = V.criterion_line_module(q3, upto=10)
    _report("8", "exceptional line module filtration, divisor, presentation", checks)


def test_acceptance_09_left_right(q3):
    checks = V.criterion_left_right(q3, up_n=6)
    _report("9", "left/right bar sections identical; tapered variant", checks)


def test_acceptance_10_build_module(q3):
    checks = V.criterion_build_module(q3, n_random=20)
    _report("10", "clipped-module closure certificates; zero correction recovers", checks)


def test_acceptance_11_q_family(q3):
    checks = V.criterion_q_family(q3, upto=7)
    _report("11", "tapered family: factor tails, lattice identity, intersection", checks)


def test_acceptance_12_shadows(q3):
    checks = V.criterion_shadows(q3)
    _report("12", "point-space shadows consistent; engineered case violated", checks)
