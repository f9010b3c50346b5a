import random

import pytest

from ellalg.divisors import Divisor


def test_no_zero_multiplicities(q3):
    p = q3.point("p")
    d = Divisor.of_point(q3.curve, p) - Divisor.of_point(q3.curve, p)
    assert d.is_zero()
    assert d.degree == 0


def test_tau_act_basics(q3):
    tr = q3.translation
    d = q3.divisor("2*p + q@-1")
    assert d.tau(tr, 0) == d
    assert d.tau(tr, 2).tau(tr, -3) == d.tau(tr, -1)
    assert d.tau(tr, 4).degree == d.degree


def test_partial_sum_zero_and_unfold(q3):
    tr = q3.translation
    d = q3.divisor("p")
    assert d.partial_sum(tr, 0).is_zero()
    assert d.partial_sum(tr, -3).is_zero()
    assert d.partial_sum(tr, 2) == q3.divisor("p + p@-1")


def test_partial_sum_cocycle(q3):
    tr = q3.translation
    d = q3.divisor("p + 2*q")
    for n in range(1, 6):
        for m in range(1, 6):
            lhs = d.partial_sum(tr, n + m)
            rhs = d.partial_sum(tr, n) + d.partial_sum(tr, m).tau(tr, -n)
            assert lhs == rhs


def test_lattice_ops(q3):
    p = q3.divisor("p")
    q = q3.divisor("q")
    assert p.min(p) == p
    assert p.max(q) == p + q
    assert (p - 2 * q).positive_part() == p
    assert p <= p + q
    assert not (p + q <= p)


def test_lattice_distributivity(q3):
    rng = random.Random(2)
    pts = [q3.point("p"), q3.point("q"), q3.curve.zero_point]
    tr = q3.translation

    def rand_div():
        return Divisor(
            q3.curve,
            {tr.tau(rng.choice(pts), rng.randint(-2, 2)): rng.randint(-2, 3)
             for _ in range(3)},
        )

    for _ in range(40):
        a, b, c = rand_div(), rand_div(), rand_div()
        assert a.min(b.max(c)) == a.min(b).max(a.min(c))
        assert a.max(b.min(c)) == a.max(b).min(a.max(c))
        # tau respects the lattice
        assert a.min(b).tau(tr, 1) == a.tau(tr, 1).min(b.tau(tr, 1))


def test_lin_equiv_basics(q3):
    c = q3.curve
    d = q3.divisor("2*p + q")
    assert d.lin_equiv(d)
    P = q3.translation.alpha_power(7)
    two_o = Divisor.of_point(c, c.zero_point, 2)
    pp = Divisor.of_point(c, P) + Divisor.of_point(c, c.neg(P))
    # x - x_P has divisor P + (-P) - 2*Oinf
    assert two_o.lin_equiv(pp)
    assert (pp - two_o).is_principal()


def test_translation_breaks_equivalence(q3):
    # for non-torsion alpha, 3*Oinf and its translate are never equivalent
    c = q3.curve
    tr = q3.translation
    d = Divisor.of_point(c, c.zero_point, 3)
    assert not d.lin_equiv(d.tau(tr, -1))


def test_class_is_homomorphism(q3):
    rng = random.Random(9)
    tr = q3.translation
    pts = [q3.point("p"), q3.point("q")]

    def rand_div():
        return Divisor(
            q3.curve,
            {tr.tau(rng.choice(pts), rng.randint(-3, 3)): rng.randint(-2, 2)
             for _ in range(2)},
        )

    for _ in range(20):
        a, b = rand_div(), rand_div()
        cl = a.class_of().combine(b.class_of(), q3.curve)
        assert cl == (a + b).class_of()


def test_parser_round_trip(q3):
    d = q3.divisor("2*p@0 + 1*p@-1 + 1*q")
    tr = q3.translation
    p, q = q3.point("p"), q3.point("q")
    expect = (
        2 * Divisor.of_point(q3.curve, p)
        + Divisor.of_point(q3.curve, tr.tau(p, -1))
        + Divisor.of_point(q3.curve, q)
    )
    assert d == expect
    assert q3.divisor("Oinf").mult(q3.curve.zero_point) == 1
    assert q3.divisor("2*p - q") == 2 * Divisor.of_point(q3.curve, p) - Divisor.of_point(q3.curve, q)
    lit = q3.divisor("(0,0)")
    assert lit.mult(q3.translation.alpha) == 1


def test_parser_errors(q3):
    with pytest.raises(ValueError):
        q3.divisor("unknown_point")
