import random

import pytest

from ellalg.cpmodel import (
    CpWindowError,
    TruncatedMatrixIdeal,
    brute_force_mul,
    extract_layering,
    full_ring,
    off_diagonal_ideal,
    point_row_ideal,
    realize,
)
from ellalg.divisors import Divisor
from ellalg.layerings import (
    RIGHT,
    absorb_point,
    empty_layering,
    layering_max,
    layering_min,
    m_layering,
    make_layering,
)

W, B = 12, 6


def pt_div(fx, shift=0, mult=1):
    pt = fx.translation.tau(fx.point("p"), shift)
    return Divisor.of_point(fx.curve, pt, mult)


def rand_orbit_layering(fx, rng, max_layers=4, max_mult=3, spread=3):
    tr = fx.translation
    k = rng.randint(0, max_layers)
    if k == 0:
        return empty_layering(fx.curve)
    top = Divisor.zero(fx.curve)
    for shift in range(-spread, spread + 1):
        if rng.random() < 0.5:
            top = top + pt_div(fx, shift, rng.randint(1, max_mult))
    if top.is_zero():
        top = pt_div(fx)
    layers = [top]
    for _ in range(k - 1):
        prev = layers[-1].tau(tr, -1)
        nxt = Divisor.zero(fx.curve)
        for ptt, c in prev.items():
            keep = rng.randint(0, c)
            if keep:
                nxt = nxt + Divisor.of_point(fx.curve, ptt, keep)
        layers.append(nxt)
    return make_layering(tr, RIGHT, layers)


def test_empty_layering_gives_full_ring(fp3):
    ideal, _ = realize(fp3.translation, empty_layering(fp3.curve), W, B)
    assert ideal == full_ring(W, B)


def test_single_point_realization(fp3):
    z = make_layering(fp3.translation, RIGHT, [pt_div(fp3)])
    ideal, rep = realize(fp3.translation, z, W, B)
    assert rep == fp3.point("p")
    expect = full_ring(W, B)
    expect.set_exp(0, 0, 1)
    assert ideal == expect


def test_realize_round_trip(fp3):
    rng = random.Random(41)
    tr = fp3.translation
    for _ in range(100):
        z = rand_orbit_layering(fp3, rng)
        ideal, rep = realize(tr, z, W, B)
        assert ideal.check_right_ideal()
        assert extract_layering(tr, ideal, rep) == z


def test_multi_orbit_rejected(fp3):
    tr = fp3.translation
    d = pt_div(fp3) + Divisor.of_point(fp3.curve, fp3.point("q"))
    z = make_layering(tr, RIGHT, [d])
    with pytest.raises(ValueError):
        realize(tr, z, W, B)


def test_point_absorption_is_row_ideal_product(fp3):
    # multiplying by the maximal ideal over the i-th diagonal point matches
    # the layering-level absorption of tau^i(p)
    rng = random.Random(43)
    tr = fp3.translation
    for _ in range(100):
        z = rand_orbit_layering(fp3, rng, max_layers=3, max_mult=2, spread=2)
        ideal, rep = realize(tr, z, W, B, rep=fp3.point("p"))
        i = rng.randint(-3, 3)
        shifted = absorb_point(tr, tr.tau(fp3.point("p"), i), z)
        lhs = ideal.mul(point_row_ideal(W, B, i))
        rhs, _ = realize(tr, shifted, W, B, rep=fp3.point("p"))
        assert lhs == rhs


def test_full_ring_times_row_ideal(fp3):
    tr = fp3.translation
    lhs = full_ring(W, B).mul(point_row_ideal(W, B, 0))
    rhs, _ = realize(
        tr,
        make_layering(tr, RIGHT, [pt_div(fp3)]),
        W, B, rep=fp3.point("p"),
    )
    assert lhs == rhs


def test_lattice_matches_intersection_and_sum(fp3):
    rng = random.Random(47)
    tr = fp3.translation
    rep = fp3.point("p")
    for _ in range(100):
        a = rand_orbit_layering(fp3, rng)
        b = rand_orbit_layering(fp3, rng)
        ia, _ = realize(tr, a, W, B, rep=rep)
        ib, _ = realize(tr, b, W, B, rep=rep)
        mx, _ = realize(tr, layering_max(tr, a, b), W, B, rep=rep)
        mn, _ = realize(tr, layering_min(tr, a, b), W, B, rep=rep)
        assert ia.intersect(ib) == mx
        assert ia.add(ib) == mn
        assert ia.intersect(ia) == ia


def test_shift_rule(fp3):
    # intersecting with the off-diagonal ideal equals the shifted layering
    # times the subdiagonal matrix: the g-layer shift at matrix level
    rng = random.Random(53)
    tr = fp3.translation
    rep = fp3.point("p")
    for _ in range(60):
        z = rand_orbit_layering(fp3, rng)
        ideal, _ = realize(tr, z, W, B, rep=rep)
        shifted_layers = [d.tau(tr, 1) for d in z.layers[1:]]
        shifted = make_layering(tr, RIGHT, shifted_layers)
        ish, _ = realize(tr, shifted, W, B, rep=rep)
        assert ideal.intersect(off_diagonal_ideal(W, B)) == ish.mul_diag_shift()


def test_diag_shift_is_matrix_product(fp3):
    # N as an honest matrix: brute-force monomial product oracle
    tr = fp3.translation
    z = m_layering(tr, 2, pt_div(fp3))
    small_w = 4
    ideal, _ = realize(tr, z, small_w, B, rep=fp3.point("p"))
    n_matrix = TruncatedMatrixIdeal(small_w, B)
    for i in range(-small_w, small_w + 1):
        for l in range(-small_w, i + 1):
            n_matrix.set_exp(i, l, 0 if l == i - 1 else B)
    assert ideal.mul_diag_shift().exps == ideal.mul(n_matrix).exps


def test_entrywise_product_matches_brute_force(fp3):
    rng = random.Random(59)
    tr = fp3.translation
    rep = fp3.point("p")
    small_w, small_b = 4, 4
    for _ in range(20):
        a = rand_orbit_layering(fp3, rng, max_layers=3, max_mult=2, spread=1)
        b = rand_orbit_layering(fp3, rng, max_layers=2, max_mult=2, spread=1)
        ia, _ = realize(tr, a, small_w, small_b, rep=rep)
        ib, _ = realize(tr, b, small_w, small_b, rep=rep)
        assert ia.mul(ib) == brute_force_mul(small_w, small_b, ia, ib)


def test_window_guard(fp3):
    tr = fp3.translation
    z = make_layering(tr, RIGHT, [pt_div(fp3, -11)])
    with pytest.raises(CpWindowError):
        realize(tr, z, 3, B, rep=fp3.point("p"))


def test_m_layering_exponent_pattern(fp3):
    # depth-2 one-point family: ones at (0,0), (-1,-1), (0,-1) relative to
    # the orbit index of the deepest translate
    tr = fp3.translation
    ideal, _ = realize(tr, m_layering(tr, 2, pt_div(fp3)), W, B, rep=fp3.point("p"))
    got = {(k, l): e for (k, l), e in ideal.exps.items() if 0 < e < B}
    assert got == {(0, 0): 1, (-1, -1): 1, (0, -1): 1}


def test_cp_suite_report(fp3):
    from ellalg.cpmodel import cp_suite
    from ellalg.layerings import m_layering

    tr = fp3.translation
    za = m_layering(tr, 3, pt_div(fp3))
    zb = m_layering(tr, 2, pt_div(fp3, -1, 2))
    rep = cp_suite(tr, za, zb, W, B, rep=fp3.point("p"))
    assert rep["ok"], rep["failures"]
