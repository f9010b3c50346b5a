from math import comb

import pytest

from ellalg.divisors import Divisor
from ellalg.hilbert import (
    HilbertSeries,
    SeriesError,
    base_series,
    blowup_series_report,
    dim_B,
    dim_T,
    ideal_profile,
    m_ideal_dim,
    quotient_profile,
    stable_start,
)
from ellalg.layerings import m_layering, m_left_layering, q_layering


def pdiv(fx, name="p", mult=1):
    return Divisor.of_point(fx.curve, fx.point(name), mult)


def test_coeff_extraction():
    s = HilbertSeries((1,), 3)
    assert [s.coeff(n) for n in range(5)] == [comb(n + 2, 2) for n in range(5)]
    t = HilbertSeries.monomial(1, 1, 3)
    assert [t.coeff(n) for n in range(5)] == [0, 1, 3, 6, 10]
    u = HilbertSeries((1, -1, 1), 3)
    assert u.coeffs(4) == [1, 2, 4, 7, 11]


def test_series_canonical_form():
    # (1-t)/(1-t)^3 reduces to 1/(1-t)^2
    s = HilbertSeries((1, -1), 3)
    assert s == HilbertSeries((1,), 2)
    assert (s - s) == HilbertSeries((), 0)


def test_series_arithmetic():
    h_b, h_t = base_series(3)
    assert (h_t - h_t.shift(1)).equal_upto(h_b, 20)
    assert h_t.shift(1).coeff(0) == 0
    with pytest.raises(SeriesError):
        h_b.raise_pole(1)
    assert HilbertSeries((0, 0, 1), 0).raise_pole(2) == [0, 0, 1, -2, 1]


def test_base_dims_mu3():
    assert [dim_T(3, n) for n in range(4)] == [1, 4, 10, 19]
    assert dim_B(3, 0) == 1 and dim_B(3, 2) == 6


def test_base_dims_mu9():
    # degree = dim T_1 - 1
    assert dim_T(9, 1) - 1 == 9
    h_b, h_t = base_series(9)
    assert all(h_t.coeff(n) == dim_T(9, n) for n in range(12))
    assert all(h_b.coeff(n) == dim_B(9, n) for n in range(12))


def test_point_module_profile(fp3):
    z = m_layering(fp3.translation, 1, pdiv(fp3))
    prof = quotient_profile(fp3.ctx, z, 8)
    for n in range(9):
        assert prof[n].exact and prof[n].value() == 1
    ideal = ideal_profile(fp3.ctx, z, 8)
    for n in range(9):
        # dim of the ideal piece = dim T_{n-1} + (n*mu - 1) for n >= 1
        if n >= 1:
            assert ideal.value(n) == dim_T(3, n - 1) + (3 * n - 1)


def test_tapered_profile(fp3):
    z = q_layering(fp3.translation, 2, 1, 1, fp3.point("p"))
    assert z.total_degree == 3
    prof = quotient_profile(fp3.ctx, z, 8)
    assert stable_start(z, 3) == 2
    for n in range(2, 9):
        assert prof[n].exact and prof[n].value() == 3


def test_closed_form_matches_recursion(fp3, fp9):
    for fx in (fp3, fp9):
        mu = fx.mu
        for d in (pdiv(fx), pdiv(fx, "p", 2), pdiv(fx) + pdiv(fx, "q")):
            prof_cache = {}
            for k in range(0, 11):
                z = m_layering(fx.translation, k, d)
                prof = quotient_profile(fx.ctx, z, 10)
                prof_cache[k] = prof
                for n in range(k, 11):
                    closed = m_ideal_dim(mu, k, d.degree, n)
                    assert prof[n].exact
                    assert dim_T(mu, n) - prof[n].value() == closed


def test_left_profile_matches_right(fp3):
    d = pdiv(fp3)
    for k in range(0, 5):
        right = quotient_profile(fp3.ctx, m_layering(fp3.translation, k, d), 8)
        left = quotient_profile(
            fp3.ctx, m_left_layering(fp3.translation, k, d), 8
        )
        for n in range(k, 9):
            assert right[n].exact and left[n].exact
            assert right[n].value() == left[n].value()


def test_pinched_above_diagonal(fp3):
    # the one-point family of depth n+1 is exact already in degree n:
    # the recursion floor meets the total-degree ceiling
    tr = fp3.translation
    tp = Divisor.of_point(fp3.curve, tr.tau(fp3.point("p"), 1))
    for n in range(0, 7):
        z = m_layering(tr, n + 1, tp)
        prof = quotient_profile(fp3.ctx, z, n + 1)
        assert prof[n].exact
        assert prof[n].value() == comb(n + 2, 2)


def test_monotone_and_bounded(fp3):
    import random

    from tests.test_layerings import rand_layering

    rng = random.Random(61)
    for _ in range(40):
        z = rand_layering(fp3, rng)
        if z.is_empty():
            continue
        prof = quotient_profile(fp3.ctx, z, 9)
        s = z.total_degree
        last = 0
        for n in range(10):
            e = prof[n]
            assert 0 <= e.lo <= e.hi <= s
            assert e.lo >= last
            last = e.lo
        lstab = stable_start(z, 3)
        for n in range(lstab, 10):
            assert prof[n].exact and prof[n].value() == s


def test_blowup_series_report(fp3, fp9):
    rep = blowup_series_report(fp3.ctx, pdiv(fp3), 12, shelf_levels=(1,))
    assert rep["dims"][:6] == [1, 3, 7, 13, 21, 31]
    assert rep["matches_with_t_shift"]
    assert not rep["matches_without_t_shift"]
    # shelf level 1: dim T_n - C(n, 2)
    assert rep["shelves"][1] == [dim_T(3, n) - comb(n, 2) for n in range(13)]

    # one below the top degree: the numerator of the series is t^2 - t + 1
    rep9 = blowup_series_report(fp9.ctx, pdiv(fp9, "p", 8), 12)
    _, h_t = base_series(9)
    expect = HilbertSeries((1, -1, 1), 3)
    assert all(expect.coeff(n) == rep9["dims"][n] for n in range(13))
    assert rep9["matches_with_t_shift"]


def test_m_ideal_dim_guards():
    with pytest.raises(SeriesError):
        m_ideal_dim(3, 4, 1, 3)
    with pytest.raises(SeriesError):
        m_ideal_dim(3, 1, 3, 2)
