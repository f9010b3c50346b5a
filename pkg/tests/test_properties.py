"""Property-based invariants for the algebraic layers."""

from hypothesis import given, settings, strategies as st

from ellalg.divisors import Divisor
from ellalg.fields import QQ, PrimeField
from ellalg.hilbert import HilbertSeries
from ellalg.poly import Poly

F101 = PrimeField(101)


coeff_lists = st.lists(st.integers(-6, 6), min_size=0, max_size=6)


@given(coeff_lists, coeff_lists)
@settings(max_examples=80, deadline=None)
def test_poly_gcd_divides_both(a, b):
    pa = Poly(QQ, [QQ(c) for c in a])
    pb = Poly(QQ, [QQ(c) for c in b])
    g = pa.gcd(pb)
    if g.is_zero():
        assert pa.is_zero() and pb.is_zero()
    else:
        assert (pa % g).is_zero()
        assert (pb % g).is_zero()


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=60, deadline=None)
def test_poly_ring_axioms(a, b, c):
    pa, pb, pc = (Poly(F101, [F101(x) for x in v]) for v in (a, b, c))
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert pa * pb == pb * pa
    if not pb.is_zero():
        q, r = pa.divmod(pb)
        assert q * pb + r == pa
        assert r.is_zero() or r.degree < pb.degree


series = st.builds(
    HilbertSeries,
    st.lists(st.integers(-4, 4), min_size=0, max_size=5),
    st.integers(0, 3),
)


@given(series, series)
@settings(max_examples=80, deadline=None)
def test_series_coefficientwise_sum(a, b):
    s = a + b
    for n in range(10):
        assert s.coeff(n) == a.coeff(n) + b.coeff(n)


@given(series, st.integers(0, 4))
@settings(max_examples=60, deadline=None)
def test_series_shift_law(a, k):
    s = a.shift(k)
    for n in range(10):
        assert s.coeff(n) == (a.coeff(n - k) if n >= k else 0)


@given(series, series)
@settings(max_examples=40, deadline=None)
def test_series_product_cauchy(a, b):
    p = a * b
    for n in range(8):
        assert p.coeff(n) == sum(a.coeff(i) * b.coeff(n - i) for i in range(n + 1))


mult_maps = st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=5)


def _div(fx, m):
    tr = fx.translation
    return Divisor(
        fx.curve,
        {tr.tau(fx.point("p"), k): c for k, c in m.items()},
    )


@given(mult_maps, mult_maps, mult_maps)
@settings(max_examples=60, deadline=None)
def test_divisor_lattice_laws(q3_static, a, b, c):
    da, db, dc = _div(q3_static, a), _div(q3_static, b), _div(q3_static, c)
    assert da.min(db).max(db) == db  # absorption
    assert da.max(db.min(dc)) == da.max(db).min(da.max(dc))
    assert (da + dc).min(db + dc) == da.min(db) + dc  # translation-invariance


@given(mult_maps, mult_maps)
@settings(max_examples=40, deadline=None)
def test_divisor_class_additive(q3_static, a, b):
    da, db = _div(q3_static, a), _div(q3_static, b)
    lhs = (da + db).class_of()
    rhs = da.class_of().combine(db.class_of(), q3_static.curve)
    assert lhs == rhs
