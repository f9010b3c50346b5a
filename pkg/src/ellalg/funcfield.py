"""Elements of the function field of a Weierstrass curve.

An element is a(x) + b(x)*y in canonical form (y-degree <= 1, reduced
rational coefficients).  The curve relation eliminates y^2; inverses go
through the norm to the x-line.  Local expansions at curve points use the
designated uniformizer per point type (x - x0 generically, y - y0 at
ramified points, -x/y at infinity) and drive exact valuations.
"""

from __future__ import annotations

from .fields import FieldError
from .poly import LSeries, Poly, RatFunc


class FnElement:
    """a(x) + b(x)*y on a fixed curve, with a, b reduced rational functions."""

    __slots__ = ("curve", "a", "b")

    def __init__(self, curve, a, b=None):
        field = curve.field
        if b is None:
            b = RatFunc.const(field, 0)
        self.curve = curve
        self.a = a
        self.b = b

    @classmethod
    def const(cls, curve, c):
        return cls(curve, RatFunc.const(curve.field, c))

    @classmethod
    def x(cls, curve):
        return cls(curve, RatFunc(Poly.x(curve.field)))

    @classmethod
    def y(cls, curve):
        field = curve.field
        return cls(curve, RatFunc.const(field, 0), RatFunc.const(field, 1))

    @classmethod
    def one(cls, curve):
        return cls.const(curve, 1)

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, FnElement)
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash((self.a, self.b))

    def __add__(self, other):
        return FnElement(self.curve, self.a + other.a, self.b + other.b)

    def __neg__(self):
        return FnElement(self.curve, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def _curve_polys(self):
        field = self.curve.field
        c = self.curve
        # y^2 = S(x) - (a1*x + a3) * y on the curve
        s = Poly(
            field,
            (c.a6, c.a4, c.a2, field.one),
        )
        t = Poly(field, (c.a3, c.a1))
        return RatFunc(s), RatFunc(t)

    def __mul__(self, other):
        if not isinstance(other, FnElement):
            return FnElement(self.curve, self.a * other, self.b * other)
        s, t = self._curve_polys()
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        bd = b1 * b2
        a = a1 * a2 + bd * s
        b = a1 * b2 + b1 * a2 - bd * t
        return FnElement(self.curve, a, b)

    __rmul__ = __mul__

    def conjugate(self):
        """Image under y -> -y - a1*x - a3 (the hyperelliptic involution)."""
        _, t = self._curve_polys()
        return FnElement(self.curve, self.a - self.b * t, -self.b)

    def norm(self):
        """Product with the conjugate; lands in k(x)."""
        s, t = self._curve_polys()
        return self.a * (self.a - self.b * t) - self.b * self.b * s

    def inverse(self):
        if self.is_zero():
            raise FieldError("inverting the zero function")
        n = self.norm()
        conj = self.conjugate()
        inv_n = n.inverse()
        return FnElement(self.curve, conj.a * inv_n, conj.b * inv_n)

    def __truediv__(self, other):
        return self * other.inverse()

    def eval(self, pt):
        """Exact value at an affine point where no denominator vanishes."""
        if pt.infinity:
            raise FieldError("evaluation at infinity is a limit, not a value")
        return self.a.eval(pt.x) + self.b.eval(pt.x) * pt.y

    def __repr__(self):
        if self.b.is_zero():
            return repr(self.a)
        return "(%r) + (%r)*y" % (self.a, self.b)


# ---------------------------------------------------------------------------
# local expansions

class _ExpansionCache:
    """Branch parametrizations (x(t), y(t)) per point, cached by precision."""

    def __init__(self, curve):
        self.curve = curve
        self._cache = {}

    def branch(self, pt, prec):
        key = (pt, prec)
        if key not in self._cache:
            self._cache[key] = self._compute(pt, prec)
        return self._cache[key]

    def _compute(self, pt, prec):
        curve = self.curve
        field = curve.field
        if pt.infinity:
            return self._branch_at_infinity(prec)
        if curve.is_two_torsion(pt):
            return self._ramified_branch(pt, prec)
        # generic point: t = x - x0, solve for y by Newton iteration
        x_s = LSeries(field, 0, (pt.x, field.one) + (field.zero,) * max(0, prec - 2))
        y_s = LSeries(field, 0, (pt.y,) + (field.zero,) * max(0, prec - 1))
        y_s = self._newton_y(x_s, y_s, prec)
        return x_s, y_s

    def _newton_y(self, x_s, y_s, prec):
        curve = self.curve
        field = curve.field
        one = LSeries.const(field, field.one, prec)

        def f(y):
            return (
                y.mul(y)
                .add(x_s.scale(curve.a1).mul(y))
                .add(y.scale(curve.a3))
                .sub(x_s.mul(x_s).mul(x_s))
                .sub(x_s.mul(x_s).scale(curve.a2))
                .sub(x_s.scale(curve.a4))
                .sub(one.scale(curve.a6))
            )

        def fy(y):
            return y.add(y).add(x_s.scale(curve.a1)).add(one.scale(curve.a3))

        for _ in range(prec.bit_length() + 2):
            val = f(y_s)
            if val.is_zero_window():
                break
            y_s = y_s.sub(val.mul(fy(y_s).inverse()))
        return y_s

    def _ramified_branch(self, pt, prec):
        curve = self.curve
        field = curve.field
        y_s = LSeries(field, 0, (pt.y, field.one) + (field.zero,) * max(0, prec - 2))
        x_s = LSeries(field, 0, (pt.x,) + (field.zero,) * max(0, prec - 1))
        one = LSeries.const(field, field.one, prec)

        def f(x):
            return (
                y_s.mul(y_s)
                .add(x.scale(curve.a1).mul(y_s))
                .add(y_s.scale(curve.a3))
                .sub(x.mul(x).mul(x))
                .sub(x.mul(x).scale(curve.a2))
                .sub(x.scale(curve.a4))
                .sub(one.scale(curve.a6))
            )

        def fx(x):
            return (
                y_s.scale(curve.a1)
                .sub(x.mul(x).scale(field(3)))
                .sub(x.scale(2 * curve.a2))
                .sub(one.scale(curve.a4))
            )

        for _ in range(prec.bit_length() + 2):
            val = f(x_s)
            if val.is_zero_window():
                break
            x_s = x_s.sub(val.mul(fx(x_s).inverse()))
        return x_s, y_s

    def _branch_at_infinity(self, prec):
        # z = -x/y is a uniformizer; w = -1/y satisfies
        # F(w) = w - z^3 - a1 z w - a2 z^2 w - a3 w^2 - a4 z w^2 - a6 w^3 = 0,
        # solved by Newton iteration from w = z^3 (quadratic convergence)
        curve = self.curve
        field = curve.field
        work = prec + 8
        z = LSeries(field, 1, (field.one,) + (field.zero,) * (work - 1))
        one = LSeries.const(field, field.one, work)
        w = LSeries(field, 3, (field.one,) + (field.zero,) * (work - 1))
        z2 = z.mul(z)
        z3 = z2.mul(z)

        def f(w):
            w2 = w.mul(w)
            return (
                w
                .sub(z3)
                .sub(z.mul(w).scale(curve.a1))
                .sub(z2.mul(w).scale(curve.a2))
                .sub(w2.scale(curve.a3))
                .sub(z.mul(w2).scale(curve.a4))
                .sub(w2.mul(w).scale(curve.a6))
            )

        def fw(w):
            return (
                one
                .sub(z.scale(curve.a1))
                .sub(z2.scale(curve.a2))
                .sub(w.scale(2 * curve.a3))
                .sub(z.mul(w).scale(2 * curve.a4))
                .sub(w.mul(w).scale(3 * curve.a6))
            )

        for _ in range(work.bit_length() + 3):
            val = f(w)
            if val.is_zero_window():
                break
            w = w.sub(val.mul(fw(w).inverse()))
        w_inv = w.inverse()
        x_s = z.mul(w_inv)
        y_s = w_inv.neg()
        return x_s, y_s


def local_expansion(f, pt, prec, cache):
    """Expansion of f in the local uniformizer at pt, to absolute order prec.

    Working precision is adaptive: precision losses (Horner composition at
    infinity, vanishing denominators) show up in the known-window end of
    the result, so start lean and widen the slack until the window covers
    the request.
    """
    maxdeg = max(
        f.a.num.degree, f.a.den.degree, f.b.num.degree, f.b.den.degree, 0
    )
    slack = 4 * maxdeg + 16 if pt.infinity else 8
    while True:
        # round up so the branch cache is reused across nearby requests
        work = 1 << (prec + slack - 1).bit_length()
        x_s, y_s = cache.branch(pt, work)

        def rat_series(r):
            num = r.num.eval_series(x_s)
            den = r.den.eval_series(x_s)
            return num.mul(den.inverse())

        try:
            out = rat_series(f.a)
            if not f.b.is_zero():
                out = out.add(rat_series(f.b).mul(y_s))
        except FieldError:
            # a denominator vanished beyond the window; widen and retry
            slack *= 2
            if slack > 1 << 14:
                raise
            continue
        if out.prec_end() >= prec:
            return out
        slack = max(slack * 2, slack + (prec - out.prec_end()))
        if slack > 1 << 14:
            raise FieldError("local expansion precision did not stabilize")


def valuation(f, pt, cache, start_prec=6, max_prec=4096):
    """Order of vanishing of f at pt (negative at poles).

    At infinity the two parts of a(x) + b(x)*y have valuations of opposite
    parity, so the order is read off the degrees; elsewhere the working
    precision doubles until the leading term is visible.
    """
    if f.is_zero():
        raise FieldError("valuation of the zero function")
    if pt.infinity:
        vals = []
        if not f.a.is_zero():
            vals.append(2 * (f.a.den.degree - f.a.num.degree))
        if not f.b.is_zero():
            vals.append(2 * (f.b.den.degree - f.b.num.degree) - 3)
        return min(vals)
    prec = start_prec
    while prec <= max_prec:
        s = local_expansion(f, pt, prec, cache)
        if not s.is_zero_window():
            return s.order()
        prec *= 2
    raise FieldError("valuation did not stabilize below precision %d" % max_prec)


def translation_maps(tr, k):
    """The coordinate functions of P -> P + [k]alpha as FnElements."""
    curve = tr.curve
    field = curve.field
    tr.check_window(k)
    if k == 0:
        return FnElement.x(curve), FnElement.y(curve)
    q = tr.alpha_power(k)
    x_f = FnElement.x(curve)
    y_f = FnElement.y(curve)
    qx = FnElement.const(curve, q.x)
    qy = FnElement.const(curve, q.y)
    lam = (y_f - qy) / (x_f - qx)
    nu = y_f - lam * x_f
    a1 = FnElement.const(curve, curve.a1)
    a2c = FnElement.const(curve, curve.a2)
    a3 = FnElement.const(curve, curve.a3)
    x3 = lam * lam + a1 * lam - a2c - x_f - qx
    y3 = -(lam + a1) * x3 - nu - a3
    return x3, y3


def pullback(tr, f, k):
    """f composed with translation by [k]alpha, reduced to canonical form."""
    if k == 0:
        return f
    curve = f.curve
    x3, y3 = translation_maps(tr, k)

    def rat_at(r, xf):
        num = _poly_at(r.num, xf, curve)
        den = _poly_at(r.den, xf, curve)
        return num * den.inverse()

    out = rat_at(f.a, x3)
    if not f.b.is_zero():
        out = out + rat_at(f.b, x3) * y3
    return out


def _poly_at(p, xf, curve):
    acc = FnElement.const(curve, 0)
    for c in reversed(p.coeffs):
        acc = acc * xf + FnElement.const(curve, c)
    return acc
