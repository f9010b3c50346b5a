"""Univariate polynomials, rational functions, and truncated Laurent series
over an exact field.  These are the scalar engines behind function-field
elements and local expansions at curve points.
"""

from __future__ import annotations

from .fields import FieldError


class Poly:
    """Dense univariate polynomial; coefficient 0 is the constant term."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        while coeffs and coeffs[-1] == field.zero:
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def const(cls, field, c):
        return cls(field, (field(c),))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(self.field, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == self.field.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def divmod(self, other):
        if other.is_zero():
            raise FieldError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(field, ()), self
        quo = [field.zero] * (dq + 1)
        lead_inv = field.invert(other.coeffs[-1])
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] * lead_inv
            quo[i] = c
            if c != field.zero:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return Poly(field, quo), Poly(field, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def gcd(self, other):
        if self.field.char == 0 and not (self.is_zero() or other.is_zero()):
            return self._gcd_rational(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def _gcd_rational(self, other):
        """Primitive pseudo-remainder Euclid over the integers; avoids the
        coefficient blowup of naive rational Euclid."""
        from math import gcd as igcd

        def to_int(p):
            dens = [c.denominator for c in p.coeffs]
            lcm = 1
            for d in dens:
                lcm = lcm // igcd(lcm, d) * d
            return [int(c * lcm) for c in p.coeffs]

        def prim(v):
            g = 0
            for c in v:
                g = igcd(g, abs(c))
                if g == 1:
                    break
            if g > 1:
                v = [c // g for c in v]
            return v

        def prem(u, v):
            # pseudo-remainder of u by v (both integer lists, v nonzero)
            u = list(u)
            dv = len(v) - 1
            lead = v[-1]
            while len(u) - 1 >= dv and any(u):
                while u and u[-1] == 0:
                    u.pop()
                if len(u) - 1 < dv:
                    break
                shift = len(u) - 1 - dv
                cu = u[-1]
                u = [c * lead for c in u]
                for i, cv in enumerate(v):
                    u[shift + i] -= cu * cv
                u.pop()
                while u and u[-1] == 0:
                    u.pop()
            return u

        a, b = prim(to_int(self)), prim(to_int(other))
        while b:
            a, b = b, prim(prem(a, b))
        out = Poly(self.field, [self.field(c) for c in a])
        return out.monic()

    def monic(self):
        if self.is_zero():
            return self
        inv = self.field.invert(self.coeffs[-1])
        return Poly(self.field, [c * inv for c in self.coeffs])

    def shift(self, k):
        """Multiply by x^k (k >= 0)."""
        if self.is_zero():
            return self
        return Poly(self.field, (self.field.zero,) * k + self.coeffs)

    def eval(self, x0):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def eval_series(self, s):
        """Evaluate at a Laurent series argument (Horner)."""
        acc = LSeries.zero(self.field, s.prec_end())
        for c in reversed(self.coeffs):
            acc = acc.mul(s).add(LSeries.const(self.field, c, s.prec_end()))
        return acc

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*x" % c)
            else:
                parts.append("%s*x^%d" % (c, i))
        return " + ".join(parts)


class RatFunc:
    """Quotient of polynomials in canonical form: coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        field = num.field
        if den is None:
            den = Poly.const(field, 1)
        if den.is_zero():
            raise FieldError("zero denominator")
        g = num.gcd(den)
        if not g.is_zero() and g.degree > 0:
            num = num // g
            den = den // g
        if not den.is_zero() and den.coeffs[-1] != field.one:
            inv = field.invert(den.coeffs[-1])
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def const(cls, field, c):
        return cls(Poly.const(field, c))

    @property
    def field(self):
        return self.num.field

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.num, self.den * other.den)
        return RatFunc(self.num * other, self.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise FieldError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self):
        if self.is_zero():
            raise FieldError("inverting zero rational function")
        return RatFunc(self.den, self.num)

    def eval(self, x0):
        d = self.den.eval(x0)
        if d == self.field.zero:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.eval(x0) / d

    def __repr__(self):
        if self.den.degree == 0:
            return repr(self.num)
        return "(%r)/(%r)" % (self.num, self.den)


class LSeries:
    """Truncated Laurent series: coeffs[i] is the coefficient of t^(val+i).

    The series is known modulo t^end, end = val + len(coeffs).  Arithmetic
    tracks the correct precision window of the result.
    """

    __slots__ = ("field", "val", "coeffs")

    def __init__(self, field, val, coeffs):
        # normalize: strip leading zeros but keep the known-window end fixed
        end = val + len(coeffs)
        i = 0
        while i < len(coeffs) and coeffs[i] == field.zero:
            i += 1
        self.field = field
        self.val = val + i
        self.coeffs = tuple(coeffs[i:])
        if not self.coeffs:
            self.val = end  # all-zero window: remember only the end

    @classmethod
    def zero(cls, field, end):
        return cls(field, end, ())

    @classmethod
    def const(cls, field, c, end):
        return cls(field, 0, (c,) + (field.zero,) * max(0, end - 1))

    @classmethod
    def from_poly(cls, p, end):
        return cls(p.field, 0, tuple(p.coeffs) + (p.field.zero,) * max(0, end - len(p.coeffs)))

    def prec_end(self):
        return self.val + len(self.coeffs)

    def is_zero_window(self):
        return not self.coeffs

    def order(self):
        """Exponent of the leading nonzero term, or None if none is known."""
        return self.val if self.coeffs else None

    def coeff(self, e):
        if e < self.val:
            return self.field.zero
        if e >= self.prec_end():
            raise FieldError("coefficient %d beyond precision %d" % (e, self.prec_end()))
        return self.coeffs[e - self.val]

    def add(self, other):
        end = min(self.prec_end(), other.prec_end())
        val = min(self.val, other.val, end)
        out = [self.field.zero] * (end - val)
        for i, c in enumerate(self.coeffs):
            e = self.val + i
            if e < end:
                out[e - val] = out[e - val] + c
        for i, c in enumerate(other.coeffs):
            e = other.val + i
            if e < end:
                out[e - val] = out[e - val] + c
        return LSeries(self.field, val, out)

    def neg(self):
        return LSeries(self.field, self.val, [-c for c in self.coeffs])

    def sub(self, other):
        return self.add(other.neg())

    def mul(self, other):
        # zero windows carry val == prec_end, so this end rule covers them too
        end = min(self.prec_end() + other.val, other.prec_end() + self.val)
        val = self.val + other.val
        if not self.coeffs or not other.coeffs:
            return LSeries.zero(self.field, end)
        out = [self.field.zero] * (end - val)
        for i, a in enumerate(self.coeffs):
            if a == self.field.zero:
                continue
            for j, b in enumerate(other.coeffs):
                e = self.val + i + other.val + j
                if e >= end:
                    break
                out[e - val] = out[e - val] + a * b
        return LSeries(self.field, val, out)

    def scale(self, c):
        return LSeries(self.field, self.val, [c * a for a in self.coeffs])

    def inverse(self):
        """Invert a series with known leading term."""
        if self.is_zero_window():
            raise FieldError("cannot invert a series that vanishes to working precision")
        n = len(self.coeffs)
        lead_inv = self.field.invert(self.coeffs[0])
        out = [self.field.zero] * n
        out[0] = lead_inv
        for k in range(1, n):
            s = self.field.zero
            for j in range(1, k + 1):
                s = s + self.coeffs[j] * out[k - j]
            out[k] = -lead_inv * s
        return LSeries(self.field, -self.val, out)

    def shift(self, k):
        return LSeries(self.field, self.val + k, self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "O(t^%d)" % self.val
        parts = [
            "%s*t^%d" % (c, self.val + i)
            for i, c in enumerate(self.coeffs)
            if c != self.field.zero
        ]
        return " + ".join(parts) + " + O(t^%d)" % self.prec_end()
