"""Weierstrass elliptic curves, exact group law, and the translation map.

Curves are given by the long Weierstrass equation

    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6

over an exact field.  The translation automorphism is addition of a fixed
non-torsion point alpha; its infinite order is enforced by a guarded
window (over Q via the torsion-order bound, over F_p by computing the
exact order of alpha).
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import RationalField

# Over Q a rational torsion point has order at most 12, so surviving this
# many multiples certifies infinite order.
_TORSION_ORDER_BOUND = 12


class WindowError(ValueError):
    """A tau-power or orbit search exceeded the configured safety window."""


@dataclass(frozen=True)
class Point:
    """Affine point (x, y) or the point at infinity."""

    x: object
    y: object
    infinity: bool = False

    @classmethod
    def at_infinity(cls):
        return cls(None, None, True)

    def __repr__(self):
        if self.infinity:
            return "Oinf"
        return "(%s, %s)" % (self.x, self.y)

    def sort_key(self, field):
        if self.infinity:
            return (1,)
        return (0,) + tuple(field.sort_key(self.x)) + tuple(field.sort_key(self.y))


class Curve:
    """Smooth long-Weierstrass curve with exact chord-tangent arithmetic."""

    def __init__(self, field, a1, a2, a3, a4, a6):
        self.field = field
        self.a1 = field(a1)
        self.a2 = field(a2)
        self.a3 = field(a3)
        self.a4 = field(a4)
        self.a6 = field(a6)
        if self.discriminant() == field.zero:
            raise ValueError("singular curve: discriminant is zero")

    def discriminant(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def equation_value(self, x, y):
        return (
            y * y
            + self.a1 * x * y
            + self.a3 * y
            - (x * x * x + self.a2 * x * x + self.a4 * x + self.a6)
        )

    def contains(self, pt):
        if pt.infinity:
            return True
        return self.equation_value(pt.x, pt.y) == self.field.zero

    def point(self, x, y):
        pt = Point(self.field(x), self.field(y))
        if not self.contains(pt):
            raise ValueError("point %r is not on the curve" % (pt,))
        return pt

    @property
    def zero_point(self):
        return Point.at_infinity()

    def neg(self, pt):
        if pt.infinity:
            return pt
        return Point(pt.x, -pt.y - self.a1 * pt.x - self.a3)

    def add(self, P, Q):
        if not (self.contains(P) and self.contains(Q)):
            raise ValueError("group_add: point off the curve")
        if P.infinity:
            return Q
        if Q.infinity:
            return P
        if P.x == Q.x:
            if Q.y == -P.y - self.a1 * P.x - self.a3:
                return Point.at_infinity()
            # tangent line
            num = 3 * P.x * P.x + 2 * self.a2 * P.x + self.a4 - self.a1 * P.y
            den = 2 * P.y + self.a1 * P.x + self.a3
            lam = num / den
        else:
            lam = (Q.y - P.y) / (Q.x - P.x)
        nu = P.y - lam * P.x
        x3 = lam * lam + self.a1 * lam - self.a2 - P.x - Q.x
        y3 = -(lam + self.a1) * x3 - nu - self.a3
        return Point(x3, y3)

    def sub(self, P, Q):
        return self.add(P, self.neg(Q))

    def mul(self, n, P):
        if n < 0:
            return self.mul(-n, self.neg(P))
        acc = Point.at_infinity()
        base = P
        while n:
            if n & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            n >>= 1
        return acc

    def is_two_torsion(self, pt):
        """True when P = -P, i.e. the vertical-line / ramified case."""
        if pt.infinity:
            return False
        return 2 * pt.y + self.a1 * pt.x + self.a3 == self.field.zero


class Translation:
    """Adds a fixed point alpha; models an infinite-order automorphism.

    Over Q the infinite order of alpha is certified by checking that no
    multiple up to the rational torsion-order bound vanishes.  Over F_p the
    exact order is computed and every translation index is confined to half
    of it, so all points produced inside the window are pairwise distinct.
    """

    def __init__(self, curve, alpha, window=64, orbit_window=None):
        if alpha.infinity:
            raise ValueError("translation by the identity is not allowed")
        if not curve.contains(alpha):
            raise ValueError("alpha is not on the curve")
        self.curve = curve
        self.alpha = alpha
        if isinstance(curve.field, RationalField):
            self.order = None
            P = alpha
            self.integrality_witness = None
            for n in range(1, _TORSION_ORDER_BOUND + 5):
                if P.infinity:
                    raise ValueError("alpha is torsion of order %d" % n)
                if n <= _TORSION_ORDER_BOUND + 4 and self.integrality_witness is None:
                    # rational torsion points have integral coordinates on an
                    # integral model, so a non-integral multiple is a second,
                    # independent witness of infinite order
                    if P.x.denominator != 1 or P.y.denominator != 1:
                        self.integrality_witness = n
                P = curve.add(P, alpha)
            self.window = window
        else:
            order = 1
            P = alpha
            while not P.infinity:
                P = curve.add(P, alpha)
                order += 1
                if order > curve.field.char + 1 + 2 * int(curve.field.char**0.5) + 2:
                    raise ValueError("failed to find the order of alpha")
            self.order = order
            self.window = min(window, order // 2)
            if self.window < 1:
                raise ValueError("order of alpha (%d) too small for any window" % order)
        if orbit_window is None:
            orbit_window = self.window // 2 if self.order is None else min(
                self.window // 2, self.order // 4
            )
        if self.order is not None and orbit_window > self.order // 2:
            raise ValueError("orbit window exceeds half the order of alpha")
        self.orbit_window = orbit_window
        self._pow_cache = {0: curve.zero_point, 1: alpha}

    def alpha_power(self, k):
        """[k]alpha with caching."""
        if k not in self._pow_cache:
            if k > 0:
                self._pow_cache[k] = self.curve.add(self.alpha_power(k - 1), self.alpha)
            else:
                self._pow_cache[k] = self.curve.neg(self.alpha_power(-k))
        return self._pow_cache[k]

    def check_window(self, k):
        limit = self.window if self.order is None else self.order // 2
        if abs(k) > limit:
            raise WindowError(
                "translation index %d exceeds the guarded window %d" % (k, limit)
            )

    def tau(self, pt, k=1):
        """tau^k(P) = P + [k]alpha.  The window guard keeps indices honest."""
        self.check_window(k)
        return self.curve.add(pt, self.alpha_power(k))

    def orbit_shift(self, P, Q, window=None):
        """The unique k with |k| <= window and Q = tau^k(P), or None."""
        if window is None:
            window = self.orbit_window
        if self.order is not None and window > self.order // 2:
            raise WindowError("orbit window %d too large for point order" % window)
        for k in range(-window, window + 1):
            if self.tau(P, k) == Q:
                return k
        return None
