"""Formal divisors on an elliptic curve: lattice structure, translation
action, partial sums, and linear equivalence via degree + group-law sum.
"""

from __future__ import annotations

from .curve import Point


class Divisor:
    """Finite formal Z-combination of curve points.

    Immutable; zero multiplicities are never stored.  The lattice order is
    coefficientwise.
    """

    __slots__ = ("curve", "_m",)

    def __init__(self, curve, mults=None):
        m = {}
        if mults:
            for pt, c in mults.items() if isinstance(mults, dict) else mults:
                if c == 0:
                    continue
                if not curve.contains(pt):
                    raise ValueError("divisor support point %r off the curve" % (pt,))
                m[pt] = m.get(pt, 0) + c
                if m[pt] == 0:
                    del m[pt]
        self.curve = curve
        self._m = m

    @classmethod
    def of_point(cls, curve, pt, mult=1):
        return cls(curve, {pt: mult})

    @classmethod
    def zero(cls, curve):
        return cls(curve, {})

    def mult(self, pt):
        return self._m.get(pt, 0)

    def support(self):
        return sorted(self._m, key=lambda p: p.sort_key(self.curve.field))

    def items(self):
        return [(p, self._m[p]) for p in self.support()]

    @property
    def degree(self):
        return sum(self._m.values())

    def is_zero(self):
        return not self._m

    def is_effective(self):
        return all(c > 0 for c in self._m.values())

    def __add__(self, other):
        out = dict(self._m)
        for p, c in other._m.items():
            out[p] = out.get(p, 0) + c
        return Divisor(self.curve, out)

    def __sub__(self, other):
        out = dict(self._m)
        for p, c in other._m.items():
            out[p] = out.get(p, 0) - c
        return Divisor(self.curve, out)

    def __rmul__(self, n):
        return Divisor(self.curve, {p: n * c for p, c in self._m.items()})

    def __neg__(self):
        return Divisor(self.curve, {p: -c for p, c in self._m.items()})

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._m == other._m

    def __hash__(self):
        return hash(frozenset(self._m.items()))

    def __le__(self, other):
        return (other - self).is_effective() or other == self

    def __ge__(self, other):
        return other <= self

    def min(self, other):
        pts = set(self._m) | set(other._m)
        return Divisor(
            self.curve, {p: min(self.mult(p), other.mult(p)) for p in pts}
        )

    def max(self, other):
        pts = set(self._m) | set(other._m)
        return Divisor(
            self.curve, {p: max(self.mult(p), other.mult(p)) for p in pts}
        )

    def positive_part(self):
        return Divisor(self.curve, {p: c for p, c in self._m.items() if c > 0})

    def tau(self, tr, k):
        """Apply tau^k to every support point; degree is preserved."""
        if k == 0:
            return self
        return Divisor(self.curve, {tr.tau(p, k): c for p, c in self._m.items()})

    def partial_sum(self, tr, n):
        """d_n = d + tau^{-1}(d) + ... + tau^{-(n-1)}(d); zero for n <= 0."""
        acc = Divisor.zero(self.curve)
        for i in range(max(0, n)):
            acc = acc + self.tau(tr, -i)
        return acc

    def pointsum(self):
        """Group-law sum of [c]P over the support."""
        acc = Point.at_infinity()
        for p, c in self._m.items():
            acc = self.curve.add(acc, self.curve.mul(c, p))
        return acc

    def class_of(self):
        return DivisorClass(self.degree, self.pointsum())

    def lin_equiv(self, other):
        """Abel-Jacobi criterion: equal degree and equal group-law sum."""
        return self.class_of() == other.class_of()

    def is_principal(self):
        return self.degree == 0 and self.pointsum().infinity

    def __repr__(self):
        if not self._m:
            return "0"
        return " + ".join(
            ("%d*%r" % (c, p)) if c != 1 else repr(p) for p, c in self.items()
        )


class DivisorClass:
    """Image of a divisor in Pic(E): the pair (degree, group-law point sum)."""

    __slots__ = ("degree", "pointsum")

    def __init__(self, degree, pointsum):
        self.degree = degree
        self.pointsum = pointsum

    def __eq__(self, other):
        return (
            isinstance(other, DivisorClass)
            and self.degree == other.degree
            and self.pointsum == other.pointsum
        )

    def __hash__(self):
        return hash((self.degree, self.pointsum))

    def combine(self, other, curve):
        return DivisorClass(
            self.degree + other.degree, curve.add(self.pointsum, other.pointsum)
        )

    def __repr__(self):
        return "[deg %d, sum %r]" % (self.degree, self.pointsum)


def parse_divisor(text, curve, tr, names):
    """Parse the divisor grammar: sum of `c*NAME@k` terms.

    NAME is a declared point, `@k` applies tau^k (default 0); `Oinf` and
    literal `(x,y)` coordinates are allowed.  Example:
    ``2*p@0 + 1*p@-1 + 1*q``.
    """
    import re

    total = Divisor.zero(curve)
    text = text.strip()
    if not text or text == "0":
        return total
    term_re = re.compile(
        r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*\*\s*)?"
        r"(?P<pt>Oinf|\w+|\([^)]*\))(?:@(?P<shift>-?\d+))?\s*"
    )
    pos = 0
    while pos < len(text):
        m = term_re.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(
                "divisor parse error at position %d in %r" % (pos, text)
            )
        pos = m.end()
        sign = -1 if m.group("sign") == "-" else 1
        coeff = sign * int(m.group("coeff") or 1)
        name = m.group("pt")
        shift = int(m.group("shift") or 0)
        if name == "Oinf":
            pt = curve.zero_point
        elif name.startswith("("):
            xs, ys = name[1:-1].split(",")
            pt = curve.point(curve.field(xs.strip()), curve.field(ys.strip()))
        elif name in names:
            pt = names[name]
        else:
            raise ValueError("unknown point name %r in divisor expression" % name)
        if shift:
            pt = tr.tau(pt, shift)
        total = total + Divisor.of_point(curve, pt, coeff)
    return total
