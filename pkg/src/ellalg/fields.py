"""Exact base fields: arbitrary-precision rationals and prime fields.

Every computation in this package runs over one of these two fields; there
is no floating point anywhere.  Rationals are gmpy2.mpq when available
(much faster on large operands), falling back to fractions.Fraction.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _mpq

    _HAVE_GMPY = False


class FieldError(ValueError):
    """Raised on invalid field operations (mixed fields, division by zero)."""


class PrimeFieldElement:
    """Element of F_p, p prime.  Immutable, hashable, operator-overloaded."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldError("mixed prime fields: %d vs %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise FieldError("division by zero in F_%d" % self.p)
        return PrimeFieldElement(self.val * pow(o.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return PrimeFieldElement(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d" % self.val

    def sort_key(self):
        return self.val


class RationalField:
    """The field of rationals.  Elements are mpq (or Fraction) values."""

    char = 0
    name = "Q"

    def __call__(self, v=0):
        if isinstance(v, str):
            return _mpq(v)
        return _mpq(v)

    @property
    def zero(self):
        return _mpq(0)

    @property
    def one(self):
        return _mpq(1)

    def contains(self, x):
        return isinstance(x, type(_mpq(0))) or isinstance(x, int)

    def invert(self, x):
        if x == 0:
            raise FieldError("division by zero in Q")
        return 1 / _mpq(x)

    def sort_key(self, x):
        return (x.numerator, x.denominator)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


class PrimeField:
    """F_p for an odd prime p."""

    def __init__(self, p):
        if p < 3 or any(p % q == 0 for q in range(2, min(p, 1 + int(p**0.5) + 1))):
            raise FieldError("modulus %d is not an odd prime" % p)
        self.p = p
        self.char = p
        self.name = "Fp:%d" % p

    def __call__(self, v=0):
        if isinstance(v, str):
            if "/" in v:
                num, den = v.split("/")
                return self(int(num)) / self(int(den))
            v = int(v)
        if isinstance(v, PrimeFieldElement):
            if v.p != self.p:
                raise FieldError("mixed prime fields")
            return v
        return PrimeFieldElement(int(v), self.p)

    @property
    def zero(self):
        return PrimeFieldElement(0, self.p)

    @property
    def one(self):
        return PrimeFieldElement(1, self.p)

    def contains(self, x):
        return isinstance(x, PrimeFieldElement) and x.p == self.p

    def invert(self, x):
        return self.one / x

    def sort_key(self, x):
        return (x.val,)

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = RationalField()


def field_from_name(name):
    """Parse a field tag: "Q" or "Fp:<prime>"."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name.split(":", 1)[1]))
    raise FieldError("unknown field spec %r" % name)
