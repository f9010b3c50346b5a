"""Exact Hilbert series arithmetic and the dimension theory of layering
ideals.

Series are integer-polynomial numerators over a power of (1-t).  Quotient
dimensions of layering ideals are produced by the g-layer recursion

    dim (T/J)_n = dim (B/Jbar)_n + dim (T/L)_{n-1},

where L is the layering shifted one level up.  The bar term is exact in
the stable range (top-layer degree small against n*mu) and is otherwise
sandwiched: the saturated bar dimension is a lower bound for the quotient,
the total degree s of the layering an upper bound, and quotient dimensions
are nondecreasing in n.  Every reported value carries its status; a degree
where the bounds pinch is exact even below the stable range, which is what
certifies the above-diagonal dimensions the blowup checks need.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .layerings import RIGHT


class SeriesError(ValueError):
    pass


class HilbertSeries:
    """numerator / (1-t)^pole_order with integer numerator coefficients."""

    __slots__ = ("numer", "pole")

    def __init__(self, numer, pole=0):
        numer = list(numer)
        while numer and numer[-1] == 0:
            numer.pop()
        # cancel common (1-t) factors for a canonical form
        while pole > 0 and numer and sum(numer) == 0:
            out = []
            acc = 0
            for c in numer[:-1]:
                acc += c
                out.append(acc)
            numer = out
            while numer and numer[-1] == 0:
                numer.pop()
            pole -= 1
        if not numer:
            pole = 0
        self.numer = tuple(numer)
        self.pole = pole

    @classmethod
    def monomial(cls, shift=0, c=1, pole=0):
        return cls((0,) * shift + (c,), pole)

    def coeff(self, n):
        if n < 0:
            return 0
        total = 0
        for i, c in enumerate(self.numer):
            if i > n:
                break
            if self.pole == 0:
                total += c if i == n else 0
            else:
                total += c * comb(n - i + self.pole - 1, self.pole - 1)
        return total

    def coeffs(self, upto):
        return [self.coeff(n) for n in range(upto + 1)]

    def raise_pole(self, pole):
        """Raw numerator over (1-t)^pole; the constructor would cancel the
        common factors again, so this returns a plain list."""
        if pole < self.pole:
            raise SeriesError("cannot lower pole order")
        numer = list(self.numer)
        for _ in range(pole - self.pole):
            # multiply numerator by (1-t)
            numer = [a - b for a, b in zip(numer + [0], [0] + numer)]
        return numer

    def __add__(self, other):
        pole = max(self.pole, other.pole)
        a = self.raise_pole(pole)
        b = other.raise_pole(pole)
        n = max(len(a), len(b))
        numer = [
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)
        ]
        return HilbertSeries(numer, pole)

    def __neg__(self):
        return HilbertSeries([-c for c in self.numer], self.pole)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HilbertSeries([other * c for c in self.numer], self.pole)
        n = len(self.numer) + len(other.numer)
        numer = [0] * max(1, n - 1)
        for i, a in enumerate(self.numer):
            for j, b in enumerate(other.numer):
                numer[i + j] += a * b
        return HilbertSeries(numer, self.pole + other.pole)

    __rmul__ = __mul__

    def shift(self, k):
        return self * HilbertSeries.monomial(k)

    def equal_upto(self, other, upto):
        return all(self.coeff(n) == other.coeff(n) for n in range(upto + 1))

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and self.numer == other.numer
            and self.pole == other.pole
        )

    def __hash__(self):
        return hash((self.numer, self.pole))

    def __repr__(self):
        if not self.numer:
            return "0"
        parts = []
        for i, c in enumerate(self.numer):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                s = "t" if i == 1 else "t^%d" % i
                if c == 1:
                    parts.append(s)
                elif c == -1:
                    parts.append("-" + s)
                else:
                    parts.append("%d*%s" % (c, s))
        num = " + ".join(parts).replace("+ -", "- ")
        if self.pole == 0:
            return num
        return "(%s) / (1-t)^%d" % (num, self.pole)


@dataclass(frozen=True)
class DimEntry:
    n: int
    lo: int
    hi: int

    @property
    def exact(self):
        return self.lo == self.hi

    @property
    def status(self):
        return "exact" if self.exact else "bounded[%d,%d]" % (self.lo, self.hi)

    def value(self):
        if not self.exact:
            raise SeriesError("degree %d is only bounded: [%d, %d]" % (self.n, self.lo, self.hi))
        return self.lo


class DimProfile:
    """Per-degree dimensions with exact/bounded status."""

    def __init__(self, entries):
        self.entries = {e.n: e for e in entries}

    def __getitem__(self, n):
        return self.entries[n]

    def value(self, n):
        return self.entries[n].value()

    def degrees(self):
        return sorted(self.entries)

    def all_exact(self, degrees=None):
        degs = degrees if degrees is not None else self.degrees()
        return all(self.entries[n].exact for n in degs)

    def __repr__(self):
        return "DimProfile{%s}" % ", ".join(
            "%d: %s" % (n, self.entries[n].status) for n in self.degrees()
        )


def dim_B(mu, n):
    if n < 0:
        return 0
    return 1 if n == 0 else n * mu


def dim_T(mu, n):
    """dim T_n = 1 + mu*n(n+1)/2 for n >= 0 (sum of the bar dimensions)."""
    if n < 0:
        return 0
    return 1 + mu * comb(n + 1, 2)


def base_series(mu):
    """(h_B, h_T): the coordinate-ring series and its g-divisible cover."""
    h_b = HilbertSeries([1, mu - 2, 1], 2)
    h_t = HilbertSeries([1, mu - 2, 1], 3)
    return h_b, h_t


def _h0(ctx, div):
    """dim H^0 of the bundle attached to a divisor, by Riemann-Roch.

    Degree >= 1 forces deg(D); degree 0 gives 1 exactly for principal
    classes; negative degree gives 0.
    """
    d = div.degree
    if d >= 1:
        return d
    if d == 0:
        return 1 if div.is_principal() else 0
    return 0


def stable_start(z, mu):
    """Least l >= len(z) with deg d^i < mu*(l - i) for all layers."""
    l = len(z)
    for i, d in enumerate(z.layers):
        need = i + d.degree // mu + 1
        if need > l:
            l = need
    return l


def quotient_profile(ctx, z, upto):
    """DimProfile of dim (T/J)_n for 0 <= n <= upto, J the layering ideal.

    Works for right and left layerings; the two sides shift in opposite
    directions but have the same dimension recursion.
    """
    tr = ctx.translation
    mu = ctx.mu
    if z.is_empty():
        return DimProfile([DimEntry(n, 0, 0) for n in range(upto + 1)])
    s = z.total_degree
    shift_dir = 1 if z.side == RIGHT else -1

    lo_cache = {}

    def lower(layers, side, n):
        # recursion floor: saturated bar dimensions down every g-layer
        if n < 0:
            return 0
        if not layers:
            return 0
        key = (layers, n)
        if key in lo_cache:
            return lo_cache[key]
        top = layers[0]
        m_n = ctx.m_partial(n)
        if side == RIGHT:
            bar_cut = top
        else:
            bar_cut = top.tau(tr, -n + 1)
        bar = dim_B(mu, n) - _h0(ctx, m_n - bar_cut)
        shifted = tuple(d.tau(tr, shift_dir) for d in layers[1:])
        val = bar + lower(shifted, side, n - 1)
        lo_cache[key] = val
        return val

    def upper_rec(layers, n):
        if n < 0 or not layers:
            return 0
        return min(
            sum(d.degree for d in layers),
            dim_B(mu, n) + upper_rec(tuple(d.tau(tr, shift_dir) for d in layers[1:]), n - 1),
        )

    l_stable = stable_start(z, mu)
    los = []
    his = []
    for n in range(upto + 1):
        if n >= l_stable:
            los.append(s)
            his.append(s)
            lo_rec = lower(z.layers, z.side, n)
            if lo_rec != s:
                raise SeriesError(
                    "stable-range recursion mismatch at degree %d: %d != %d"
                    % (n, lo_rec, s)
                )
        else:
            los.append(lower(z.layers, z.side, n))
            his.append(min(s, upper_rec(z.layers, n)))
    # monotonicity of quotient dimensions tightens both bounds
    for n in range(1, upto + 1):
        los[n] = max(los[n], los[n - 1])
    for n in range(upto - 1, -1, -1):
        his[n] = min(his[n], his[n + 1])
    entries = []
    for n in range(upto + 1):
        if los[n] > his[n]:
            raise SeriesError("inconsistent bounds at degree %d" % n)
        entries.append(DimEntry(n, los[n], his[n]))
    return DimProfile(entries)


def ideal_profile(ctx, z, upto):
    """DimProfile of dim J(z)_n = dim T_n - dim (T/J)_n."""
    q = quotient_profile(ctx, z, upto)
    entries = []
    for n in range(upto + 1):
        e = q[n]
        t = dim_T(ctx.mu, n)
        entries.append(DimEntry(n, t - e.hi, t - e.lo))
    return DimProfile(entries)


def m_ideal_dim(mu, k, deg_d, n):
    """Closed form dim M(k,d)_n = dim T_n - deg(d) * C(k+1, 2).

    Valid for 0 <= k <= n and deg(d) < mu.
    """
    if not 0 <= k <= n:
        raise SeriesError("closed form needs 0 <= k <= n, got k=%d n=%d" % (k, n))
    if not deg_d < mu:
        raise SeriesError("closed form needs deg d < mu")
    return dim_T(mu, n) - deg_d * comb(k + 1, 2)


def blowup_series_report(ctx, d, upto, shelf_levels=()):
    """Dimensions of the blowup ring of d and the series comparison.

    The degreewise dimensions come from the closed form with k = n.  They
    are compared against h_T - deg(d) * t/(1-t)^3 and against
    h_T - deg(d)/(1-t)^3; the first matches and the second misses every
    degree by a shifted binomial, and the report records both outcomes
    rather than silently normalizing.
    """
    mu = ctx.mu
    deg = d.degree
    if not deg < mu:
        raise SeriesError("blowup needs deg d < mu")
    _, h_t = base_series(mu)
    dims = [m_ideal_dim(mu, n, deg, n) for n in range(upto + 1)]
    with_t = h_t - deg * HilbertSeries.monomial(1, 1, 3)
    without_t = h_t - deg * HilbertSeries.monomial(0, 1, 3)
    report = {
        "mu": mu,
        "deg_d": deg,
        "dims": dims,
        "series_with_t_shift": repr(with_t),
        "series_without_t_shift": repr(without_t),
        "matches_with_t_shift": all(
            with_t.coeff(n) == dims[n] for n in range(upto + 1)
        ),
        "matches_without_t_shift": all(
            without_t.coeff(n) == dims[n] for n in range(upto + 1)
        ),
        "shelves": {},
    }
    for level in shelf_levels:
        report["shelves"][level] = [
            dim_T(mu, n) - deg * comb(max(n - level + 1, 0), 2)
            for n in range(upto + 1)
        ]
    return report
