"""Truncated triangular matrix-ring oracle.

Single-orbit layerings correspond to monomial right ideals in the ring of
Z x Z lower triangular matrices over k[[x]]: a layering whose i-th layer
has multiplicity a at the j-th orbit translate contributes the entry ideal
(x)^a in the (j+i, j) spot.  We truncate to a finite index window
[-W..W] and exponents below B (x^B = 0), which is exact for all the
desk-scale computations here: lower-triangular products never leave the
index window, and the fixtures keep exponents strictly below B.

Exponents live in [0, B]; the value B doubles as the zero entry of the
truncated ring (the infinity sentinel).  All ideals in play are monomial,
so products, sums, and intersections are computed on minimal exponents;
`TruncatedMatrixIdeal.monomials` exposes the underlying spanning set and a
brute-force product over it is used in the tests to cross-check the
entrywise rules.
"""

from __future__ import annotations

from .layerings import RIGHT, make_layering, split_by_orbit
from .divisors import Divisor


class CpWindowError(ValueError):
    """Orbit index or exponent left the configured truncation bounds."""


class TruncatedMatrixIdeal:
    """Monomial right ideal of the truncated lower-triangular matrix ring.

    exps[(k, l)] holds the minimal x-exponent of the (k, l) entry for
    -W <= l <= k <= W; the cap value B means the entry is zero.
    """

    def __init__(self, window, trunc, exps=None):
        self.window = window
        self.trunc = trunc
        self.exps = {}
        for k in range(-window, window + 1):
            for l in range(-window, k + 1):
                self.exps[(k, l)] = 0
        if exps:
            for (k, l), e in exps.items():
                self.set_exp(k, l, e)

    def set_exp(self, k, l, e):
        if not (-self.window <= l <= k <= self.window):
            raise CpWindowError("index (%d, %d) outside window %d" % (k, l, self.window))
        self.exps[(k, l)] = min(e, self.trunc)

    def exp(self, k, l):
        if k < l:
            return self.trunc  # strictly upper entries are zero in the ring
        if not (-self.window <= l and k <= self.window):
            raise CpWindowError("index (%d, %d) outside window %d" % (k, l, self.window))
        return self.exps[(k, l)]

    def copy_with(self, exps):
        out = TruncatedMatrixIdeal(self.window, self.trunc)
        out.exps = dict(exps)
        return out

    def check_right_ideal(self):
        """a_{k,l} <= a_{k,l+1} along every row."""
        for k in range(-self.window, self.window + 1):
            for l in range(-self.window, k):
                if self.exp(k, l) > self.exp(k, l + 1):
                    return False
        return True

    def _binary(self, other, op):
        if (self.window, self.trunc) != (other.window, other.trunc):
            raise CpWindowError("mismatched window/truncation")
        out = {}
        for key in self.exps:
            out[key] = op(self.exps[key], other.exps[key])
        return self.copy_with(out)

    def intersect(self, other):
        return self._binary(other, max)

    def add(self, other):
        return self._binary(other, min)

    def mul(self, other):
        """Right-ideal product; exact inside the window for lower
        triangular factors since l <= m <= k never escapes it."""
        if (self.window, self.trunc) != (other.window, other.trunc):
            raise CpWindowError("mismatched window/truncation")
        out = {}
        for (k, l) in self.exps:
            best = self.trunc
            for m in range(l, k + 1):
                e = self.exps[(k, m)] + other.exps[(m, l)]
                if e < best:
                    best = e
            out[(k, l)] = best
        return self.copy_with(out)

    def mul_diag_shift(self):
        """Right-multiply by the subdiagonal shift matrix N = sum e_{i,i-1}:
        column l of the product is column l+1 of the ideal."""
        out = {}
        for (k, l) in self.exps:
            out[(k, l)] = self.exp(k, l + 1) if l + 1 <= k else self.trunc
        return self.copy_with(out)

    def monomials(self):
        """Spanning monomials (k, l, e) with exp(k,l) <= e < B."""
        out = set()
        for (k, l), a in self.exps.items():
            for e in range(a, self.trunc):
                out.add((k, l, e))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedMatrixIdeal)
            and self.window == other.window
            and self.trunc == other.trunc
            and self.exps == other.exps
        )

    def __repr__(self):
        lines = []
        for k in range(-self.window, self.window + 1):
            row = []
            for l in range(-self.window, k + 1):
                e = self.exps[(k, l)]
                row.append("." if e >= self.trunc else str(e))
            lines.append(" ".join(row))
        return "\n".join(lines)


def full_ring(window, trunc):
    return TruncatedMatrixIdeal(window, trunc)


def point_row_ideal(window, trunc, i):
    """The maximal right ideal with (x) in the (i, i) spot: all matrices
    whose (i, i) entry has zero constant term."""
    out = TruncatedMatrixIdeal(window, trunc)
    out.set_exp(i, i, 1)
    return out


def off_diagonal_ideal(window, trunc):
    """N*C_p: matrices vanishing along the main diagonal."""
    out = TruncatedMatrixIdeal(window, trunc)
    for i in range(-window, window + 1):
        out.set_exp(i, i, trunc)
    return out


def realize(tr, z, window, trunc, rep=None):
    """Exponent matrix of a single-orbit right layering.

    Layer i with multiplicity a at tau^j(rep) contributes a_{j+i, j} = a.
    Multi-orbit input is rejected; the caller splits by orbit first.
    """
    if z.side != RIGHT:
        raise ValueError("matrix realization is defined for right layerings")
    out = TruncatedMatrixIdeal(window, trunc)
    if z.is_empty():
        return out, rep
    total = Divisor.zero(tr.curve)
    for d in z.layers:
        total = total + d
    comps = split_by_orbit(tr, total)
    if len(comps) != 1:
        raise ValueError(
            "layering meets %d orbits; split before realizing" % len(comps)
        )
    if rep is None:
        rep = comps[0][0]
    for i, d in enumerate(z.layers):
        for p, a in d.items():
            j = tr.orbit_shift(rep, p, window)
            if j is None:
                raise CpWindowError("point %r not within orbit window of rep" % (p,))
            if a >= trunc:
                raise CpWindowError("multiplicity %d reaches truncation %d" % (a, trunc))
            out.set_exp(j + i, j, a)
    if not out.check_right_ideal():
        raise ValueError("realized exponents violate the right-ideal condition")
    return out, rep


def extract_layering(tr, ideal, rep):
    """Inverse of `realize`: read layers back off the exponent matrix."""
    W = ideal.window
    layers = {}
    for (k, l), a in ideal.exps.items():
        if 0 < a < ideal.trunc:
            i = k - l
            layers.setdefault(i, []).append((tr.tau(rep, l), a))
    if not layers:
        return make_layering(tr, RIGHT, [])
    depth = max(layers) + 1
    out = []
    for i in range(depth):
        out.append(Divisor(tr.curve, dict(layers.get(i, []))))
    return make_layering(tr, RIGHT, out)


def cp_suite(tr, za, zb, window, trunc, rep=None, shifts=(-2, -1, 0, 1, 2)):
    """Bundled oracle report for a pair of single-orbit layerings.

    Confirms (a) row-ideal products match point absorption, (b) the
    lattice correspondence (intersection = max, sum = min), and (c) the
    off-diagonal shift rule.  Failures are listed, not raised.
    """
    from .layerings import absorb_point, layering_max, layering_min, make_layering

    failures = []
    ia, rep = realize(tr, za, window, trunc, rep=rep)
    ib, _ = realize(tr, zb, window, trunc, rep=rep)
    for i in shifts:
        lhs = ia.mul(point_row_ideal(window, trunc, i))
        rhs, _ = realize(tr, absorb_point(tr, tr.tau(rep, i), za), window, trunc, rep=rep)
        if lhs != rhs:
            failures.append("row-ideal product at shift %d" % i)
    mx, _ = realize(tr, layering_max(tr, za, zb), window, trunc, rep=rep)
    mn, _ = realize(tr, layering_min(tr, za, zb), window, trunc, rep=rep)
    if ia.intersect(ib) != mx:
        failures.append("intersection vs layering max")
    if ia.add(ib) != mn:
        failures.append("sum vs layering min")
    for z, ideal in ((za, ia), (zb, ib)):
        shifted = make_layering(tr, z.side, [d.tau(tr, 1) for d in z.layers[1:]])
        ish, _ = realize(tr, shifted, window, trunc, rep=rep)
        if ideal.intersect(off_diagonal_ideal(window, trunc)) != ish.mul_diag_shift():
            failures.append("off-diagonal shift rule")
    return {"ok": not failures, "failures": failures, "representative": repr(rep)}


def brute_force_mul(window, trunc, I, J):
    """Product computed on the raw monomial spanning sets; test oracle."""
    left = I.monomials()
    right = J.monomials()
    by_row = {}
    for (m, l, f) in right:
        by_row.setdefault(m, []).append((l, f))
    prods = set()
    for (k, m, e) in left:
        for (l, f) in by_row.get(m, ()):
            if e + f < trunc:
                prods.add((k, l, e + f))
    out = TruncatedMatrixIdeal(window, trunc)
    exps = {key: trunc for key in out.exps}
    for (k, l, e) in prods:
        if e < exps[(k, l)]:
            exps[(k, l)] = e
    # the product of upward-closed monomial sets is upward closed, so the
    # minimal exponents determine it
    return out.copy_with(exps)
