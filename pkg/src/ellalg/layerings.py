"""Divisor layerings: the combinatorial addresses of saturated one-sided
graded ideals.

A right-allowable layering (d^0, ..., d^{k-1}) satisfies
tau^{-1}(d^{i-1}) >= d^i; a left-allowable one satisfies
tau(d^{i-1}) >= d^i.  Trailing zero layers are trimmed so that layering
equality is syntactic.  The absorption operators implemented here extend a
layering by the vanishing data of points and divisors, with a closed form
for iterated absorption; the standard right/left families (cumulative,
tapered, row-deleted, relative) used by the blowup checks are built on top.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import Divisor, parse_divisor

RIGHT = "right"
LEFT = "left"


class AllowabilityError(ValueError):
    def __init__(self, index, msg):
        self.index = index
        super().__init__("layer %d: %s" % (index, msg))


@dataclass(frozen=True)
class Layering:
    side: str
    layers: tuple
    curve: object

    def __len__(self):
        return len(self.layers)

    def layer(self, i):
        """d^i, with the convention d^i = 0 for i >= length."""
        if i < len(self.layers):
            return self.layers[i]
        return Divisor.zero(self.curve)

    @property
    def total_degree(self):
        return sum(d.degree for d in self.layers)

    def degrees(self):
        return tuple(d.degree for d in self.layers)

    def is_empty(self):
        return not self.layers


def make_layering(tr, side, layers):
    """Validate and trim; raises AllowabilityError naming the first bad index."""
    if side not in (RIGHT, LEFT):
        raise ValueError("side must be 'right' or 'left'")
    layers = list(layers)
    while layers and layers[-1].is_zero():
        layers.pop()
    step = -1 if side == RIGHT else 1
    for i, d in enumerate(layers):
        if not d.is_effective():
            raise AllowabilityError(i, "layer %r is not effective" % (d,))
        if i >= 1 and not (layers[i - 1].tau(tr, step) >= d):
            raise AllowabilityError(
                i,
                "allowability fails: tau^{%d}(d^%d) does not dominate d^%d"
                % (step, i - 1, i),
            )
    return Layering(side, tuple(layers), tr.curve)


def empty_layering(curve, side=RIGHT):
    return Layering(side, (), curve)


def absorb_point(tr, q, z):
    """Extend a right layering by one vanishing point q.

    New layers: x^0 = z^0 + q, x^i = min(z^i + q, tau^{-1}(z^{i-1})).
    """
    return absorb_divisor(tr, Divisor.of_point(tr.curve, q), z)


def absorb_divisor(tr, d, z):
    """Extend a right layering by an effective divisor d (closed form)."""
    if z.side != RIGHT:
        raise ValueError("absorption is defined on right layerings")
    if not d.is_effective():
        raise ValueError("absorbed divisor must be effective")
    k = len(z)
    xs = []
    for i in range(k + 1):
        if i == 0:
            xs.append(z.layer(0) + d)
        else:
            xs.append((z.layer(i) + d).min(z.layer(i - 1).tau(tr, -1)))
    return make_layering(tr, RIGHT, xs)


def absorb_divisor_stepwise(tr, d, z):
    """Oracle route: absorb d one point at a time, in the fixed per-orbit
    order (lowest translate first within each orbit, orbits by sorted
    representative).  Used to cross-check the closed form."""
    for q in _absorption_order(tr, d):
        z = absorb_point(tr, q, z)
    return z


def _absorption_order(tr, d):
    comps = split_by_orbit(tr, d)
    out = []
    for rep, part in comps:
        translated = []
        for p, c in part.items():
            translated.append((tr.orbit_shift(rep, p), p, c))
        translated.sort(key=lambda t: t[0])
        for _, p, c in translated:
            out.extend([p] * c)
    return out


def split_by_orbit(tr, d, window=None):
    """Split a divisor into orbit components.

    Returns a list of (representative, component) pairs.  Points that the
    guarded orbit search cannot relate are treated as lying on fresh
    orbits.  The representative is the first support point seen (support
    order is canonical), and components are sorted by representative key.
    """
    reps = []
    comps = []
    for p in d.support():
        c = d.mult(p)
        for i, rep in enumerate(reps):
            if tr.orbit_shift(rep, p, window) is not None:
                comps[i] = comps[i] + Divisor.of_point(d.curve, p, c)
                break
        else:
            reps.append(p)
            comps.append(Divisor.of_point(d.curve, p, c))
    pairs = list(zip(reps, comps))
    pairs.sort(key=lambda rc: rc[0].sort_key(d.curve.field))
    return pairs


def absorb_iterated(tr, d, n, z):
    """Closed form for n successive absorptions of d, each shifted by
    tau^{-1} relative to the previous one:

        w^i = min over 0 <= j <= i of tau^{-j}(z^{i-j} + d_{n-j}).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if z.side != RIGHT:
        raise ValueError("iterated absorption is defined on right layerings")
    curve = tr.curve
    psums = {}

    def d_n(m):
        if m not in psums:
            psums[m] = d.partial_sum(tr, m)
        return psums[m]

    k = len(z)
    ws = []
    for i in range(k + n):
        best = None
        for j in range(i + 1):
            term = (z.layer(i - j) + d_n(n - j)).tau(tr, -j)
            best = term if best is None else best.min(term)
        ws.append(best if best is not None else Divisor.zero(curve))
    return make_layering(tr, RIGHT, ws)


def absorb_iterated_stepwise(tr, d, n, z):
    """n-fold absorption with explicit tau-shifted copies (oracle route)."""
    for j in range(n):
        z = absorb_divisor(tr, d.tau(tr, -j), z)
    return z


def layering_min(tr, a, b):
    return _lattice(tr, a, b, "min")


def layering_max(tr, a, b):
    return _lattice(tr, a, b, "max")


def _lattice(tr, a, b, mode):
    if a.side != b.side:
        raise ValueError("lattice operations need layerings on the same side")
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x, y = a.layer(i), b.layer(i)
        out.append(x.min(y) if mode == "min" else x.max(y))
    return make_layering(tr, a.side, out)


# ---------------------------------------------------------------------------
# standard families

def m_layering(tr, k, d):
    """Right layering (d_k, tau^{-1}(d_{k-1}), ..., tau^{-k+1}(d)).

    Its graded ideal has the closed-form codimension deg(d)*C(k+1,2); the
    degree-k pieces over all k assemble the blowup subring.  k <= 0 gives
    the empty layering (the unit ideal).
    """
    if k <= 0:
        return empty_layering(tr.curve, RIGHT)
    layers = [d.partial_sum(tr, k - i).tau(tr, -i) for i in range(k)]
    return make_layering(tr, RIGHT, layers)


def m_left_layering(tr, k, d):
    """Left counterpart: d^i = tau^i(d) + ... + tau^{k-1}(d)."""
    if k <= 0:
        return empty_layering(tr.curve, LEFT)
    curve = tr.curve
    layers = []
    for i in range(k):
        acc = Divisor.zero(curve)
        for j in range(i, k):
            acc = acc + d.tau(tr, j)
        layers.append(acc)
    return make_layering(tr, LEFT, layers)


def q_layering(tr, i, r, d, pt):
    """Tapered variant of the one-point cumulative family: same layers as
    m_layering(i, d*pt) except the last layer has multiplicity r <= d."""
    if not (0 <= r <= d):
        raise ValueError("need 0 <= r <= d")
    if i < 1:
        raise ValueError("need i >= 1")
    curve = tr.curve
    layers = []
    for j in range(i):
        acc = Divisor.zero(curve)
        if j == i - 1:
            acc = acc + Divisor.of_point(curve, tr.tau(pt, -(i - 1)), r)
        else:
            for m in range(j, i):
                acc = acc + Divisor.of_point(curve, tr.tau(pt, -m), d)
        layers.append(acc)
    return make_layering(tr, RIGHT, layers)


def q_left_layering(tr, i, r, d, pt):
    if not (0 <= r <= d):
        raise ValueError("need 0 <= r <= d")
    if i < 1:
        raise ValueError("need i >= 1")
    curve = tr.curve
    layers = []
    for j in range(i):
        acc = Divisor.zero(curve)
        if j == i - 1:
            acc = acc + Divisor.of_point(curve, tr.tau(pt, i - 1), r)
        else:
            for m in range(j, i):
                acc = acc + Divisor.of_point(curve, tr.tau(pt, m), d)
        layers.append(acc)
    return make_layering(tr, LEFT, layers)


def row_deleted_layering(tr, j, n, pt):
    """Layers of the one-point cumulative family at depth n with the
    vanishing on diagonal row j removed:

        c^i = sum of tau^{-m}(pt) over i <= m <= n-1, m != i + j.
    """
    curve = tr.curve
    layers = []
    for i in range(n):
        acc = Divisor.zero(curve)
        for m in range(i, n):
            if m != i + j:
                acc = acc + Divisor.of_point(curve, tr.tau(pt, -m))
        layers.append(acc)
    return make_layering(tr, RIGHT, layers)


def clipped_layering(tr, d, y, m):
    """z^{m,i} = tau^{-i}((d_{m-i} - y)_+): the cumulative family with the
    correction divisor y clipped out, layer by layer."""
    layers = [
        (d.partial_sum(tr, m - i) - y).positive_part().tau(tr, -i) for i in range(m)
    ]
    return make_layering(tr, RIGHT, layers)


def relative_point_layering(tr, c, q, n):
    """Degree-n layering of the point ideal of q taken relative to the
    blowup along c: (c_n + q, tau^{-1}(c_{n-1}), ..., tau^{-n+1}(c_1))."""
    curve = tr.curve
    layers = [c.partial_sum(tr, n) + Divisor.of_point(curve, q)]
    for i in range(1, n):
        layers.append(c.partial_sum(tr, n - i).tau(tr, -i))
    return make_layering(tr, RIGHT, layers)


def relative_m_layering(tr, dd, k, x, n):
    """Degree-n layering of the depth-k cumulative family of x relative to
    the blowup along dd: layer i = tau^{-i}(dd_{n-i} + x_{k-i})."""
    layers = []
    for i in range(max(n, k)):
        layers.append(
            (dd.partial_sum(tr, n - i) + x.partial_sum(tr, k - i)).tau(tr, -i)
        )
    return make_layering(tr, RIGHT, layers)


def transpose_pair(tr, k, d, n):
    """The (right, left) layering pair whose degree-n data must agree."""
    right = m_layering(tr, k, d)
    left = m_left_layering(tr, k, d.tau(tr, n - k))
    return right, left


def parse_layering(text, tr, names, side=RIGHT):
    """Parse `expr ; expr ; ...` where each expr is a divisor expression."""
    parts = [p.strip() for p in text.split(";")]
    layers = [parse_divisor(p, tr.curve, tr, names) for p in parts if p]
    return make_layering(tr, side, layers)
