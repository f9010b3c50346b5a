"""Section spaces: exact Riemann-Roch bases, the twisted coordinate ring
with its star multiplication, and the subspace machinery built on a
tau-stable evaluation grid.

The grid consists of consecutive translates of the base point of the
ample divisor's orbit, placed so that no space in play has a pole there.
Because the grid is an arithmetic progression under tau, pulling a
function back along tau^k is an index shift of its evaluation vector, so
star products reduce to componentwise products of shifted rows.  Exact
linear algebra over those rows decides every subspace identity; a row
count larger than the pole degree of the ambient space makes evaluation
faithful, and that capacity is asserted on every comparison.

Symbolic elements stay the source of truth: Riemann-Roch bases are
certified by valuations, and star products are spot-checked symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import Divisor
from .fields import FieldError, PrimeField
from .funcfield import (
    FnElement,
    _ExpansionCache,
    local_expansion,
    pullback,
    valuation,
)
from .linalg import Echelon, Subspace, nullspace
from .poly import Poly, RatFunc


class GridError(ValueError):
    """The evaluation grid cannot support the requested computation."""


@dataclass(frozen=True)
class SectionSpace:
    """Exact basis of L(D), optionally tagged with a graded degree."""

    divisor: Divisor
    basis: tuple
    degree: object = None  # graded degree when the space sits inside B_n

    @property
    def dim(self):
        return len(self.basis)


class TCRContext:
    """Twisted coordinate ring context: curve, translation, ample divisor,
    evaluation grid, and every cache the section machinery needs."""

    def __init__(self, curve, translation, ample, grid_lo, grid_size):
        if ample.degree < 2:
            raise ValueError("ample divisor must have degree >= 2")
        if not ample.is_effective():
            raise ValueError("ample divisor must be effective")
        self.curve = curve
        self.field = curve.field
        self.translation = translation
        self.ample = ample
        self.mu = ample.degree
        self.grid_lo = grid_lo
        self.grid_hi = grid_lo + grid_size - 1
        self._grid_points = {
            j: translation.tau(curve.zero_point, j)
            for j in range(grid_lo, self.grid_hi + 1)
        }
        support = set(ample.support())
        for j, pt in self._grid_points.items():
            if pt in support or pt.infinity:
                raise GridError("grid index %d meets the ample support" % j)
        self.expansions = _ExpansionCache(curve)
        self._m_partial = {}
        self._rr_cache = {}
        self._row_cache = {}
        self._graded = {}
        self._product_cache = {}
        # rank certificates over the rationals go through this prime: a
        # full-rank reduction certifies full rational rank exactly
        self._ver_field = PrimeField((1 << 31) - 1) if self.field.char == 0 else None
        self._row_mod_cache = {}
        self._star_check_cache = {}

    # -- divisor helpers ----------------------------------------------------

    def m_partial(self, n):
        if n not in self._m_partial:
            self._m_partial[n] = self.ample.partial_sum(self.translation, n)
        return self._m_partial[n]

    def point_divisor(self, pt, mult=1):
        return Divisor.of_point(self.curve, pt, mult)

    # -- Riemann-Roch bases --------------------------------------------------

    def rr_basis(self, D, degree=None):
        """Exact basis of L(D) = {f : div(f) + D >= 0}, dim = deg D.

        Poles at finite points are cleared by a polynomial, the problem is
        solved among the Weierstrass monomials with poles only at
        infinity, vanishing conditions are imposed through local
        expansions, and the clearing factor is divided back out.  Every
        returned element is certified by valuations at the support.
        """
        key = (D, degree)
        if key in self._rr_cache:
            return self._rr_cache[key]
        if D.degree < 1:
            raise ValueError("rr_basis needs deg D >= 1, got %d" % D.degree)
        curve = self.curve
        field = self.field
        h = Poly.const(field, 1)
        div_h = Divisor.zero(curve)
        for pt, c in D.positive_part().items():
            if pt.infinity:
                continue
            factor = Poly(field, (-pt.x, field.one))
            for _ in range(c):
                h = h * factor
            neg_pt = curve.neg(pt)
            if neg_pt == pt:
                div_h = div_h + self.point_divisor(pt, 2 * c)
            else:
                div_h = div_h + self.point_divisor(pt, c) + self.point_divisor(neg_pt, c)
            div_h = div_h - self.point_divisor(curve.zero_point, 2 * c)
        D_cleared = D - div_h
        pole_order = D_cleared.mult(curve.zero_point)
        if pole_order < 1:
            raise ValueError("unexpected non-positive pole order after clearing")
        mons = [
            FnElement(curve, RatFunc(Poly(field, (field.zero,) * i + (field.one,))))
            for i in range(pole_order // 2 + 1)
        ]
        mons += [
            FnElement(
                curve,
                RatFunc.const(field, 0),
                RatFunc(Poly(field, (field.zero,) * i + (field.one,))),
            )
            for i in range((pole_order - 3) // 2 + 1)
        ]
        rows = []
        for pt, c in D_cleared.items():
            if c >= 0:
                if not pt.infinity and c > 0:
                    raise ValueError("clearing left a finite positive part")
                continue
            order = -c
            if pt.infinity:
                raise ValueError("required vanishing at infinity is out of contract")
            expansions = [
                local_expansion(mon, pt, order, self.expansions) for mon in mons
            ]
            for e in range(order):
                rows.append(tuple(s.coeff(e) for s in expansions))
        if rows:
            coeff_vectors = nullspace(field, rows, len(mons))
        else:
            coeff_vectors = [
                tuple(
                    field.one if i == j else field.zero for i in range(len(mons))
                )
                for j in range(len(mons))
            ]
        h_rat = RatFunc(h)
        basis = []
        for vec in coeff_vectors:
            g = FnElement.const(curve, 0)
            for c_i, mon in zip(vec, mons):
                if c_i != field.zero:
                    g = g + FnElement(curve, mon.a * RatFunc.const(field, c_i), mon.b * RatFunc.const(field, c_i))
            basis.append(FnElement(curve, g.a / h_rat, g.b / h_rat))
        if len(basis) != D.degree:
            raise ValueError(
                "Riemann-Roch dimension mismatch: got %d, expected %d for %r"
                % (len(basis), D.degree, D)
            )
        for f in basis:
            self.certify_membership(f, D)
        space = SectionSpace(D, tuple(basis), degree)
        self._rr_cache[key] = space
        return space

    def certify_membership(self, f, D):
        """Assert v_P(f) + D(P) >= 0 at every point of supp D."""
        for pt, c in D.items():
            v = valuation(f, pt, self.expansions)
            if v + c < 0:
                raise ValueError(
                    "valuation certificate failed at %r: v=%d, D=%d" % (pt, v, c)
                )

    # -- graded pieces of the coordinate ring ---------------------------------

    def graded_piece(self, n):
        """B_n = H^0 of the n-th twist; dim n*mu for n >= 1, k for n = 0."""
        if n not in self._graded:
            if n < 0:
                raise ValueError("no graded pieces in negative degrees")
            if n == 0:
                self._graded[n] = SectionSpace(
                    Divisor.zero(self.curve), (FnElement.one(self.curve),), 0
                )
            else:
                self._graded[n] = self.rr_basis(self.m_partial(n), degree=n)
        return self._graded[n]

    def twisted_space(self, n, d):
        """Sections of the n-th twist vanishing along d, inside B_n."""
        if n == 0 and d.is_zero():
            return self.graded_piece(0)
        D = self.m_partial(n) - d
        if D.degree < 1:
            raise ValueError("twisted space would have degree < 1")
        return self.rr_basis(D, degree=n)

    # -- evaluation machinery --------------------------------------------------

    def grid_point(self, j):
        if j not in self._grid_points:
            raise GridError("grid index %d outside [%d, %d]" % (j, self.grid_lo, self.grid_hi))
        return self._grid_points[j]

    def eval_at_index(self, f, j):
        pt = self.grid_point(j)
        try:
            return f.eval(pt)
        except ZeroDivisionError:
            # spurious pole of the reduced coordinates at a mirror point;
            # the function itself is finite there, so expand locally
            s = local_expansion(f, pt, 2, self.expansions)
            if s.order() is not None and s.order() < 0:
                raise GridError("function has a genuine pole at grid index %d" % j)
            return s.coeff(0)

    def row(self, f, shift=0):
        """Evaluation vector of f at grid indices lo+shift, ..., hi.

        A shifted row is just a slice of the full row, which is what makes
        pullback-by-tau^shift free on the grid.
        """
        key = (f, 0)
        if key not in self._row_cache:
            self._row_cache[key] = tuple(
                self.eval_at_index(f, j)
                for j in range(self.grid_lo, self.grid_hi + 1)
            )
        base = self._row_cache[key]
        return base[shift:] if shift else base

    def row_mod(self, f, shift=0):
        """Evaluation row reduced modulo the verification prime."""
        key = f
        if key not in self._row_mod_cache:
            p = self._ver_field.p
            out = []
            for e in self.row(f):
                num = int(e.numerator) % p
                den = int(e.denominator) % p
                if den == 0:
                    raise ZeroDivisionError("verification prime divides a denominator")
                out.append(self._ver_field(num * pow(den, -1, p)))
            self._row_mod_cache[key] = tuple(out)
        base = self._row_mod_cache[key]
        return base[shift:] if shift else base

    def ncols(self, reach):
        """Usable column count when rows are shifted by up to `reach`."""
        return self.grid_hi - self.grid_lo + 1 - reach

    def check_capacity(self, pole_degree, reach):
        if self.ncols(reach) <= pole_degree:
            raise GridError(
                "grid too small: %d usable columns for pole degree %d"
                % (self.ncols(reach), pole_degree)
            )

    def cols_for(self, pole_bound, reach):
        """Columns used by comparisons of spaces with the given pole bound
        under shifts up to `reach`.  More columns than zeros makes row
        spans faithful; a couple extra keep the check honest, and the
        early small-height columns are the cheap ones."""
        self.check_capacity(pole_bound, reach)
        return min(self.ncols(reach), pole_bound + 3)

    def space_pole_bound(self, space):
        if space.degree is not None:
            return self.m_partial(space.degree).degree
        return space.divisor.positive_part().degree

    def subspace_of(self, space, reach, pole_bound=None):
        """Canonical subspace of the evaluation rows on the shared columns."""
        if pole_bound is None:
            pole_bound = self.space_pole_bound(space)
        ncols = self.cols_for(pole_bound, reach)
        rows = [self.row(f)[:ncols] for f in space.basis]
        return Subspace.from_vectors(self.field, ncols, rows)

    # -- star multiplication ----------------------------------------------------

    def star_rows_iter(self, V, W, ncols):
        """Rows of {v * pullback(w, deg V)} on the first ncols columns."""
        a = V.degree
        if a is None or W.degree is None:
            raise ValueError("star multiplication needs graded spaces")
        for v in V.basis:
            rv = self.row(v)[:ncols]
            for w in W.basis:
                rw = self.row(w, a)[:ncols]
                yield tuple(x * y for x, y in zip(rv, rw))

    def star_product(self, V, W, reach=None):
        """Canonical subspace spanned by the star products of two graded
        spaces, with one symbolic membership cross-check per product."""
        a, b = V.degree, W.degree
        if reach is None:
            reach = a + b
        pole = self.m_partial(a + b).degree
        key = (V.divisor, a, W.divisor, b, reach)
        if key in self._product_cache:
            return self._product_cache[key]
        ncols = self.cols_for(pole, reach)
        acc = Echelon(self.field, ncols)
        for row in self.star_rows_iter(V, W, ncols):
            acc.insert(row)
        sub = acc.subspace()
        if V.basis and W.basis:
            self._symbolic_star_check(V, W, ncols)
        self._product_cache[key] = sub
        return sub

    def _symbolic_star_check(self, V, W, ncols):
        key = (V.divisor, V.degree, W.divisor, W.degree)
        if key in self._star_check_cache and self._star_check_cache[key] >= ncols:
            return
        v = V.basis[len(V.basis) // 2]
        w = W.basis[len(W.basis) // 2]
        prod = v * pullback(self.translation, w, V.degree)
        direct = self.row(prod)[:ncols]
        shifted = tuple(
            x * y for x, y in zip(self.row(v)[:ncols], self.row(w, V.degree)[:ncols])
        )
        if direct != shifted:
            raise FieldError("symbolic star product disagrees with grid shift")
        self._star_check_cache[key] = ncols

    def _cut_of(self, space):
        """Vanishing divisor of a graded space: m_n minus its divisor."""
        return self.m_partial(space.degree) - space.divisor

    def star_covers(self, factor_pairs, target, reach, symbolic_check=True):
        """Compare the joint span of the star products of the (V, W) pairs
        with the target space.  Returns (equal, contained, product_rank).

        Containment comes from exact divisor bookkeeping: when every pair's
        combined vanishing divisor dominates the target's, each product is
        a certified section of the target twist (the factors carry
        valuation certificates from their construction).  The spanning
        rank is then bounded from below by an echelon over a fixed
        verification prime -- a nonvanishing minor mod p is nonvanishing
        over the rationals -- which certifies equality exactly.  Whenever
        that route cannot conclude (bad prime, missing divisor
        containment, or a genuine proper inclusion), the full rational
        echelon decides.
        """
        tgt_pole = self.m_partial(target.degree).degree
        ncols = self.cols_for(tgt_pole, reach)
        tr = self.translation
        tgt_cut = self._cut_of(target)
        cuts_dominate = all(
            self._cut_of(V) + self._cut_of(W).tau(tr, -V.degree) >= tgt_cut
            for V, W in factor_pairs
        )
        if symbolic_check:
            for V, W in factor_pairs:
                if V.basis and W.basis:
                    self._symbolic_star_check(V, W, ncols)
        if self.field.char == 0 and cuts_dominate:
            verdict = self._star_covers_modular(factor_pairs, target, ncols)
            if verdict is not None:
                return verdict
        return self._star_covers_exact(factor_pairs, target, ncols, cuts_dominate)

    def _star_covers_modular(self, factor_pairs, target, ncols):
        try:
            tgt_acc = Echelon(self._ver_field, ncols)
            for f in target.basis:
                tgt_acc.insert(self.row_mod(f)[:ncols])
            if tgt_acc.rank != target.dim:
                return None  # the prime degenerates the target basis
            acc = Echelon(self._ver_field, ncols)
            for V, W in factor_pairs:
                a = V.degree
                for v in V.basis:
                    rv = self.row_mod(v)[:ncols]
                    for w in W.basis:
                        rw = self.row_mod(w, a)[:ncols]
                        acc.insert(tuple(x * y for x, y in zip(rv, rw)))
                        if acc.rank == target.dim:
                            break
                    if acc.rank == target.dim:
                        break
                if acc.rank == target.dim:
                    break
            if acc.rank == target.dim:
                # containment is the divisor certificate; rank mod p bounds
                # the rational rank from below, so the spans coincide
                return True, True, acc.rank
            return None
        except ZeroDivisionError:
            return None

    def _star_covers_exact(self, factor_pairs, target, ncols, cuts_dominate):
        tgt_acc = Echelon(self.field, ncols)
        for f in target.basis:
            tgt_acc.insert(self.row(f)[:ncols])
        want = tgt_acc.rank
        acc = Echelon(self.field, ncols)
        for V, W in factor_pairs:
            for row in self.star_rows_iter(V, W, ncols):
                acc.insert(row)
        if cuts_dominate:
            contained = True
        else:
            contained = all(tgt_acc.contains(r) for r in acc.rows.values())
        equal = contained and acc.rank == want
        return equal, contained, acc.rank

    def star_equals(self, V, W, target, reach=None):
        """Does span(V * W) equal the target space?"""
        if reach is None:
            reach = V.degree + W.degree
        equal, contained, rank = self.star_covers([(V, W)], target, reach)
        return equal, contained, rank

    # -- derived computations -----------------------------------------------------

    def sheaf_product_surjective(self, D1, D2):
        """Direct check: does H^0(D1) * H^0(D2) span H^0(D1 + D2)?"""
        f1 = self.rr_basis(D1)
        f2 = self.rr_basis(D2)
        target = self.rr_basis(D1 + D2)
        self.check_capacity((D1 + D2).positive_part().degree, 0)
        ncols = self.ncols(0)
        rows = []
        for u in f1.basis:
            ru = self.row(u)
            for v in f2.basis:
                rv = self.row(v)
                rows.append(tuple(x * y for x, y in zip(ru[:ncols], rv[:ncols])))
        prod = Subspace.from_vectors(self.field, ncols, rows)
        tgt = Subspace.from_vectors(
            self.field, ncols, [self.row(f)[:ncols] for f in target.basis]
        )
        if not tgt.contains(prod):
            raise FieldError("product left the target section space")
        return prod == tgt

    def surjectivity_check(self, D1, D2):
        """Degree criterion vs direct computation; both must agree.

        Surjective when both degrees are >= 2, except for two isomorphic
        degree-2 bundles.  Degree pairs below 2 carry no criterion and
        only the computed verdict is reported.
        """
        if D1.degree < 1 or D2.degree < 1:
            raise ValueError("surjectivity check needs degrees >= 1")
        computed = self.sheaf_product_surjective(D1, D2)
        if D1.degree >= 2 and D2.degree >= 2:
            exceptional = (
                D1.degree == 2 and D2.degree == 2 and D1.lin_equiv(D2)
            )
            criterion = not exceptional
            if criterion != computed:
                raise FieldError(
                    "criterion says %s but linear algebra says %s for %r, %r"
                    % (criterion, computed, D1, D2)
                )
        else:
            criterion = None
        return {"criterion": criterion, "computed": computed}

    def common_vanishing(self, space, n, candidates):
        """Base divisor of a subspace of B_n restricted to candidate points:
        sum over P of min_f (v_P(f) + m_n(P))."""
        m_n = self.m_partial(n)
        out = Divisor.zero(self.curve)
        for pt in candidates:
            vals = [
                valuation(f, pt, self.expansions) + m_n.mult(pt)
                for f in space.basis
            ]
            v = min(vals)
            if v < 0:
                raise ValueError("section with a pole beyond the twist at %r" % (pt,))
            if v > 0:
                out = out + self.point_divisor(pt, v)
        return out

    def residual(self, v, sub):
        """Reduce v by the RREF rows of sub; zero iff v lies in sub."""
        field = self.field
        v = list(v)
        col = 0
        for row in sub.basis:
            while row[col] == field.zero:
                col += 1
            if v[col] != field.zero:
                f = v[col]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def membership_conditions(self, unit_rows, target_sub):
        """Condition rows on coefficients xi forcing sum_i xi_i * unit_rows[i]
        into target_sub.  One condition per ambient coordinate of the
        reduced residuals; stack the outputs for several constraints and
        take a single nullspace."""
        residuals = [self.residual(r, target_sub) for r in unit_rows]
        ncols = target_sub.ambient
        return [
            tuple(residuals[i][j] for i in range(len(unit_rows)))
            for j in range(ncols)
        ]

    def cut_by_vanishing(self, space, d, reach, pole_bound=None):
        """Subspace of a graded space cut by the vanishing conditions of an
        effective divisor, imposed through local expansions.  This is the
        linear-algebra route to a twisted space, independent of rr_basis.
        """
        if not d.is_effective():
            raise ValueError("vanishing divisor must be effective")
        n = space.degree
        m_n = self.m_partial(n)
        rows = []
        for pt, c in d.items():
            base = m_n.mult(pt)  # allowed pole order of sections at pt
            exps = [
                local_expansion(f, pt, c - base, self.expansions)
                for f in space.basis
            ]
            for e in range(-base, -base + c):
                rows.append(tuple(s.coeff(e) for s in exps))
        sols = nullspace(self.field, rows, len(space.basis)) if rows else [
            tuple(
                self.field.one if i == j else self.field.zero
                for i in range(len(space.basis))
            )
            for j in range(len(space.basis))
        ]
        if pole_bound is None:
            pole_bound = self.space_pole_bound(space)
        ncols = self.cols_for(pole_bound, reach)
        vecs = []
        for sol in sols:
            acc = [self.field.zero] * ncols
            for cf, f in zip(sol, space.basis):
                if cf != self.field.zero:
                    acc = [a + cf * v for a, v in zip(acc, self.row(f)[:ncols])]
            vecs.append(tuple(acc))
        return Subspace.from_vectors(self.field, ncols, vecs)

    def cut_by_right_multiplication(self, source, partners, shift, target_sub):
        """{x in span(source) : x * pullback(w, shift) in target for all
        partner functions w}, returned as coefficient vectors over the
        source basis."""
        ncols = target_sub.ambient
        conds = []
        for w in partners:
            rw = self.row(w, shift)[:ncols]
            unit_rows = []
            for f in source.basis:
                rf = self.row(f)[:ncols]
                unit_rows.append(tuple(a * b for a, b in zip(rf, rw)))
            conds.extend(self.membership_conditions(unit_rows, target_sub))
        return nullspace(self.field, conds, len(source.basis))

    def saturate_window(self, family, horizon):
        """Degreewise saturation from a finite horizon.

        family maps degree n to a SectionSpace inside B_n (a right-ideal
        family under star, which is asserted on the window).  Returns
        (per-degree canonical subspaces, status): the saturation of degree
        n is {x in B_n : x * B_1 inside sat_{n+1}}, computed by descending
        induction with sat_horizon = family(horizon); degrees whose result
        changes when the horizon is lowered by one are flagged
        "unstabilized".
        """
        degs = sorted(family)
        if degs != list(range(degs[0], horizon + 1)):
            raise ValueError("family must cover a contiguous degree range up to the horizon")
        # one shared ambient keeps all degrees and both runs comparable
        reach = horizon + 1
        pole = self.m_partial(horizon).degree
        sats = {horizon: self.subspace_of(family[horizon], reach, pole)}
        for n in range(horizon - 1, degs[0] - 1, -1):
            sats[n] = self._saturate_step(family, n, sats[n + 1], reach, pole)
        shorter = {horizon - 1: self.subspace_of(family[horizon - 1], reach, pole)}
        for n in range(horizon - 2, degs[0] - 1, -1):
            shorter[n] = self._saturate_step(family, n, shorter[n + 1], reach, pole)
        status = {}
        for n in sats:
            if n <= horizon - 2:
                status[n] = "stable" if sats[n] == shorter[n] else "unstabilized"
            else:
                status[n] = "horizon"
        return {"sats": sats, "status": status}

    def _saturate_step(self, family, n, target, reach, pole):
        b_n = self.graded_piece(n)
        b_1 = self.graded_piece(1)
        sols = self.cut_by_right_multiplication(b_n, b_1.basis, n, target)
        ncols = target.ambient
        rows = []
        for sol in sols:
            acc = [self.field.zero] * ncols
            for c, f in zip(sol, b_n.basis):
                if c != self.field.zero:
                    r = self.row(f)[:ncols]
                    acc = [a + c * x for a, x in zip(acc, r)]
            rows.append(tuple(acc))
        out = Subspace.from_vectors(self.field, ncols, rows)
        fam_sub = self.subspace_of(family[n], reach, pole)
        if not out.contains(fam_sub):
            raise ValueError("family at degree %d escapes its own saturation" % n)
        return out

    def dual_of_point_ideal(self, q, r, window):
        """Degree-r sections multiplying the point ideal of q back into the
        ring: {f in L(m_r + tau^{-r} q) : f * I(q)_n inside B_{n+r}}.

        The containment of the full Riemann-Roch space is the claim being
        exercised; the return value reports the cut subspace, the ambient,
        and the quotient dimension over B_r.
        """
        if r < 1:
            raise ValueError("dual computation needs r >= 1")
        tr = self.translation
        amb_div = self.m_partial(r) + self.point_divisor(tr.tau(q, -r))
        ambient = self.rr_basis(amb_div, degree=r)
        reach = r + window
        pole = self.m_partial(r + window).degree + 1
        conds = []
        for n in range(1, window + 1):
            ideal_n = self.twisted_space(n, self.point_divisor(q))
            target = self.subspace_of(self.graded_piece(n + r), reach, pole)
            for w in ideal_n.basis:
                rw = self.row(w, r)[: target.ambient]
                unit_rows = []
                for f in ambient.basis:
                    rf = self.row(f)[: target.ambient]
                    unit_rows.append(tuple(a * b for a, b in zip(rf, rw)))
                conds.extend(self.membership_conditions(unit_rows, target))
        sols = nullspace(self.field, conds, len(ambient.basis))
        ncols = self.cols_for(pole, reach)
        rows = []
        for sol in sols:
            acc = [self.field.zero] * ncols
            for c, f in zip(sol, ambient.basis):
                if c != self.field.zero:
                    rf = self.row(f)[:ncols]
                    acc = [a + c * x for a, x in zip(acc, rf)]
            rows.append(tuple(acc))
        cut = Subspace.from_vectors(self.field, ncols, rows)
        amb_sub = self.subspace_of(ambient, reach, pole)
        b_r = self.subspace_of(self.graded_piece(r), reach, pole)
        return {
            "ambient_dim": ambient.dim,
            "cut": cut,
            "ambient": amb_sub,
            "equals_ambient": cut == amb_sub,
            "contains_ring_piece": cut.contains(b_r),
            "quotient_dim": cut.dim - b_r.dim,
        }
