"""Top-level verification checks for the blowup subrings cut out by
divisor layerings.

The graded ring itself is never materialized.  Every statement about a
degree-q piece is certified through its g-layer filtration: layer j of a
piece is a twisted section space, products restrict to star products of
bar spaces layer by layer, and a claimed equality X = Y (with X <= Y
automatic) follows once, for every layer j, the bar products spanned by X
cover the j-th bar layer of Y.  Dimensions come independently from the
closed form / recursion in `hilbert`, so each certificate carries both a
subspace ledger and a dimension ledger.
"""

from __future__ import annotations

from math import comb

from .divisors import Divisor
from .hilbert import (
    HilbertSeries,
    dim_B,
    dim_T,
    m_ideal_dim,
    quotient_profile,
)
from .layerings import (
    clipped_layering,
    layering_max,
    m_layering,
    m_left_layering,
    q_layering,
    q_left_layering,
    relative_m_layering,
    row_deleted_layering,
)


def check(check_id, claim, ok, **details):
    out = {"id": check_id, "claim": claim, "ok": bool(ok)}
    if details:
        out["details"] = details
    return out


class BlowupModel:
    """The subring attached to an effective divisor d with deg d < mu,
    modeled through its g-filtration: degree n carries the layering of the
    depth-n cumulative family, with bar piece H^0(M_n(-d_n))."""

    def __init__(self, ctx, d):
        if not d.is_effective() or d.degree >= ctx.mu:
            raise ValueError("blowup needs an effective divisor of degree < mu")
        self.ctx = ctx
        self.d = d
        self.tr = ctx.translation

    def dim(self, n):
        return m_ideal_dim(self.ctx.mu, n, self.d.degree, n) if n >= 0 else 0

    def bar_space(self, n):
        return self.ctx.twisted_space(n, self.d.partial_sum(self.tr, n))

    def bar_dim(self, n):
        if n < 0:
            return 0
        return dim_B(self.ctx.mu, n) - (n and n * self.d.degree)

    def g_divisibility_check(self, upto):
        ok = all(
            self.bar_dim(n) + self.dim(n - 1) == self.dim(n)
            for n in range(upto + 1)
        )
        return check(
            "blowup.g-divisible",
            "bar dimension + previous degree = degree (g-divisible filtration)",
            ok,
            dims=[self.dim(n) for n in range(upto + 1)],
        )


def bar_m_space(ctx, k, d, deg, shift=0):
    """Bar of the depth-k cumulative family of d at graded degree deg,
    translated by tau^shift: H^0(M_deg(-tau^shift(d_k)))."""
    tr = ctx.translation
    cut = d.partial_sum(tr, max(k, 0)).tau(tr, shift)
    return ctx.twisted_space(deg, cut)


def mult_equality_check(ctx, d, k, l, m, n):
    """Certify M(k,d)_m * M(l, tau^{m-k} d)_n = M(k+l, d)_{m+n}.

    For each g-layer j of the target, the products of the layer pieces
    (a + b = j) of the two factors must span the layer's bar space
    H^0(M_{m+n-j}(-d_{k+l-j})).  Covering every layer forces the dimension
    of the product up to the closed-form dimension of the target, which
    turns the automatic inclusion into an equality.
    """
    mu = ctx.mu
    deg_d = d.degree
    if not (0 <= k <= m and 0 <= l <= n):
        raise ValueError("need 0 <= k <= m and 0 <= l <= n")
    if mu - deg_d >= 2:
        claimed = True
    elif mu - deg_d == 1:
        claimed = (m >= max(2, k) and n >= max(2, l)) or m == n == 0 or (
            (k, m) == (0, 0) and n >= max(2, l)
        ) or ((l, n) == (0, 0) and m >= max(2, k))
    else:
        claimed = False
    base_id = "blowup.mult-eq.k%d.l%d.m%d.n%d" % (k, l, m, n)
    claim = (
        "product of graded pieces (%d,%d) x (%d,%d) fills the (%d,%d) piece"
        % (k, m, l, n, k + l, m + n)
    )
    if not claimed:
        return check(
            base_id, claim, False, status="not-claimed",
            note="parameters outside the asserted range; nothing to certify",
        )
    tr = ctx.translation
    layers = []
    certified = True
    for j in range(m + n + 1):
        q = m + n - j
        if q == 0:
            layers.append({"layer": j, "target_dim": 1, "trivial": True})
            continue
        target = bar_m_space(ctx, k + l - j, d, q)
        pairs = []
        for a in range(max(0, j - n), min(j, m) + 1):
            b = j - a
            left = bar_m_space(ctx, k - a, d, m - a)
            right = bar_m_space(ctx, l - b, d, n - b, shift=m - k)
            pairs.append((left, right))
        equal, contained, rank = ctx.star_covers(pairs, target, reach=q)
        layers.append(
            {
                "layer": j,
                "target_dim": target.dim,
                "pairs": len(pairs),
                "covered": equal,
                "contained": contained,
                "product_rank": rank,
            }
        )
        certified = certified and equal
    # dimension ledger: the layer dimensions must add up to the closed form
    total = sum(e["target_dim"] for e in layers)
    closed = m_ideal_dim(mu, k + l, deg_d, m + n) if k + l <= m + n else None
    ledger_ok = closed is None or total == closed
    return check(
        base_id,
        claim,
        certified and ledger_ok,
        status="certified" if certified and ledger_ok else "failed",
        params={"k": k, "l": l, "m": m, "n": n, "deg_d": deg_d, "mu": mu},
        layers=layers,
        dim_total=total,
        dim_closed_form=closed,
    )


def replay_mult_certificate(report):
    """Re-verify a serialized product certificate without recomputing any
    linear algebra: every g-layer must be covered, each layer's target
    dimension must equal the bar closed form, and the layers must sum to
    the closed-form dimension of the target piece."""
    det = report.get("details", {})
    prm = det.get("params")
    if prm is None or "layers" not in det:
        return check("blowup.mult-eq.replay", "certificate replay", False,
                     reason="report carries no certificate")
    mu, deg_d = prm["mu"], prm["deg_d"]
    k, l, m, n = prm["k"], prm["l"], prm["m"], prm["n"]
    ok = True
    total = 0
    for entry in det["layers"]:
        j = entry["layer"]
        q = m + n - j
        depth = max(k + l - j, 0)
        want = 1 if q == 0 else dim_B(mu, q) - deg_d * depth
        if entry["target_dim"] != want:
            ok = False
        if not (entry.get("trivial") or entry.get("covered")):
            ok = False
        total += entry["target_dim"]
    if det.get("dim_closed_form") is not None:
        ok = ok and total == det["dim_closed_form"]
        ok = ok and total == m_ideal_dim(mu, k + l, deg_d, m + n)
    return check(
        "blowup.mult-eq.replay",
        "serialized certificate is arithmetically coherent",
        ok,
        replayed=report["id"],
    )


def bar_equality_check(ctx, d, k, l, m, n, assert_range=True):
    """Single bar-level product equality (one layer, no g-descент)."""
    mu = ctx.mu
    in_range = (
        (mu - d.degree >= 2 and m >= k and n >= l)
        or (mu - d.degree == 1 and m >= max(2, k) and n >= max(2, l))
    )
    target = bar_m_space(ctx, k + l, d, m + n)
    left = bar_m_space(ctx, k, d, m)
    right = bar_m_space(ctx, l, d, n, shift=m - k)
    equal, contained, rank = ctx.star_covers([(left, right)], target, reach=m + n)
    ok = equal if in_range or not assert_range else True
    return check(
        "blowup.bar-eq.k%d.l%d.m%d.n%d" % (k, l, m, n),
        "bar product equality at one g-layer",
        ok if in_range else contained,
        equal=equal,
        contained=contained,
        in_claimed_range=in_range,
        dims=(left.dim, right.dim, target.dim, rank),
    )


def corner_commutation_check(ctx, d, k):
    """Degree-1 pieces commute past the depth-k family at bar level:
    T_1 M(k,d)_k and M(k, tau^{-1} d)_k T_1 share the bar space
    H^0(M_{k+1}(-(tau^{-1}d)_{k+1}))."""
    tr = ctx.translation
    d1 = d.tau(tr, -1)
    target = bar_m_space(ctx, k, d1, k + 1)
    lhs_pairs = [(ctx.graded_piece(1), bar_m_space(ctx, k, d, k))]
    rhs_pairs = [(bar_m_space(ctx, k, d1, k), ctx.graded_piece(1))]
    eq1, _, _ = ctx.star_covers(lhs_pairs, target, reach=k + 1)
    eq2, _, _ = ctx.star_covers(rhs_pairs, target, reach=k + 1)
    return check(
        "blowup.corner-commute.k%d" % k,
        "degree-1 times depth-k piece equals depth-k times degree-1 at bar level",
        eq1 and eq2,
        left=eq1,
        right=eq2,
    )


def generation_check(ctx, d, upto):
    """Degree-1 generation for small divisors; the shifted statement in
    the top-degree case."""
    mu = ctx.mu
    deg_d = d.degree
    results = []
    if mu - deg_d >= 2:
        for n in range(1, upto):
            results.append(mult_equality_check(ctx, d, 1, n, 1, n))
        ok = all(r["ok"] for r in results)
        return check(
            "blowup.generation.deg1",
            "generated in degree 1 (product of degree 1 with degree n fills n+1)",
            ok,
            steps=[r["id"] for r in results],
            failures=[r["id"] for r in results if not r["ok"]],
        )
    # mu - deg_d == 1: pieces of degree >= 2 multiply onto each other
    for m in range(2, upto - 1):
        for n in range(2, upto - m + 1):
            results.append(mult_equality_check(ctx, d, m, n, m, n))
    ok = all(r["ok"] for r in results)
    # degrees <= 2 generate degree 3 at bar level: layer-by-layer cover by
    # the union of the (1,2) and (2,1) products
    deg3 = _deg3_generation_shadow(ctx, d)
    return check(
        "blowup.generation.deg2",
        "degree >= 2 pieces multiply onto each other; degrees <= 2 cover degree 3",
        ok and deg3["ok"],
        steps=[r["id"] for r in results],
        failures=[r["id"] for r in results if not r["ok"]],
        degree3=deg3,
    )


def _deg3_generation_shadow(ctx, d):
    certified = True
    layer_data = []
    for j in range(0, 4):
        q = 3 - j
        if q == 0:
            continue
        target = bar_m_space(ctx, 3 - j, d, q)
        pairs = []
        for (k, l, m, n) in ((1, 2, 1, 2), (2, 1, 2, 1)):
            for a in range(max(0, j - n), min(j, m) + 1):
                b = j - a
                pairs.append(
                    (
                        bar_m_space(ctx, k - a, d, m - a),
                        bar_m_space(ctx, l - b, d, n - b, shift=m - k),
                    )
                )
        equal, contained, rank = ctx.star_covers(pairs, target, reach=q)
        layer_data.append({"layer": j, "covered": equal})
        certified = certified and equal
    return check(
        "blowup.generation.deg3-shadow",
        "products of degrees 1,2 cover every g-layer of degree 3",
        certified,
        layers=layer_data,
    )


def iterate_check(ctx, c, e, upto=6):
    """Blowing up along c + e agrees with blowing up c, then e."""
    tr = ctx.translation
    mu = ctx.mu
    total = c + e
    if not (c.is_effective() and e.is_effective() and total.degree < mu):
        raise ValueError("iterate check needs effective parts, total degree < mu")
    if e.is_zero():
        return check("blowup.iterate.trivial", "empty second stage", True)
    if total.degree <= mu - 2:
        # both towers are generated in degree 1; the one-shot degree-1 bar
        # is a Riemann-Roch space, the towered one cuts the inner blowup's
        # degree-1 bar by vanishing conditions along e
        one_shot = ctx.twisted_space(1, total)
        pole = ctx.m_partial(1).degree
        sub1 = ctx.subspace_of(one_shot, 1, pole)
        inner = ctx.twisted_space(1, c)
        sub2 = ctx.cut_by_vanishing(inner, e, reach=1, pole_bound=pole)
        gen = generation_check(ctx, total, upto)
        return check(
            "blowup.iterate.deg1",
            "one-shot and iterated blowups share the degree-1 piece and are degree-1 generated",
            sub1 == sub2 and gen["ok"],
            degree1_equal=(sub1 == sub2),
            generation=gen["id"],
            generation_ok=gen["ok"],
        )
    # total degree mu - 1: peel one point off e and compare dimension profiles
    last = None
    for pt, cnt in e.items():
        last = pt
    e_rest = e - Divisor.of_point(ctx.curve, last)
    reports = []
    if not e_rest.is_zero():
        reports.append(iterate_check(ctx, c, e_rest, upto))
    cc = c + e_rest
    # profiles of the composite point-square family against the inner model
    ok = True
    dims = []
    for n in range(2, upto + 1):
        z = relative_m_layering(tr, cc, 2, Divisor.of_point(ctx.curve, last), n)
        prof = quotient_profile(ctx, z, n)
        entry = prof[n]
        want = cc.degree * comb(n + 1, 2) + 3
        dims.append((n, entry.lo, entry.hi, want))
        ok = ok and entry.exact and entry.value() == want
    ok = ok and all(r["ok"] for r in reports)
    return check(
        "blowup.iterate.top-degree",
        "degree-n dimensions of the relative point-square family match the "
        "inner blowup minus the expected three",
        ok,
        profile=dims,
        inner=[r["id"] for r in reports],
    )


def exceptional_filtration(ctx, d, pt, upto=8):
    """One-point blowup inside a larger blowup: the quotient filters into
    shifted copies of a single line module."""
    tr = ctx.translation
    mu = ctx.mu
    gamma = d.degree
    if gamma >= mu - 1:
        return check(
            "blowup.line.special",
            "top-degree case is reported, not verified",
            True,
            status="special-case-not-verified",
        )
    p_div = Divisor.of_point(ctx.curve, pt)
    inner_dim = lambda n: dim_T(mu, n) - gamma * comb(n + 1, 2)
    outer_dim = lambda n: dim_T(mu, n) - (gamma + 1) * comb(n + 1, 2)
    results = []

    # quotient dimensions match the stack of shifted line series
    line = HilbertSeries((1,), 2)
    stack_ok = all(
        inner_dim(n) - outer_dim(n)
        == sum(line.shift(j).coeff(n) for j in range(1, n + 1))
        for n in range(upto + 1)
    )
    results.append(
        check(
            "blowup.line.quotient-series",
            "quotient dimensions equal the sum of shifted line series",
            stack_ok,
        )
    )

    # ascending chain: degree-n dims of the depth-(n-j) shifted families
    chain_ok = True
    for j in range(0, upto):
        for n in range(j, upto + 1):
            kk = n - j
            z = relative_m_layering(tr, d, kk, p_div.tau(tr, -j), n)
            if z.is_empty():
                got = dim_T(mu, n)
            else:
                prof = quotient_profile(ctx, z, n)
                if not prof[n].exact:
                    chain_ok = False
                    continue
                got = dim_T(mu, n) - prof[n].value()
            want = inner_dim(n) - comb(kk + 1, 2) if kk >= 0 else inner_dim(n)
            chain_ok = chain_ok and got == want
    results.append(
        check(
            "blowup.line.chain-dims",
            "chain quotients have the dimensions of shifted line modules",
            chain_ok,
        )
    )

    # presentation family: one degree above the diagonal, dims pinch
    pres_ok = True
    pres_dims = []
    for n in range(0, upto + 1):
        z = relative_m_layering(tr, d, n + 1, p_div.tau(tr, 1), n)
        prof = quotient_profile(ctx, z, n)
        entry = prof[n]
        ideal_dim = dim_T(mu, n) - entry.hi if entry.exact else None
        pres_dims.append((n, entry.status))
        pres_ok = pres_ok and entry.exact and (
            outer_dim(n) - ideal_dim == n + 1
        )
    results.append(
        check(
            "blowup.line.presentation",
            "presentation ideal leaves exactly a line module: codim n+1 per degree",
            pres_ok,
            dims=pres_dims,
        )
    )

    # divisor of the line module by base locus + shift rule
    cands = [tr.tau(pt, s) for s in range(-upto - 1, 3)]
    div_ok = True
    for n in range(2, min(5, upto) + 1):
        inner_bar = ctx.twisted_space(
            n, d.partial_sum(tr, n) + p_div.partial_sum(tr, n)
        )
        zero_row = row_deleted_layering(tr, 0, n, pt)
        p0_bar = ctx.twisted_space(
            n, d.partial_sum(tr, n) + zero_row.layer(0)
        )
        cv_inner = ctx.common_vanishing(inner_bar, n, cands)
        cv_p0 = ctx.common_vanishing(p0_bar, n, cands)
        if cv_inner - cv_p0 != p_div:
            div_ok = False
    line_divisor = p_div.tau(tr, 1)
    results.append(
        check(
            "blowup.line.divisor",
            "base-locus difference is the blown-up point; the unit shift "
            "moves it one translate forward",
            div_ok,
            line_divisor=repr(line_divisor),
        )
    )

    # cyclicity flag: the special class condition is detected, not verified
    special = gamma == mu - 2 and (
        ctx.m_partial(1) - d - p_div
    ).lin_equiv(line_divisor)
    results.append(
        check(
            "blowup.line.cyclic-flag",
            "line module cyclic unless the residual class matches the shifted point",
            True,
            cyclic=not special,
        )
    )

    ok = all(r["ok"] for r in results)
    return check(
        "blowup.line",
        "exceptional line module filtration",
        ok,
        parts=results,
        series="1/(1-t)^2",
    )


def build_module_check(ctx, d, y, upto=6):
    """Clipped cumulative layerings define a g-divisible module over the
    blowup: allowability, the g-shift, containment, the product-closure
    certificate, and the stable bar dimensions."""
    tr = ctx.translation
    if not ((Divisor.zero(ctx.curve) <= y)):
        raise ValueError("y must be effective")
    k_min = None
    for kk in range(0, upto + 1):
        if y <= d.partial_sum(tr, kk):
            k_min = kk
            break
    if k_min is None:
        raise ValueError("y is not dominated by any partial sum within range")
    zs = {m: clipped_layering(tr, d, y, m) for m in range(1, upto + 1)}
    shift_ok = all(
        zs[m + 1].layer(i + 1) == zs[m].layer(i).tau(tr, -1)
        for m in range(1, upto)
        for i in range(m)
    )
    contain_ok = all(
        zs[m].layer(i) <= d.partial_sum(tr, m - i).tau(tr, -i)
        for m in range(1, upto + 1)
        for i in range(m)
    )
    closure_ok = True
    for m in range(1, upto):
        for n in range(1, upto - m + 1):
            znm = zs[n + m]
            for i in range(n + m):
                for j in range(0, i + 1):
                    r = zs[m].layer(i - j).tau(tr, -j) + d.partial_sum(
                        tr, n - j
                    ).tau(tr, -m - j)
                    if not (r >= znm.layer(i)):
                        closure_ok = False
    bar_dims = []
    bar_ok = True
    for n in range(max(k_min, 1), upto + 1):
        want = dim_B(ctx.mu, n) - (d.partial_sum(tr, n) - y).degree
        bar_dims.append((n, want))
        if n <= 4:
            got = ctx.rr_basis(
                ctx.m_partial(n) - d.partial_sum(tr, n) + y
            ).dim
            bar_ok = bar_ok and got == want
    recovers = y.is_zero() and all(
        zs[m] == m_layering(tr, m, d) for m in range(1, upto + 1)
    )
    ok = shift_ok and contain_ok and closure_ok and bar_ok and (
        recovers or not y.is_zero()
    )
    return check(
        "blowup.build-module",
        "clipped layerings: g-shift, containment, closure certificate, bar dims",
        ok,
        g_shift=shift_ok,
        containment=contain_ok,
        closure=closure_ok,
        bar_dims=bar_dims,
        recovers_blowup=recovers if y.is_zero() else None,
        stable_from=k_min,
    )


def q_family_checks(ctx, pt, upto=8, shelf_level=1):
    """Tapered-family facts: factor series, the lattice identity, and the
    shelf intersection profile."""
    tr = ctx.translation
    mu = ctx.mu
    results = []
    # (a) consecutive taper steps differ by a tail of ones
    fac_ok = True
    for i in (1, 2, 3):
        for dm in (1, 2):
            if dm >= mu:
                continue
            for r in range(1, dm + 1):
                za = q_layering(tr, i, r - 1, dm, pt)
                zb = q_layering(tr, i, r, dm, pt)
                pa = quotient_profile(ctx, za, upto)
                pb = quotient_profile(ctx, zb, upto)
                for n in range(i + 1, upto + 1):
                    if not (pa[n].exact and pb[n].exact):
                        fac_ok = False
                    elif pb[n].value() - pa[n].value() != 1:
                        fac_ok = False
    results.append(
        check(
            "blowup.qfamily.factor",
            "lowering the taper by one frees a shifted point module (tail of ones)",
            fac_ok,
        )
    )
    # (b) the lattice identity between taper levels
    lat_ok = True
    for i in (2, 3):
        for e in (1, 2):
            if e >= mu:
                continue
            lhs = q_layering(tr, i, 0, e, pt)
            rhs = layering_max(
                tr,
                q_layering(tr, i - 1, e, e, pt),
                q_layering(tr, i - 1, e, e, tr.tau(pt, -1)),
            )
            lat_ok = lat_ok and lhs == rhs
    results.append(
        check(
            "blowup.qfamily.lattice",
            "zero-taper family is the intersection of the two shifted full ones",
            lat_ok,
        )
    )
    # (c) intersection of the whole family reproduces the shelf profile
    shelf_ok = True
    d = Divisor.of_point(ctx.curve, pt)
    for n in range(shelf_level + 1, upto + 1):
        acc = None
        for j in range(shelf_level, n):
            for i in range(1, n - j + 1):
                z = q_layering(tr, i, 1, 1, tr.tau(pt, -j))
                acc = z if acc is None else layering_max(tr, acc, z)
        want_layering = m_layering(tr, n - shelf_level, d.tau(tr, -shelf_level))
        if acc != want_layering:
            shelf_ok = False
            continue
        prof = quotient_profile(ctx, acc, n)
        if not prof[n].exact:
            shelf_ok = False
            continue
        got = dim_T(mu, n) - prof[n].value()
        want = dim_T(mu, n) - d.degree * comb(n - shelf_level + 1, 2)
        shelf_ok = shelf_ok and got == want
    results.append(
        check(
            "blowup.qfamily.shelf",
            "family intersection equals the shelf layering with the closed-form profile",
            shelf_ok,
        )
    )
    ok = all(r["ok"] for r in results)
    return check("blowup.qfamily", "tapered family checks", ok, parts=results)


def left_right_checks(ctx, d, k, n):
    """Right and left families share their degree-n bar sections as literal
    subspaces, and their dimension profiles agree where exact."""
    tr = ctx.translation
    right = m_layering(tr, k, d)
    left = m_left_layering(tr, k, d.tau(tr, n - k))
    results = {}
    if k == 0:
        bar_equal = True
        cut_right = cut_left = Divisor.zero(ctx.curve)
    else:
        cut_right = right.layer(0)
        cut_left = left.layer(0).tau(tr, -n + 1)
        sp_right = ctx.twisted_space(n, cut_right)
        sp_left = ctx.twisted_space(n, cut_left)
        reach = n
        bar_equal = (
            cut_right == cut_left
            and ctx.subspace_of(sp_right, reach) == ctx.subspace_of(sp_left, reach)
        )
    results["bar_sections_equal"] = bar_equal
    pr = quotient_profile(ctx, right, n)
    pl = quotient_profile(ctx, left, n)
    prof_ok = True
    for nn in range(n + 1):
        if pr[nn].exact and pl[nn].exact:
            prof_ok = prof_ok and pr[nn].value() == pl[nn].value()
        else:
            prof_ok = prof_ok and (
                max(pr[nn].lo, pl[nn].lo) <= min(pr[nn].hi, pl[nn].hi)
            )
    results["profiles_agree"] = prof_ok
    return check(
        "blowup.leftright.k%d.n%d" % (k, n),
        "transposed families share bar sections and dimension profiles",
        bar_equal and prof_ok,
        **results,
    )


def q_left_right_check(ctx, pt, i, r, dm, n):
    tr = ctx.translation
    right = q_layering(tr, i, r, dm, pt)
    left = q_left_layering(tr, i, r, dm, tr.tau(pt, n - i))
    cut_right = right.layer(0)
    cut_left = left.layer(0).tau(tr, -n + 1)
    ok = cut_right == cut_left
    if ok and cut_right.degree < ctx.mu * n:
        sp_r = ctx.twisted_space(n, cut_right)
        sp_l = ctx.twisted_space(n, cut_left)
        ok = ctx.subspace_of(sp_r, n) == ctx.subspace_of(sp_l, n)
    return check(
        "blowup.leftright.q.i%d.r%d.d%d.n%d" % (i, r, dm, n),
        "tapered right/left families share their degree-n bar sections",
        ok,
    )


def point_space_shadow(ctx, d, q_pt, k):
    """Necessary bar-level conditions behind the no-sporadic-ideal
    criterion: the depth-(k+1) family at degree k multiplies into degree
    k+1 onto the full bar target.  The verdict is consistency, never a
    proof."""
    tr = ctx.translation
    q_div = Divisor.of_point(ctx.curve, q_pt)
    left = ctx.twisted_space(
        k, d.partial_sum(tr, k) + q_div.partial_sum(tr, k + 1)
    )
    right = ctx.twisted_space(1, d)
    target = ctx.twisted_space(
        k + 1, d.partial_sum(tr, k + 1) + q_div.partial_sum(tr, k + 1)
    )
    equal, contained, rank = ctx.star_covers([(left, right)], target, reach=k + 1)
    verdict = "consistent" if equal else "violated"
    return check(
        "blowup.c1c2.k%d" % k,
        "bar shadow of the one-lower-degree generation condition",
        contained,
        verdict=verdict,
        equal=equal,
        dims=(left.dim, right.dim, target.dim, rank),
    )


def point_space_identity(ctx, q_pt):
    """W(q) * B_1 = B_1 * W(tau q) = sections of degree 2 vanishing at q."""
    tr = ctx.translation
    q_div = Divisor.of_point(ctx.curve, q_pt)
    w_q = ctx.twisted_space(1, q_div)
    w_tq = ctx.twisted_space(1, q_div.tau(tr, 1))
    b1 = ctx.graded_piece(1)
    target = ctx.twisted_space(2, q_div)
    eq1, _, _ = ctx.star_covers([(w_q, b1)], target, reach=2)
    eq2, _, _ = ctx.star_covers([(b1, w_tq)], target, reach=2)
    return check(
        "blowup.c1c2.point-space",
        "point spaces slide past degree-1: both products cut the same "
        "vanishing subspace of degree 2",
        eq1 and eq2,
        left=eq1,
        right=eq2,
    )


def top_degree_series_chain(mu):
    """The series bookkeeping for a blowup one below the top degree:
    quotient by g^2, the cyclic sub, the line quotient, the point sub."""
    h_b = HilbertSeries((1, -1, 1), 2)
    h_r = HilbertSeries((1, -1, 1), 3)
    one_minus_t2 = HilbertSeries((1, 0, -1), 0)
    h_m = h_r * one_minus_t2
    ok = h_m == HilbertSeries((1, 0, 0, 1), 2)
    h_x = h_b.shift(2) - HilbertSeries((0, 0, 1), 0)
    ok = ok and h_x == HilbertSeries((0, 0, 0, 1), 2)
    h_l = h_m - h_x
    ok = ok and h_l == HilbertSeries((1,), 2)
    h_lp = h_b.shift(1) - h_x
    ok = ok and h_lp == HilbertSeries((0, 1), 1)
    return check(
        "blowup.ex5.series-chain",
        "g^2 quotient series chain: (1+t^3)/(1-t)^2, t^3/(1-t)^2, "
        "1/(1-t)^2, t/(1-t)",
        ok,
        mu=mu,
    )
