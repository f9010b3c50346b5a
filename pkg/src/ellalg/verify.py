"""The acceptance suite: every headline identity of the calculus, run at
desk scale with machine-readable reports.

Each criterion function returns a list of check dicts (id, claim, ok,
details).  `run_all` assembles the full deterministic report for a
fixture pair (the two ample degrees over one base field); mirrors over a
prime field run the same checks with reduced random volume to stay under
their time budget.
"""

from __future__ import annotations

import random

from . import blowup as bl
from .cpmodel import off_diagonal_ideal, point_row_ideal, realize
from .divisors import Divisor
from .hilbert import (
    HilbertSeries,
    blowup_series_report,
    dim_T,
    m_ideal_dim,
    quotient_profile,
)
from .layerings import (
    absorb_divisor,
    absorb_divisor_stepwise,
    absorb_iterated,
    absorb_iterated_stepwise,
    absorb_point,
    empty_layering,
    layering_max,
    layering_min,
    m_layering,
)
from .blowup import check

SEED = 20260809


def _pdiv(fx, name="p", shift=0, mult=1):
    pt = fx.translation.tau(fx.point(name), shift)
    return Divisor.of_point(fx.curve, pt, mult)


def _odiv(fx, shift=0, mult=1):
    pt = fx.translation.tau(fx.curve.zero_point, shift)
    return Divisor.of_point(fx.curve, pt, mult)


def _rand_layering(fx, rng, names=("p", "q"), max_layers=4, max_mult=3, spread=2):
    tr = fx.translation
    k = rng.randint(0, max_layers)
    if k == 0:
        return empty_layering(fx.curve)
    top = Divisor.zero(fx.curve)
    for name in names:
        for shift in range(-spread, spread + 1):
            if rng.random() < 0.4:
                top = top + _pdiv(fx, name, shift, rng.randint(1, max_mult))
    if top.is_zero():
        top = _pdiv(fx, names[0])
    layers = [top]
    for _ in range(k - 1):
        prev = layers[-1].tau(tr, -1)
        nxt = Divisor.zero(fx.curve)
        for pt, c in prev.items():
            keep = rng.randint(0, c)
            if keep:
                nxt = nxt + Divisor.of_point(fx.curve, pt, keep)
        layers.append(nxt)
    from .layerings import make_layering, RIGHT

    return make_layering(tr, RIGHT, layers)


def criterion_riemann_roch(fx, n_random=50):
    """A1: random Riemann-Roch spaces have dimension = degree, with every
    basis element certified by valuations (rr_basis certifies on build)."""
    rng = random.Random(SEED)
    tested = 0
    tries = 0
    while tested < n_random and tries < 50 * n_random:
        tries += 1
        d = Divisor.zero(fx.curve)
        for _ in range(rng.randint(1, 4)):
            kind = rng.random()
            if kind < 0.55:
                d = d + _odiv(fx, rng.randint(-6, 6), rng.randint(-2, 3))
            elif kind < 0.85:
                d = d + _pdiv(fx, "p", rng.randint(-2, 2), rng.randint(-1, 2))
            else:
                d = d + _pdiv(fx, "q", rng.randint(-1, 1), rng.randint(-1, 2))
        if not 1 <= d.degree <= 8:
            continue
        tested += 1
        sp = fx.ctx.rr_basis(d)
        if sp.dim != d.degree:
            return [check("A1.riemann-roch", "dim L(D) = deg D with valuation certificates", False, failed_at=repr(d))]
    return [
        check(
            "A1.riemann-roch",
            "dim L(D) = deg D for random divisors of degree 1..8, "
            "every basis element valuation-certified",
            tested == n_random,
            tested=tested,
        )
    ]


def criterion_surjectivity_table(fx):
    """A2: the degree criterion for multiplication of section spaces
    agrees with exact linear algebra on every sampled cell, including a
    failing isomorphic degree-2 pair."""
    ctx = fx.ctx
    samples = {
        2: [_odiv(fx, 0, 2), _odiv(fx, -1, 1) + _odiv(fx, -2, 1), _pdiv(fx) + _odiv(fx, 0, 1)],
        3: [_odiv(fx, 0, 3), _odiv(fx, 0, 1) + _odiv(fx, -1, 2)],
        4: [_odiv(fx, 0, 4), _odiv(fx, 0, 2) + _pdiv(fx, "p", 0, 2)],
    }
    cells = 0
    for d1 in (2, 3, 4):
        for d2 in (2, 3, 4):
            for D1 in samples[d1]:
                for D2 in samples[d2]:
                    res = ctx.surjectivity_check(D1, D2)
                    cells += 1
                    if res["criterion"] != res["computed"]:
                        return [check("A2.surjectivity", "criterion vs linear algebra", False)]
    iso_fail = ctx.surjectivity_check(_odiv(fx, 0, 2), _odiv(fx, 0, 2))
    P = fx.translation.alpha_power(6)
    pair = Divisor.of_point(fx.curve, P) + Divisor.of_point(fx.curve, fx.curve.neg(P))
    iso_fail2 = ctx.surjectivity_check(_odiv(fx, 0, 2), pair)
    ok = iso_fail["computed"] is False and iso_fail2["computed"] is False
    return [
        check(
            "A2.surjectivity",
            "surjectivity criterion = linear-algebra verdict over the degree "
            "{2,3,4} x {2,3,4} table; isomorphic degree-2 pairs fail",
            ok,
            cells=cells,
        )
    ]


def criterion_closed_form(fx3, fx9, upto=10):
    """A3: closed-form dimensions equal the recursion for every family
    depth k <= n <= upto and several divisors, both ample degrees."""
    for fx in (fx3, fx9):
        mu = fx.mu
        for d in (_pdiv(fx), _pdiv(fx, "p", 0, 2), _pdiv(fx) + _pdiv(fx, "q")):
            for k in range(0, upto + 1):
                z = m_layering(fx.translation, k, d)
                prof = quotient_profile(fx.ctx, z, upto)
                for n in range(k, upto + 1):
                    want = m_ideal_dim(mu, k, d.degree, n)
                    if not prof[n].exact or dim_T(mu, n) - prof[n].value() != want:
                        return [check("A3.closed-form", "closed form vs recursion", False,
                                      at=(mu, repr(d), k, n))]
    return [
        check(
            "A3.closed-form",
            "closed-form dimensions match the g-layer recursion for "
            "k <= n <= %d, three divisor shapes, both ample degrees" % upto,
            True,
        )
    ]


def criterion_mult_certificates(fx, kl_max=2, mn_max=4):
    """A4: certified multiplication equalities across the stated ranges."""
    out = []
    d = _pdiv(fx)
    ok_all = True
    for k in range(0, kl_max + 1):
        for l in range(0, kl_max + 1):
            for m in range(k, mn_max + 1):
                for n in range(l, mn_max + 1):
                    rep = bl.mult_equality_check(fx.ctx, d, k, l, m, n)
                    ok_all = ok_all and rep["ok"]
    out.append(
        check(
            "A4.mult-eq.generic",
            "product certificates for the one-point blowup over the full range",
            ok_all,
        )
    )
    d2 = _pdiv(fx, "p", 0, 2)
    ok_top = True
    for k in range(0, kl_max + 1):
        for l in range(0, kl_max + 1):
            for m in range(max(2, k), mn_max + 1):
                for n in range(max(2, l), mn_max + 1):
                    rep = bl.mult_equality_check(fx.ctx, d2, k, l, m, n)
                    ok_top = ok_top and rep["ok"]
    out.append(
        check(
            "A4.mult-eq.top-degree",
            "product certificates in the top-degree case for m, n >= 2",
            ok_top,
        )
    )
    return out


def criterion_absorption(fx, n_random=200, window=12, trunc=6):
    """A5: the closed absorption formulas equal stepwise iteration, and the
    truncated matrix oracle reproduces absorption, including the diagonal
    row-ideal product rule and the off-diagonal shift rule."""
    rng = random.Random(SEED + 1)
    tr = fx.translation
    ok_closed = True
    for _ in range(n_random):
        z = _rand_layering(fx, rng)
        d = Divisor.zero(fx.curve)
        for name in ("p", "q"):
            for shift in range(-1, 2):
                if rng.random() < 0.4:
                    d = d + _pdiv(fx, name, shift, rng.randint(1, 2))
        if d.is_zero():
            d = _pdiv(fx, "q")
        if absorb_divisor(tr, d, z) != absorb_divisor_stepwise(tr, d, z):
            ok_closed = False
        if rng.random() < 0.3:
            n = rng.randint(1, 4)
            if absorb_iterated(tr, d, n, z) != absorb_iterated_stepwise(tr, d, n, z):
                ok_closed = False
    out = [
        check(
            "A5.absorption-closed-form",
            "closed absorption formula = stepwise absorption on random layerings",
            ok_closed,
            samples=n_random,
        )
    ]
    ok_cp = True
    rep_pt = fx.point("p")
    for _ in range(max(40, n_random // 2)):
        z = _rand_layering(fx, rng, names=("p",), spread=2)
        ideal, _ = realize(tr, z, window, trunc, rep=rep_pt)
        i = rng.randint(-3, 3)
        lhs = ideal.mul(point_row_ideal(window, trunc, i))
        shifted = absorb_point(tr, tr.tau(rep_pt, i), z)
        rhs, _ = realize(tr, shifted, window, trunc, rep=rep_pt)
        if lhs != rhs:
            ok_cp = False
        # off-diagonal shift rule: J cap (off-diagonal) = shifted layering * N
        from .layerings import make_layering, RIGHT

        shifted_layers = [dd.tau(tr, 1) for dd in z.layers[1:]]
        lz = make_layering(tr, RIGHT, shifted_layers)
        ish, _ = realize(tr, lz, window, trunc, rep=rep_pt)
        if ideal.intersect(off_diagonal_ideal(window, trunc)) != ish.mul_diag_shift():
            ok_cp = False
    out.append(
        check(
            "A5.matrix-oracle",
            "truncated matrix oracle: row-ideal products match absorption; "
            "the off-diagonal intersection matches the shifted layering times "
            "the subdiagonal",
            ok_cp,
        )
    )
    return out


def criterion_lattice(fx, n_random=100, window=12, trunc=6):
    """A6: layering max/min match matrix-ideal intersection/sum."""
    rng = random.Random(SEED + 2)
    tr = fx.translation
    rep_pt = fx.point("p")
    ok = True
    for _ in range(n_random):
        a = _rand_layering(fx, rng, names=("p",), spread=2)
        b = _rand_layering(fx, rng, names=("p",), spread=2)
        ia, _ = realize(tr, a, window, trunc, rep=rep_pt)
        ib, _ = realize(tr, b, window, trunc, rep=rep_pt)
        mx, _ = realize(tr, layering_max(tr, a, b), window, trunc, rep=rep_pt)
        mn, _ = realize(tr, layering_min(tr, a, b), window, trunc, rep=rep_pt)
        if ia.intersect(ib) != mx or ia.add(ib) != mn:
            ok = False
    return [
        check(
            "A6.lattice",
            "layering max/min correspond to matrix-ideal intersection/sum",
            ok,
            samples=n_random,
        )
    ]


def criterion_series(fx3, fx9, upto=12):
    """A7: blowup dimension series match the shifted form, the literal
    unshifted statement is documented as off by one twist, and the
    top-degree bookkeeping chain holds."""
    out = []
    for fx in (fx3, fx9):
        rep = blowup_series_report(fx.ctx, _pdiv(fx), upto, shelf_levels=(1,))
        out.append(
            check(
                "A7.series.mu%d" % fx.mu,
                "blowup dimensions = ring series minus the t-shifted triple pole",
                rep["matches_with_t_shift"] and not rep["matches_without_t_shift"],
                with_t_shift=rep["matches_with_t_shift"],
                without_t_shift=rep["matches_without_t_shift"],
                discrepancy=(
                    "the unshifted form misses every degree by a shifted "
                    "binomial; the shifted form is adopted and both are reported"
                ),
            )
        )
    top = _pdiv(fx3, "p", 0, fx3.mu - 1)
    rep = blowup_series_report(fx3.ctx, top, upto)
    numer_ok = HilbertSeries((1, -1, 1), 3).coeffs(upto) == rep["dims"]
    out.append(
        check(
            "A7.series.top-degree",
            "one-below-top blowup has series (t^2 - t + 1)/(1-t)^3",
            numer_ok and rep["matches_with_t_shift"],
        )
    )
    out.append(bl.top_degree_series_chain(fx3.mu))
    return out


def criterion_line_module(fx, upto=10):
    """A8: the exceptional line module filtration for the origin blowup and
    for a one-point blowup inside a larger one."""
    out = []
    rep0 = bl.exceptional_filtration(fx.ctx, Divisor.zero(fx.curve), fx.point("p"), upto)
    out.append(check("A8.line.base", "filtration over the unblown ring", rep0["ok"],
                     parts={p["id"]: p["ok"] for p in rep0["details"]["parts"]}))
    rep1 = bl.exceptional_filtration(fx.ctx, _pdiv(fx), fx.point("q"), min(upto, 6))
    out.append(check("A8.line.inside", "filtration inside a one-point blowup", rep1["ok"],
                     parts={p["id"]: p["ok"] for p in rep1["details"]["parts"]}))
    return out


def criterion_left_right(fx, up_n=6):
    """A9: right and left families share bar sections and profiles."""
    ok = True
    d = _pdiv(fx)
    for k in range(0, up_n + 1):
        for n in range(max(k, 1), up_n + 1):
            rep = bl.left_right_checks(fx.ctx, d, k, n)
            ok = ok and rep["ok"]
    q_ok = bl.q_left_right_check(fx.ctx, fx.point("p"), 2, 1, 1, 3)["ok"]
    q_ok = q_ok and bl.q_left_right_check(fx.ctx, fx.point("p"), 3, 1, 2, 4)["ok"]
    return [
        check(
            "A9.left-right",
            "transposed families: identical bar sections, matching profiles, "
            "tapered variant included",
            ok and q_ok,
        )
    ]


def criterion_build_module(fx, n_random=20, upto=6):
    """A10: clipped-layering modules close under products; y = 0 recovers
    the blowup layering."""
    rng = random.Random(SEED + 3)
    tr = fx.translation
    ok = True
    for _ in range(n_random):
        d = _pdiv(fx, "p", 0, rng.randint(1, 2))
        if rng.random() < 0.5:
            d = d + _pdiv(fx, "q")
        k = rng.randint(1, 3)
        dk = d.partial_sum(tr, k)
        y = Divisor.zero(fx.curve)
        for pt, c in dk.items():
            y = y + Divisor.of_point(fx.curve, pt, rng.randint(0, c))
        rep = bl.build_module_check(fx.ctx, d, y, upto)
        ok = ok and rep["ok"]
    rep0 = bl.build_module_check(fx.ctx, _pdiv(fx) + _pdiv(fx, "q"), Divisor.zero(fx.curve), upto)
    ok = ok and rep0["ok"] and rep0["details"]["recovers_blowup"]
    return [
        check(
            "A10.build-module",
            "closure certificates for clipped layerings; zero correction "
            "recovers the blowup exactly",
            ok,
            samples=n_random,
        )
    ]


def criterion_q_family(fx, upto=7):
    """A11: tapered-family factor series, lattice identity, intersection."""
    rep = bl.q_family_checks(fx.ctx, fx.point("p"), upto)
    return [rep]


def criterion_shadows(fx):
    """A12: bar-level point-space identities plus the engineered negative."""
    out = []
    zero = Divisor.zero(fx.curve)
    pos = bl.point_space_shadow(fx.ctx, zero, fx.point("p"), 2)
    out.append(
        check(
            "A12.shadow.consistent",
            "bar shadow of the generation condition closes at depth 2",
            pos["ok"] and pos["details"]["verdict"] == "consistent",
        )
    )
    neg = bl.point_space_shadow(fx.ctx, zero, fx.point("p"), 1)
    out.append(
        check(
            "A12.shadow.violated",
            "the depth-1 shadow is a proper containment and reports violated",
            neg["ok"] and neg["details"]["verdict"] == "violated",
        )
    )
    out.append(bl.point_space_identity(fx.ctx, fx.point("p")))
    return out


def _criterion_plan(level):
    small = level != "full"
    return [
        ("A1", criterion_riemann_roch, {"n_random": 20 if small else 50}),
        ("A2", criterion_surjectivity_table, {}),
        ("A3", "pair", criterion_closed_form, {"upto": 8 if small else 10}),
        ("A4", criterion_mult_certificates, {"mn_max": 3 if small else 4}),
        ("A5", criterion_absorption, {"n_random": 80 if small else 200}),
        ("A6", criterion_lattice, {"n_random": 50 if small else 100}),
        ("A7", "pair", criterion_series, {}),
        ("A8", criterion_line_module, {"upto": 6 if small else 10}),
        ("A9", criterion_left_right, {"up_n": 4 if small else 6}),
        ("A10", criterion_build_module, {"n_random": 10 if small else 20}),
        ("A11", criterion_q_family, {"upto": 6 if small else 7}),
        ("A12", criterion_shadows, {}),
    ]


def _run_criterion(entry, fx3, fx9):
    if entry[1] == "pair":
        _, _, fn, kwargs = entry
        return fn(fx3, fx9, **kwargs)
    _, fn, kwargs = entry
    return fn(fx3, **kwargs)


def _worker(payload):
    # runs in a subprocess: rebuild fixtures from their names
    from .config import load_fixture

    name3, name9, level, index = payload
    fx3 = load_fixture(name3)
    fx9 = load_fixture(name9) if name9 != name3 else fx3
    entry = _criterion_plan(level)[index]
    return index, _run_criterion(entry, fx3, fx9)


def run_all(fx3, fx9, level="full", jobs=1):
    """Assemble the deterministic report for a fixture pair.

    Criteria are independent, so jobs > 1 fans them out to worker
    processes; the report order is fixed either way.
    """
    plan = _criterion_plan(level)
    if jobs > 1:
        import multiprocessing as mp

        payloads = [
            (fx3.config.name, fx9.config.name, level, i) for i in range(len(plan))
        ]
        with mp.Pool(jobs) as pool:
            results = dict(pool.map(_worker, payloads))
        checks = [c for i in range(len(plan)) for c in results[i]]
    else:
        checks = []
        for entry in plan:
            checks += _run_criterion(entry, fx3, fx9)
    return {
        "fixture": fx3.config.name,
        "sibling": fx9.config.name,
        "level": level,
        "passed": all(c["ok"] for c in checks),
        "checks": checks,
    }
