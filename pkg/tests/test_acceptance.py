"""Acceptance criteria 1-9.

Each test records one PASS/FAIL line, printed in the terminal summary.
Complexity constants live in ``sympmember.bounds`` and are frozen.
"""

import math

import pytest
import sympy

from sympmember import bb_wrap, random_element, rewrite, rewrite_natural, slp_eval
from sympmember import standard_generators
from sympmember.blackbox import shadow
from sympmember.bounds import C_COST, C_LEN, C_RECOVER, C_STEP1, C_STEP2, C_STEP3, C_TOTAL
from sympmember.bounds import measure
from sympmember.rewrite import BlackBoxPipeline, build_genkit, in_S, in_T
from sympmember.slp import slp_serialize
from sympmember.spn import Matrix, is_symplectic

from conftest import (ACCEPTANCE_LINES, GRID, from_images, params_for, pos_e, pos_f,
                      q_element)
from test_spn import closure

TRIALS = 100


def report(num, ok, detail):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[num] = line
    print(line)
    return ok


def ev(bb, slp):
    return slp_eval(slp, bb.gens, bb.mul, bb.inv, bb.id)


@pytest.fixture(scope="module")
def grid_runs():
    """Criterion-1 runs: {(n, q): [(ok, measure), ...]}."""
    runs = {}
    for n, q in GRID:
        params = params_for(n, q)
        gens = standard_generators(params)
        bb = bb_wrap(params, 1)
        cell = []
        for seed in range(TRIALS):
            m, _ = random_element(params, gens, 50, seed)
            g = bb.embed(m)
            res = rewrite(bb, g)
            ok = bb.eq(ev(bb, res.slp), g) and shadow(ev(bb, res.slp)) == m
            cell.append((ok, measure(res)))
        runs[(n, q)] = cell
    return runs


def test_criterion_1_round_trip(grid_runs):
    bad = {c: sum(not ok for ok, _ in r) for c, r in grid_runs.items()}
    bad = {c: k for c, k in bad.items() if k}
    total = sum(len(r) for r in grid_runs.values())
    assert report(1, not bad, f"{total - sum(bad.values())}/{total} round trips over "
                              f"{len(grid_runs)} cells; failing cells {bad}")


def test_criterion_2_exhaustive_sp2_3():
    params = params_for(1, 3)
    bb = bb_wrap(params, 1)
    kit = build_genkit(bb)
    group = closure(list(standard_generators(params)))
    mism = trips = 0
    for m in group:
        g = bb.embed(m)
        trips += bb.eq(ev(bb, rewrite(bb, g).slp), g)
        mism += in_S(bb, kit, g) != m[0, 1].is_zero()
        mism += in_T(bb, kit, g) != m[0, 1].is_zero()
    ok = len(group) == 24 and trips == 24 and mism == 0
    assert report(2, ok, f"|Sp(2,3)|={len(group)}, round trips {trips}/24, "
                         f"predicate disagreements {mism}")


def test_criterion_3_s_membership_sp4_3():
    params = params_for(2, 3)
    gens = standard_generators(params)
    bb = bb_wrap(params, 1)
    kit = build_genkit(bb)
    dis = members = 0
    for seed in range(500):
        m, _ = random_element(params, gens, 50, seed)
        h = bb.embed(m)
        truth = shadow(h)[0, 3].is_zero()
        members += truth
        dis += in_S(bb, kit, h) != truth
    assert report(3, dis == 0, f"500 elements of Sp(4,3), {members} in S, {dis} disagreements")


def test_criterion_4_b_formula():
    checked, wrong, detail = 0, 0, []
    for n, q in [(2, 3), (2, 5), (3, 3), (3, 5)]:
        params = params_for(n, q)
        gens = standard_generators(params)
        bb = bb_wrap(params, 1)
        P = BlackBoxPipeline(bb)
        d, got, seed = 2 * n, 0, 0
        while got < 100:
            m, _ = random_element(params, gens, 50, seed)
            seed += 1
            r = m.row(0)
            a, c, z = r[0], r[d - 2], r[d - 1]
            # qualifying: in S with both corner entries nonzero
            if not (z.is_zero() and not a.is_zero() and not c.is_zero()):
                continue
            got += 1
            b = shadow(P.build_b(bb.embed(m)))
            gam = [-r[i] * c for i in range(1, d - 1)] + [-c * (2 * a - a * a * z - c)]
            # b = t(gamma_2, ..., gamma_2n), the whole matrix not just row 1
            wrong += b != q_element(params.field, n, [int(x) for x in gam])
        checked += got
        detail.append(f"({n},{q})")
    assert report(4, wrong == 0, f"{checked} qualifying g over cells {' '.join(detail)}, "
                                 f"{wrong} mismatches")


def test_criterion_5_slp_length(grid_runs):
    worst_len = worst_cost = 0.0
    for (n, q), cell in grid_runs.items():
        den = n * n * math.log2(q)
        for _, got in cell:
            worst_len = max(worst_len, got["length"] / den)
            worst_cost = max(worst_cost, got["cost"] / den)
    ok = worst_len <= C_LEN and worst_cost <= C_COST
    assert report(5, ok, f"max len/(n^2 log2 q) = {worst_len:.1f} (C'={C_LEN}), "
                         f"weighted {worst_cost:.1f} (C={C_COST})")


def test_criterion_6_oracle_calls(grid_runs):
    worst = dict.fromkeys(("total", "step1", "step2", "step3", "recover"), 0.0)
    for (n, q), cell in grid_runs.items():
        den = {"total": n * n * q, "step1": q, "step2": n * q, "step3": n * q,
               "recover": n * n * q}
        for _, got in cell:
            for k in worst:
                worst[k] = max(worst[k], got[k] / den[k])
    lim = {"total": C_TOTAL, "step1": C_STEP1, "step2": C_STEP2, "step3": C_STEP3,
           "recover": C_RECOVER}
    ok = all(worst[k] <= lim[k] for k in worst)
    detail = ", ".join(f"{k} {worst[k]:.1f}<={lim[k]}" for k in worst)
    assert report(6, ok, f"max ratios: {detail}")


def test_criterion_7_scramble_invariance():
    params = params_for(2, 5)
    gens = standard_generators(params)
    boxes = [bb_wrap(params, 1), bb_wrap(params, 2)]
    same = 0
    for seed in range(20):
        m, _ = random_element(params, gens, 50, seed)
        texts = [slp_serialize(rewrite(bb, bb.embed(m)).slp) for bb in boxes]
        same += texts[0] == texts[1]
    assert report(7, same == 20, f"{same}/20 byte-identical programs under seeds 1 and 2")


def test_criterion_8_white_black_agree():
    params = params_for(2, 3)
    gens = list(standard_generators(params))
    ident = Matrix.identity(params.field, 4)
    bb = bb_wrap(params, 1)
    white = black = 0
    for seed in range(50):
        m, _ = random_element(params, gens, 50, seed)
        w = rewrite_natural(m, params)
        white += slp_eval(w, gens, lambda a, b: a @ b, lambda a: a.inv(), lambda: ident) == m
        g = bb.embed(m)
        black += bb.eq(ev(bb, rewrite(bb, g).slp), g)
    ok = white == black == 50
    assert report(8, ok, f"white {white}/50, black {black}/50 on the same Sp(4,3) inputs")


def expected_generators(params):
    """Basis images written out directly (x: f_1 -> f_1 + e_2, f_2 -> f_2 + e_1)."""
    n, F = params.n, params.field
    e = lambda i: pos_e(i, n)  # noqa: E731
    f = lambda i: pos_f(i, n)  # noqa: E731
    w = F.omega_int
    out = [
        from_images(F, n, {e(1): {f(1): 1}, f(1): {e(1): -1}}),
        from_images(F, n, {e(1): {e(1): 1, f(1): 1}}),
        from_images(F, n, {e(1): {e(1): w}, f(1): {f(1): F.inv(w)}}),
    ]
    if n == 1:
        return out + [Matrix.identity(F, 2)] * 3
    out.append(from_images(F, n, {e(1): {e(2): 1}, e(2): {e(1): 1},
                                  f(1): {f(2): 1}, f(2): {f(1): 1}}))
    out.append(from_images(F, n, {**{e(i): {e(i % n + 1): 1} for i in range(1, n + 1)},
                                  **{f(i): {f(i % n + 1): 1} for i in range(1, n + 1)}}))
    out.append(from_images(F, n, {f(1): {f(1): 1, e(2): 1}, f(2): {f(2): 1, e(1): 1}}))
    return out


def test_criterion_9_generator_contract():
    bad = []
    for n, q in GRID:
        params = params_for(n, q)
        F = params.field
        gens = list(standard_generators(params))
        if gens != expected_generators(params):
            bad.append((n, q, "images"))
        if not all(is_symplectic(g, params) for g in gens):
            bad.append((n, q, "form"))
        s2 = [[0] * params.dim for _ in range(params.dim)]
        for i in range(params.dim):
            s2[i][i] = 1
        s2[0][0] = s2[-1][-1] = F.neg(1)
        if gens[0] @ gens[0] != Matrix.from_entries(F, s2):
            bad.append((n, q, "s^2"))
        d = gens[2]
        ident = Matrix.identity(F, params.dim)

        def dpow(e):
            r = ident
            for _ in range(e):
                r = r @ d
            return r
        order_ok = dpow(q - 1) == ident and all(
            dpow((q - 1) // r) != ident for r in sympy.factorint(q - 1))
        if not order_ok:
            bad.append((n, q, "delta order"))
    assert report(9, not bad, f"{len(GRID)} cells checked, problems {bad}")
