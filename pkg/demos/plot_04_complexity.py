"""
Oracle calls against n^2 q
==========================

Measure oracle calls and SLP length over a small grid and compare them with
the frozen ceilings C n^2 q and C' n^2 log2 q.
"""

import math

import numpy as np

from sympmember import GroupParams, bb_wrap, field_make, random_element, rewrite
from sympmember import standard_generators
from sympmember.bounds import C_LEN, C_TOTAL

cells = [(1, 7), (2, 3), (2, 5), (2, 9), (3, 3), (3, 7)]
for n, q in cells:
    (p, k) = (3, 2) if q == 9 else (q, 1)
    params = GroupParams(n, field_make(p, k))
    gens = standard_generators(params)
    bb = bb_wrap(params)
    calls, lens = [], []
    for seed in range(10):
        m, _ = random_element(params, gens, 50, seed)
        res = rewrite(bb, bb.embed(m))
        calls.append(res.stats.total)
        lens.append(len(res.slp))
    calls, lens = np.array(calls), np.array(lens)
    print(f"n={n} q={q:<2}  calls/(n^2 q) = {calls.max() / (n * n * q):5.1f} (<= {C_TOTAL})"
          f"  len/(n^2 log2 q) = {lens.max() / (n * n * math.log2(q)):5.1f} (<= {C_LEN})")
