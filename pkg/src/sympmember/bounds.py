"""Frozen complexity ceilings.

Calibrated once over the acceptance grid (n in {1,2,3}, q in {3,5,7,9};
n=2 with q in {11,13,25,27}; n=4, q=3; 100 random elements per cell), then
fixed with headroom.  Observed maxima at calibration time are noted.
"""

import math

# total oracle calls per rewrite <= C_TOTAL * n^2 * q          (observed 49.1)
C_TOTAL = 80
# step 1 calls <= C_STEP1 * q                                   (observed 24.3, rank 1)
C_STEP1 = 40
# prepare_corners + step 2 calls <= C_STEP2 * n * q              (observed 30.7)
C_STEP2 = 50
# step 3 calls <= C_STEP3 * n * q                                (observed 32.3)
C_STEP3 = 50
# block recovery in step 4 <= C_RECOVER * n^2 * q; the scan costs at most
# 9q + 8 per coordinate, so the ratio stays below ~36 for every n  (observed 14.9)
C_RECOVER = 40
# SLP instruction count <= C_LEN * n^2 * log2(q)                  (observed 24.7)
C_LEN = 40
# weighted SLP cost (pow charged 2*floor(log2|e|)+2) <= C_COST * n^2 * log2(q)  (observed 26.4)
C_COST = 40


def ceilings(n, q):
    """Per-rewrite ceilings for one (n, q) cell."""
    nn, lq = n * n, math.log2(q)
    return {
        "total": C_TOTAL * nn * q,
        "step1": C_STEP1 * q,
        "step2": C_STEP2 * n * q,
        "step3": C_STEP3 * n * q,
        "recover": C_RECOVER * nn * q,
        "length": C_LEN * nn * lq,
        "cost": C_COST * nn * lq,
    }


def measure(result):
    """Quantities compared against :func:`ceilings` for one RewriteResult."""
    from .slp import slp_cost

    tr = {}
    for rec in result.trace:
        tr[rec["step"]] = tr.get(rec["step"], 0) + rec["calls"]
    return {
        "total": result.stats.total,
        "step1": tr.get("step1", tr.get("rank1", 0)),
        "step2": tr.get("prepare", 0) + tr.get("step2", 0),
        "step3": tr.get("step3", 0),
        "recover": tr.get("recover", 0),
        "length": len(result.slp),
        "cost": slp_cost(result.slp),
    }


def violations(result, n, q):
    lim = ceilings(n, q)
    got = measure(result)
    return {k: (got[k], lim[k]) for k in lim if got[k] > lim[k]}
