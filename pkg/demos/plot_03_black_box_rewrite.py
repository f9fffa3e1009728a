"""
Rewriting in a black-box group
==============================

Hide Sp(6, 5) behind a random change of basis, then recover an SLP for a
random element using only multiply, invert and equality calls.
"""

from sympmember import bb_wrap, random_element, rewrite, slp_eval, standard_generators
from sympmember import GroupParams, field_make
from sympmember.blackbox import shadow

params = GroupParams(3, field_make(5))
bb = bb_wrap(params, scramble_seed=1)

m, _ = random_element(params, standard_generators(params), word_length=50, seed=0)
g = bb.embed(m)

res = rewrite(bb, g)
print("oracle calls:", res.stats, "total", res.stats.total)
print("SLP length:", len(res.slp))

# where the calls went
for rec in res.trace:
    print(f"  {rec['step']:<8} {rec['calls']:>5} calls")

# the program evaluates to g in the black box
print("round trip:", bb.eq(slp_eval(res.slp, bb.gens, bb.mul, bb.inv, bb.id), g))

# the scramble only hides the matrix; shadow() is for checking, not for the algorithm
print("matches hidden matrix:", shadow(g) == m)

# a different scramble gives the same program, since only oracle answers are used
bb2 = bb_wrap(params, scramble_seed=2)
print("same SLP under another scramble:", rewrite(bb2, bb2.embed(m)).slp == res.slp)

# with the matrix in hand, the white-box rewriter reads entries instead of scanning
from sympmember import rewrite_natural  # noqa: E402

w = rewrite_natural(m, params)
print("white-box SLP length:", len(w))
