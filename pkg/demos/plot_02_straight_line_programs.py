"""
Straight-line programs
======================

An SLP is a list of instructions over generator slots.  The same program
can be evaluated in any group, here in the matrix group and in a free
group of reduced words.
"""

from sympmember import GroupParams, Matrix, field_make, slp_eval, slp_serialize
from sympmember import standard_generators
from sympmember.slp import slp_conj, slp_gen, slp_mul, slp_pow

s, t, delta = slp_gen(0), slp_gen(1), slp_gen(2)

# (t^s)^(delta^3) * t^-2
prog = slp_mul(slp_conj(slp_conj(t, s), slp_pow(delta, 3)), slp_pow(t, -2))
print(slp_serialize(prog))

params = GroupParams(1, field_make(7))
ident = Matrix.identity(params.field, 2)
m = slp_eval(prog, list(standard_generators(params)),
             lambda a, b: a @ b, lambda a: a.inv(), lambda: ident)
print(m.entries)


# evaluate the same program on letters of a free group
def reduce(w):
    out = []
    for x in w:
        if out and out[-1] == (x[0], -x[1]):
            out.pop()
        else:
            out.append(x)
    return tuple(out)


letters = [((i, 1),) for i in range(6)]
word = slp_eval(prog, letters, lambda a, b: reduce(a + b),
                lambda a: tuple((i, -e) for i, e in reversed(a)), lambda: ())
print(" ".join("stduvx"[i] + ("" if e > 0 else "'") for i, e in word))
