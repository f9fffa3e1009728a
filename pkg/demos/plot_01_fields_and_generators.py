"""
Finite fields and the standard generators
=========================================

Build GF(9), look at its primitive element, then print the six standard
generators of Sp(4, 9).
"""

from sympmember import GroupParams, field_make, is_symplectic, standard_generators
from sympmember.spn import GEN_NAMES

# GF(9) = GF(3)[x] / (x^2 + 1); elements are encoded as c0 + 3*c1
F = field_make(3, 2)
print(F)
print("omega =", F.omega, "with coefficients", F.omega.coeffs)

# every nonzero element is a power of omega, so discrete logs are table lookups
for a in F.elements()[1:4]:
    print(f"{a} = omega^{a.dlog()}")

# the generators act on the basis e1, e2, f2, f1 (row i is the image of basis vector i)
params = GroupParams(2, F)
gens = standard_generators(params)
for name, g in zip(GEN_NAMES, gens):
    print(f"{name}: symplectic={is_symplectic(g, params)}")
    print(g.entries)

# s^2 is -1 on the first hyperbolic pair
print((gens.s @ gens.s).entries)
