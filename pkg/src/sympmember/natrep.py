"""White-box rewriting in the natural representation.

:func:`rewrite_natural` writes an explicit symplectic matrix as an SLP in
the standard generators.  It runs the same pipeline as the black-box
rewriter, but every search reads matrix entries and takes a discrete log
instead of scanning, and the middle block is handed straight to the next
level of recursion.  Rank 1 bottoms out in :func:`sl2_rewrite`.
"""

from __future__ import annotations

from .errors import DetNotOne, DimensionMismatch, NotSymplectic
from .rewrite import Pipeline
from .slp import slp_conj, slp_gen, slp_identity, slp_inv, slp_pow, slp_product
from .spn import GroupParams, Matrix, is_symplectic, standard_generators

__all__ = ["two_squares", "ell_slp", "sl2_rewrite", "WhiteBoxPipeline", "rewrite_natural"]


def two_squares(field, mu):
    """Exponents ``a`` with ``sum(omega**(2a)) == mu``.

    Returns ``()`` for zero, ``(a,)`` when mu is a square and ``(a, b)``
    with ``a <= b`` otherwise; smallest solution in lexicographic order.
    """
    mu = int(mu)
    if mu == 0:
        return ()
    half = (field.q - 1) // 2
    squares = [field.omega_pow(2 * a) for a in range(half)]
    if mu in squares:
        return (squares.index(mu),)
    for a in range(half):
        for b in range(a, half):
            if field.add(squares[a], squares[b]) == mu:
                return (a, b)
    raise AssertionError(f"{mu} is not a sum of two squares in GF({field.q})")


def ell_slp(field, mu):
    """SLP for the long root element e_1 -> e_1 + mu f_1 (built from t, delta)."""
    exps = two_squares(field, mu)
    if not exps:
        return slp_identity()
    t, d = slp_gen(1), slp_gen(2)
    parts = [t if a == 0 else slp_conj(t, slp_pow(d, -a)) for a in exps]
    return slp_product(parts)


def sl2_rewrite(m):
    """SLP over (s, t, delta) for a 2x2 matrix of determinant 1."""
    if m.dim != 2:
        raise DimensionMismatch("sl2_rewrite needs a 2x2 matrix")
    F = m.field
    a, b, c, d = (m[i, j] for i in (0, 1) for j in (0, 1))
    if a * d - b * c != 1:
        raise DetNotOne("determinant is not 1")
    gens = standard_generators(GroupParams(1, F))
    s = gens.s
    zs = []
    g = m
    if g[0, 0].is_zero():
        zs.append(slp_gen(0))
        g = g @ s
    if not g[0, 1].is_zero():
        mu = -g[0, 1] / g[0, 0]
        zs.append(ell_slp(F, mu.value))
        g = g @ _ell_matrix(F, mu)
    if not g[1, 0].is_zero():
        # f1 -> f1 + nu e1 equals l(-nu)^s
        nu = -g[1, 0] / g[1, 1]
        zs.append(slp_conj(ell_slp(F, (-nu).value), slp_gen(0)))
        g = g @ Matrix.from_entries(F, [[1, 0], [nu.value, 1]])
    k = g[0, 0].dlog()
    parts = [slp_pow(slp_gen(2), k)]
    if zs:
        parts.append(slp_inv(slp_product(zs)))
    return slp_product(parts)


def _ell_matrix(F, mu):
    return Matrix.from_entries(F, [[1, mu.value], [0, 1]])


class WhiteBoxPipeline(Pipeline):
    """Pipeline whose searches read entries of explicit matrices."""

    iterated_handles = False

    def __init__(self, params):
        gens = standard_generators(params)
        ident = Matrix.identity(params.field, params.dim)
        super().__init__(params, gens, lambda a, b: a @ b, lambda a: a.inv(),
                         lambda a, b: a == b, lambda: ident)

    def in_S(self, h):
        return h[0, 2 * self.n - 1].is_zero()

    def entry_is_zero(self, h, j):
        return h[0, j - 1].is_zero()

    def in_T(self, h):
        return all(h[0, j].is_zero() for j in range(1, 2 * self.n))

    def find_zalpha(self, g):
        n = self.n
        den = g[0, 2 * n - 2]
        if den.is_zero():
            return None
        return (-g[0, 2 * n - 1] / den).dlog()

    def find_ell(self, g):
        a = g[0, 0]
        if a.is_zero():
            return None
        return (-g[0, 2 * self.n - 1] / a).value

    def find_k0(self, g, b):
        n = self.n
        gamma = b[0, 2 * n - 2]
        if gamma.is_zero():
            return None, None
        k = (-g[0, 2 * n - 2] / (g[0, 0] * gamma)).dlog()
        dk = self.power(self.gens[2], k)
        return k, dk @ b @ dk.inv()

    def q_coord(self, h, j):
        return h[0, j - 1].value

    def recover_block(self, g):
        n = self.n
        a_inv = g[0, 0].inv()
        return g.block(1, 2 * n - 1).scale(a_inv.value)

    def find_center(self, h):
        n = self.n
        eps = h[1, 1] if n >= 2 else h.field.one
        if eps != 1 and eps != -1:
            return None
        k = (eps / h[0, 0]).dlog()
        return k, 0 if eps == 1 else 1


def rewrite_natural(m, params):
    """SLP over the standard generators of Sp(2m, q) evaluating to ``m``."""
    if m.dim != params.dim:
        raise DimensionMismatch(f"expected dim {params.dim}, got {m.dim}")
    if not is_symplectic(m, params):
        raise NotSymplectic("matrix does not preserve the symplectic form")
    if params.n == 1:
        return sl2_rewrite(m)
    slp, _ = WhiteBoxPipeline(params).rewrite(m)
    return slp

