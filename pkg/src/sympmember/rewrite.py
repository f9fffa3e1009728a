"""Constructive membership in black-box Sp(2n, q), q odd.

Given the six standard generator handles of a black-box copy of Sp(2n, q)
and a target handle ``g``, :func:`rewrite` returns an SLP over the
generators that evaluates exactly to ``g``.  Only ``mul``, ``inv``, ``eq``
and ``id`` are used on elements.

The reduction runs in four stages (rows refer to the hidden natural matrix
of an element, basis e_1..e_n, f_n..f_1, row vectors):

1. ``step1``: right-multiply by z_alpha (or u) so that entry (1, 2n) is 0.
   Membership of that set is the commutation test ``q^(q^h) == q`` with
   ``q = t^s``.
2. ``prepare_corners`` + ``step2``: make entries (1,1) and (1,2n-1)
   nonzero, then build ``b = (x^(q^g) x^-1)^s``, find the delta-conjugate of
   ``b`` that clears row 1, re-express it through the x_i(alpha) family and
   clear the leftover f_1 coordinate with a long root element.
3. ``step3``: repeat on ``g^s`` with f_1-fixing words only, which lands in
   the stabiliser G1 of <e_1> and <f_1>.
4. ``step4``: read off the middle (2n-2)-block by coordinate scans on
   ``x_i(1)^g``, rewrite it with the white-box rewriter, lift, and fix the
   remaining diagonal/central part with a delta power and +-1.

Every search is a method on :class:`Pipeline`; the black-box class scans
over omega-powers with oracle calls while the white-box class in
:mod:`sympmember.natrep` reads matrix entries directly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import NotInGroup, StepFailed
from .slp import (
    Slp,
    slp_conj,
    slp_eval,
    slp_gen,
    slp_identity,
    slp_inv,
    slp_mul,
    slp_pow,
    slp_product,
    slp_substitute,
    _power,
)
from .spn import GroupParams, Matrix, form_matrix

log = logging.getLogger(__name__)

__all__ = [
    "Word",
    "GenKit",
    "RewriteResult",
    "Pipeline",
    "BlackBoxPipeline",
    "build_genkit",
    "in_S",
    "in_T",
    "entry_is_zero",
    "step1",
    "prepare_corners",
    "step2",
    "step3",
    "recover_block",
    "step4",
    "rewrite",
]

S, T, DELTA, U, V, X = range(6)


@dataclass(frozen=True)
class Word:
    """An SLP together with the element it evaluates to."""

    slp: Slp
    h: object


@dataclass
class RewriteResult:
    slp: Slp
    stats: object
    trace: list = field(default_factory=list)

    @property
    def length(self):
        return len(self.slp)


class GenKit:
    """Precomputed words shared by all steps.

    Families are built lazily and cached.  Handle lists used by the scans
    (``*_handles``) are produced by repeated delta-conjugation, which costs
    two multiplications per entry.
    """

    def __init__(self, pipeline):
        P = self.P = pipeline
        self.n = P.n
        self.F = P.F
        self.q = P.q
        self.gens = [Word(slp_gen(i), P.gens[i]) for i in range(6)]
        s, t = self.gens[S], self.gens[T]
        self.one = Word(slp_identity(), P.identity())
        self.q_elem = P.wconj(t, s)
        self._cache = {}

    def _memo(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    # -- delta powers -------------------------------------------------------------

    def delta_inv(self):
        return self._memo("dinv", lambda: self.P.winv(self.gens[DELTA]))

    def dpow_slp(self, e):
        return slp_pow(self.gens[DELTA].slp, e)

    def _iterate_conj(self, start):
        """[start^(delta^-k) for k in 0..q-2] as handles."""
        P = self.P
        d, dinv = self.gens[DELTA].h, self.delta_inv().h
        out = [start]
        for _ in range(self.q - 2):
            out.append(P.mul(P.mul(d, out[-1]), dinv))
        return out

    def dpow_handles(self):
        """[delta^k for k in 0..q-2]."""
        def build():
            P, d = self.P, self.gens[DELTA].h
            out = [P.identity()]
            for _ in range(self.q - 2):
                out.append(P.mul(out[-1], d))
            return out
        return self._memo("dpows", build)

    # -- z_alpha: e1 -> e1 - alpha e2, f2 -> f2 + alpha f1 ---------------------------

    def z1(self):
        return self._memo("z1", lambda: self.P.wconj(self.gens[X], self.gens[S]))

    def zalpha_handles(self):
        return self._memo("zah", lambda: self._iterate_conj(self.z1().h))

    def zalpha(self, k, h=None):
        """Word for z_alpha with alpha = omega^k."""
        slp = slp_conj(self.z1().slp, self.dpow_slp(-k))
        if h is None:
            h = self.P.handle_of(slp, self.zalpha_handles, k)
        return Word(slp, h)

    # -- long root elements l(mu): e1 -> e1 + mu f1 ---------------------------------

    def ell_square_handles(self):
        """[l(omega^(2a)) for a in 0..(q-3)/2]."""
        return self._memo(
            "ellsq", lambda: self._iterate_conj_partial(self.gens[T].h, (self.q - 1) // 2))

    def _iterate_conj_partial(self, start, count):
        P = self.P
        d, dinv = self.gens[DELTA].h, self.delta_inv().h
        out = [start]
        for _ in range(count - 1):
            out.append(P.mul(P.mul(d, out[-1]), dinv))
        return out

    def ell_slp(self, mu):
        from .natrep import ell_slp
        return ell_slp(self.F, mu)

    def ell(self, mu):
        """Word for l(mu); mu is a canonical field encoding."""
        from .natrep import two_squares

        slp = self.ell_slp(mu)
        if not self.P.iterated_handles:
            return Word(slp, self.P.ev(slp))
        exps = two_squares(self.F, mu)
        if not exps:
            return Word(slp, self.P.identity())
        sq = self.ell_square_handles()
        h = sq[exps[0]]
        for a in exps[1:]:
            h = self.P.mul(h, sq[a])
        return Word(slp, h)

    # -- permutation words ---------------------------------------------------------------

    def vpow(self, e):
        e %= self.n
        if e == 0:
            return None
        return self._memo(("vpow", e), lambda: self.P.wpow(self.gens[V], e))

    def _chain(self, *words):
        ws = [w for w in words if w is not None]
        if not ws:
            return self.one
        acc = ws[0]
        for w in ws[1:]:
            acc = self.P.wmul(acc, w)
        return acc

    def to_f1(self, j):
        """Word mapping basis position j (1-based) to +-f_1."""
        n = self.n

        def build():
            if j <= n:
                return self._chain(self.vpow(n - j + 1), self.gens[S])
            i = 2 * n + 1 - j
            return self._chain(self.vpow(n - i + 1))
        return self._memo(("tof1", j), build)

    def to_e1(self, j):
        """Word mapping basis position j to +-e_1."""
        n = self.n

        def build():
            if j <= n:
                return self._chain(self.vpow(n - j + 1))
            i = 2 * n + 1 - j
            return self._chain(self.vpow(n - i + 1), self.gens[S])
        return self._memo(("toe1", j), build)

    def center_transvection(self, j):
        """Transvection with center basis vector j: q^w with e_1 w = +-b_j."""
        n = self.n

        def build():
            if j <= n:
                w = self.vpow(j - 1)
            else:
                w = self._chain(self.gens[S], self.vpow(2 * n + 1 - j - 1))
            return self.q_elem if w is None else self.P.wconj(self.q_elem, w)
        return self._memo(("ctr", j), build)

    def flip(self, j):
        """s conjugated to pair j: e_j -> f_j, f_j -> -e_j."""
        return self._memo(("flip", j), lambda: self.gens[S] if j == 1
                          else self.P.wconj(self.gens[S], self.vpow(j - 1)))

    def cyc(self, m):
        """(v u)^m: cycles pairs 2 -> 3 -> ... -> n -> 2, fixes pair 1."""
        m %= max(self.n - 1, 1)
        if m == 0:
            return None

        def build():
            vu = self._memo("vu", lambda: self.P.wmul(self.gens[V], self.gens[U]))
            return self.P.wpow(vu, m)
        return self._memo(("cyc", m), build)

    def y1(self):
        """e_2 -> e_2 + e_1, f_1 -> f_1 - f_2."""
        return self._memo("y1", lambda: self.P.winv(self.P.wconj(self.z1(), self.gens[U])))

    # -- x_i(alpha): Q-element with single coordinate alpha at position i ----------------

    def xi1(self, i):
        n = self.n

        def build():
            if i == 2:
                return self.P.winv(self.z1())
            if i <= n:
                return self.P.wconj(self.xi1(2), self.cyc(i - 2))
            j = 2 * n + 1 - i
            return self.P.wconj(self.xi1(j), self.flip(j))
        return self._memo(("xi1", i), build)

    def xi_handles(self, i):
        return self._memo(("xih", i), lambda: self._iterate_conj(self.xi1(i).h))

    def xi_neg_handles(self, i):
        """[x_i(-omega^m)] = inverses of x_i(omega^m)."""
        return self._memo(("xinh", i),
                          lambda: self._iterate_conj(self.P.inv(self.xi1(i).h)))

    def xi(self, i, m):
        """Word for x_i(omega^m)."""
        slp = slp_conj(self.xi1(i).slp, self.dpow_slp(-m))
        h = self.P.handle_of(slp, lambda: self.xi_handles(i), m)
        return Word(slp, h)

    # -- Sp(2n-2) and the center ---------------------------------------------------------

    def sub_gens(self):
        """SLPs for the standard generators of Sp(2n-2, q) on e_2..f_2."""
        def build():
            s, t, d, u, v, x = (w.slp for w in self.gens)
            out = [slp_conj(s, u), slp_conj(t, u), slp_conj(d, u)]
            if self.n == 2:
                out += [slp_identity()] * 3
            else:
                out += [slp_conj(u, v), slp_mul(v, u), slp_conj(x, v)]
            return out
        return self._memo("subgens", build)

    def minus_id(self):
        """-I as the product over pairs of (s^2)^(v^i)."""
        def build():
            s2 = self.P.wpow(self.gens[S], 2)
            words = [s2] + [self.P.wconj(s2, self.vpow(i)) for i in range(1, self.n)]
            return self._chain(*words)
        return self._memo("minus", build)


class Pipeline:
    """The four-step reduction over an abstract group.

    Subclasses supply the searches (``find_*``, ``q_coord``, ``entry_is_zero``
    and friends); everything else is shared.
    """

    iterated_handles = True

    def __init__(self, params, gens, mul, inv, eq, identity):
        self.params = params
        self.n = params.n
        self.F = params.field
        self.q = params.q
        self.gens = tuple(gens)
        self.mul = mul
        self.inv = inv
        self.eq = eq
        self._identity = identity
        self.kit = GenKit(self)
        self.telemetry = {"ell_correction": 0, "degenerate": 0, "u_fallback": 0}

    def identity(self):
        return self._identity()

    def calls(self):
        return 0

    # -- word algebra -----------------------------------------------------------------

    def conj(self, a, b):
        return self.mul(self.mul(self.inv(b), a), b)

    def ev(self, slp):
        return slp_eval(slp, self.gens, self.mul, self.inv, self.identity)

    def power(self, a, e):
        return _power(a, e, self.mul, self.inv, self.identity)

    def handle_of(self, slp, handles, idx):
        if self.iterated_handles:
            return handles()[idx]
        return self.ev(slp)

    def wmul(self, a, b):
        return Word(slp_mul(a.slp, b.slp), self.mul(a.h, b.h))

    def winv(self, a):
        return Word(slp_inv(a.slp), self.inv(a.h))

    def wconj(self, a, b):
        return Word(slp_conj(a.slp, b.slp), self.conj(a.h, b.h))

    def wpow(self, a, e):
        return Word(slp_pow(a.slp, e), self.power(a.h, e))

    def wprod(self, words):
        words = [w for w in words if w is not None]
        if not words:
            return self.kit.one
        h = words[0].h
        for w in words[1:]:
            h = self.mul(h, w.h)
        return Word(slp_product([w.slp for w in words]), h)

    # -- membership tests ----------------------------------------------------------------

    def in_S(self, h):
        """(1, 2n) entry is zero  <=>  q^h commutes with q."""
        qe = self.kit.q_elem.h
        qh = self.conj(qe, h)
        return self.eq(self.conj(qe, qh), qe)

    def entry_is_zero(self, h, j):
        """Row-1 entry j (1-based) of h is zero."""
        if j == 2 * self.n:
            return self.in_S(h)
        return self.in_S(self.mul(h, self.kit.to_f1(j).h))

    def in_T(self, h):
        """Row 1 of h lies in <e_1>."""
        kit = self.kit
        qh = self.conj(kit.q_elem.h, h)
        n = self.n
        centers = list(range(1, n + 1)) + list(range(n + 1, 2 * n))
        for j in centers:
            c = kit.center_transvection(j).h
            if not self.eq(self.mul(qh, c), self.mul(c, qh)):
                return False
        return True

    def in_G1(self, h):
        return self.in_T(h) and self.in_T(self.conj(h, self.kit.gens[S].h))

    # -- searches (black-box defaults) ---------------------------------------------------

    def find_zalpha(self, g):
        for k, z in enumerate(self.kit.zalpha_handles()):
            if self.in_S(self.mul(g, z)):
                return k
        return None

    def find_ell(self, g):
        """Nonzero mu with g l(mu) in S (needs entry (1,1) of g nonzero)."""
        for mu in range(1, self.q):
            if self.in_S(self.mul(g, self.kit.ell(mu).h)):
                return mu
        return None

    def find_k0(self, g, b):
        """k with entry (1, 2n-1) of g b^(delta^-k) zero; returns (k, handle)."""
        kit = self.kit
        d, dinv = kit.gens[DELTA].h, kit.delta_inv().h
        bk = b
        for k in range(self.q - 1):
            if self.entry_is_zero(self.mul(g, bk), 2 * self.n - 1):
                return k, bk
            bk = self.mul(self.mul(d, bk), dinv)
        return None, None

    def q_coord(self, h, j):
        """Coordinate at position j of a Q-element (row-1 entry), as encoding."""
        if self.entry_is_zero(h, j):
            return 0
        for m, xneg in enumerate(self.kit.xi_neg_handles(j)):
            if self.entry_is_zero(self.mul(h, xneg), j):
                return self.F.omega_pow(m)
        raise StepFailed(f"coordinate {j} not recovered")

    def recover_block(self, g):
        """Middle (2n-2)-block of g scaled by 1/g_{1,1}, for g in G1."""
        n, kit = self.n, self.kit
        ginv = self.inv(g)
        rows = []
        for i in range(2, 2 * n):
            hi = self.mul(self.mul(ginv, kit.xi1(i).h), g)
            rows.append([self.q_coord(hi, j) for j in range(2, 2 * n)])
        return Matrix.from_entries(self.F, rows)

    def find_center(self, h):
        """(k, c) with h delta^k equal to id (c=0) or -I (c=1)."""
        one, minus = self.identity(), self.kit.minus_id().h
        for k, dk in enumerate(self.kit.dpow_handles()):
            hk = self.mul(h, dk)
            if self.eq(hk, one):
                return k, 0
            if self.eq(hk, minus):
                return k, 1
        return None

    # -- the steps --------------------------------------------------------------------------

    def step1(self, g, keep_f1=False):
        """Word z with g z in S."""
        kit = self.kit
        if self.in_S(g):
            return kit.one
        if self.n >= 2:
            k = self.find_zalpha(g)
            if k is not None:
                return kit.zalpha(k)
        if keep_f1 or self.n == 1:
            mu = self.find_ell(g)
            if mu is None:
                raise StepFailed("step 1: no long root element clears entry (1, 2n)")
            return kit.ell(mu)
        self.telemetry["u_fallback"] += 1
        z = kit.gens[U]
        if not self.in_S(self.mul(g, z.h)):
            raise StepFailed("step 1: no z_alpha and u fallback failed")
        return z

    def prepare_corners(self, g, keep_f1=False):
        """Make entries (1,1), (1,2n-1) nonzero, keeping (1,2n) zero.

        Returns ``(word, degenerate)``; when row 1 has a single nonzero entry
        the word instead sends g straight into T and ``degenerate`` is True.
        """
        n, kit = self.n, self.kit
        d = 2 * n
        nz = {j for j in range(1, d) if not self.entry_is_zero(g, j)}
        if not nz:
            raise StepFailed("row 1 is zero")
        if len(nz) == 1:
            (p,) = nz
            if keep_f1 and p != 1:
                raise StepFailed("unexpected row shape in step 3")
            self.telemetry["degenerate"] += 1
            return kit.to_e1(p), True
        if 1 not in nz and keep_f1:
            raise StepFailed("entry (1,1) vanished in step 3")

        def pair(pos):
            return pos if pos <= n else d + 1 - pos

        def e(i):
            return i

        def f(i):
            return d + 1 - i

        def apply_flip(j):
            nonlocal nz
            nz = {f(j) if p == e(j) else e(j) if p == f(j) else p for p in nz}
            return kit.flip(j)

        def apply_cyc(j):
            # pair j -> pair 2
            nonlocal nz
            m = (2 - j) % (n - 1)
            w = kit.cyc(m)

            def move(p):
                i = pair(p)
                if i == 1:
                    return p
                i2 = 2 + (i - 2 + m) % (n - 1)
                return e(i2) if p <= n else f(i2)
            nz = {move(p) for p in nz}
            return w

        words = []
        if 1 not in nz:
            j = min(pair(p) for p in nz)
            if e(j) not in nz:
                words.append(apply_flip(j))
            if j != 2:
                words.append(apply_cyc(j))
            words.append(kit.y1())
            nz.add(1)
        if f(2) not in nz:
            fj = [i for i in range(2, n + 1) if f(i) in nz]
            if fj:
                words.append(apply_cyc(fj[0]))
            else:
                j = min(i for i in range(2, n + 1) if e(i) in nz)
                words.append(apply_flip(j))
                if j != 2:
                    words.append(apply_cyc(j))
        return self.wprod(words), False

    def build_b(self, g):
        """b = (x^((t^s)^g) x^-1)^s, a Q-element with coordinates gamma_i."""
        kit = self.kit
        qg = self.conj(kit.q_elem.h, g)
        x = kit.gens[X].h
        return self.conj(self.mul(self.conj(x, qg), self.inv(x)), kit.gens[S].h)

    def step2(self, g):
        """Word z with g z in T (g in S with both corner entries nonzero)."""
        n, kit = self.n, self.kit
        b = self.build_b(g)
        k0, z0 = self.find_k0(g, b)
        if k0 is None:
            raise StepFailed("step 2: no delta-conjugate of b clears row 1")
        factors = []
        for j in range(2, 2 * n):
            c = self.q_coord(z0, j)
            if c:
                factors.append(kit.xi(j, self.F.dlog(c)))
        z = self.wprod(factors)
        gz = self.mul(g, z.h)
        if not self.in_S(gz):
            self.telemetry["ell_correction"] += 1
            mu = self.find_ell(gz)
            if mu is None:
                raise StepFailed("step 2: long root correction failed")
            ell = kit.ell(mu)
            z = self.wmul(z, ell)
            gz = self.mul(gz, ell.h)
        if not self.in_T(gz):
            raise StepFailed("step 2: result not in T")
        return z

    def clear_row1(self, g, keep_f1=False):
        """Steps 1-2: word z with g z in T."""
        z1 = self.step1(g, keep_f1)
        g1 = self.mul(g, z1.h)
        perm, degenerate = self.prepare_corners(g1, keep_f1)
        if degenerate:
            return self.wmul(z1, perm)
        g2 = self.mul(g1, perm.h)
        return self.wprod([z1, perm, self.step2(g2)])

    def step3(self, g):
        """Word z with g z in G1 (g in T)."""
        kit = self.kit
        s = kit.gens[S]
        h = self.conj(g, s.h)
        if self.in_T(h):
            return kit.one
        zp = self.clear_row1(h, keep_f1=True)
        return self.wconj(zp, self.winv(s))

    def step4(self, g, block=None):
        """Word evaluating exactly to g (g in G1).

        ``block`` is the output of :meth:`recover_block` if already known.
        """
        from .natrep import rewrite_natural

        n, F, kit = self.n, self.F, self.kit
        m = n - 1
        if block is None:
            block = self.recover_block(g)
        sub = GroupParams(m, F)
        jp = form_matrix(m, F)
        prod = block @ jp @ block.transpose()
        inv_c2 = prod[0, 2 * m - 1].value
        if inv_c2 == 0 or prod != jp.scale(inv_c2):
            raise NotInGroup("recovered block is not a scaled symplectic matrix")
        root = F.sqrt(F.inv(inv_c2))
        if root is None:
            raise NotInGroup("scale factor is not a square")
        for c in (root, F.neg(root)):
            w = rewrite_natural(block.scale(c), sub)
            lifted = slp_substitute(w, kit.sub_gens())
            lh = self.ev(lifted)
            found = self.find_center(self.mul(g, self.inv(lh)))
            if found is None:
                continue
            k, cidx = found
            head = [kit.minus_id().slp] if cidx else []
            return Word(slp_product(head + [kit.dpow_slp(-k), lifted]), g)
        raise StepFailed("step 4: no central correction found")

    # -- n = 1 ------------------------------------------------------------------------------

    def rewrite_rank1(self, g):
        """SL(2, q) base case with the same searches."""
        kit = self.kit
        s = kit.gens[S]
        zs = []
        if self.entry_is_zero(g, 1):
            zs.append(s)
            g = self.mul(g, s.h)
        if not self.in_S(g):
            mu = self.find_ell(g)
            if mu is None:
                raise StepFailed("rank 1: upper entry not cleared")
            ell = kit.ell(mu)
            zs.append(ell)
            g = self.mul(g, ell.h)
        h = self.conj(g, s.h)
        if not self.in_S(h):
            mu = self.find_ell(h)
            if mu is None:
                raise StepFailed("rank 1: lower entry not cleared")
            low = self.wconj(kit.ell(mu), self.winv(s))
            zs.append(low)
            g = self.mul(g, low.h)
        found = self.find_center(g)
        if found is None:
            raise StepFailed("rank 1: diagonal not matched")
        k, cidx = found
        head = [kit.minus_id().slp] if cidx else []
        z = slp_product([w.slp for w in zs]) if zs else None
        tail = [slp_inv(z)] if z is not None else []
        return slp_product(head + [kit.dpow_slp(-k)] + tail)

    # -- driver ----------------------------------------------------------------------------

    def rewrite(self, g):
        trace = []
        start = self.calls()

        def mark(step, slp=None):
            nonlocal start
            now = self.calls()
            trace.append({"step": step, "calls": now - start,
                          "slp_len": len(slp) if slp is not None else 0})
            start = now

        if self.n == 1:
            slp = self.rewrite_rank1(g)
            mark("rank1", slp)
        else:
            z1 = self.step1(g)
            mark("step1", z1.slp)
            g1 = self.mul(g, z1.h)
            perm, degenerate = self.prepare_corners(g1)
            mark("prepare", perm.slp)
            g2 = self.mul(g1, perm.h)
            if degenerate:
                z2 = None
            else:
                z2 = self.step2(g2)
                g2 = self.mul(g2, z2.h)
            mark("step2", z2.slp if z2 else None)
            z3 = self.step3(g2)
            mark("step3", z3.slp)
            g3 = self.mul(g2, z3.h)
            block = self.recover_block(g3)
            mark("recover")
            w = self.step4(g3, block)
            mark("step4", w.slp)
            zz = slp_product([z.slp for z in (z1, perm, z2, z3) if z is not None])
            slp = slp_mul(w.slp, slp_inv(zz))
        if not self.eq(self.ev(slp), g):
            raise NotInGroup("rewritten program does not evaluate to the target")
        mark("verify")
        return slp, trace


class BlackBoxPipeline(Pipeline):
    """The pipeline over a :class:`~sympmember.blackbox.BBGroup`.

    Only ``bb.mul``, ``bb.inv``, ``bb.eq``, ``bb.id``, ``bb.gens``,
    ``bb.params`` and ``bb.stats`` are touched.
    """

    def __init__(self, bb):
        self.bb = bb
        super().__init__(bb.params, bb.gens, bb.mul, bb.inv, bb.eq, bb.id)

    def calls(self):
        return self.bb.stats.total


# -- functional API ------------------------------------------------------------------------


def _pipeline(bb, kit):
    if kit is not None:
        return kit.P
    return BlackBoxPipeline(bb)


def build_genkit(bb):
    """GenKit bound to a fresh black-box pipeline over ``bb``."""
    return BlackBoxPipeline(bb).kit


def in_S(bb, kit, h):
    return _pipeline(bb, kit).in_S(h)


def in_T(bb, kit, h):
    return _pipeline(bb, kit).in_T(h)


def entry_is_zero(bb, kit, g, j):
    return _pipeline(bb, kit).entry_is_zero(g, j)


def step1(bb, kit, g):
    return _pipeline(bb, kit).step1(g).slp


def prepare_corners(bb, kit, g):
    """``(slp, degenerate)``; see :meth:`Pipeline.prepare_corners`."""
    w, degenerate = _pipeline(bb, kit).prepare_corners(g)
    return w.slp, degenerate


def step2(bb, kit, g):
    return _pipeline(bb, kit).step2(g).slp


def step3(bb, kit, g):
    return _pipeline(bb, kit).step3(g).slp


def recover_block(bb, kit, g):
    return _pipeline(bb, kit).recover_block(g)


def step4(bb, kit, g):
    return _pipeline(bb, kit).step4(g).slp


def rewrite(bb, g, kit=None):
    """SLP over the standard generators evaluating exactly to ``g``.

    Oracle calls for building the kit are included in the returned stats
    unless a prebuilt ``kit`` is passed.
    """
    before = bb.stats.snapshot()
    P = _pipeline(bb, kit)
    setup = (bb.stats - before).total
    slp, trace = P.rewrite(g)
    if setup:
        trace.insert(0, {"step": "setup", "calls": setup, "slp_len": 0})
    res = RewriteResult(slp, bb.stats.snapshot() - before, trace)
    res.telemetry = dict(P.telemetry)
    return res
