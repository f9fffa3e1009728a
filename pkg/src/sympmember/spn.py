"""The natural representation of Sp(2n, q).

Conventions: row vectors, right action.  Row ``i`` of a matrix is the image
of basis vector ``i``; the basis is ordered e_1, ..., e_n, f_n, ..., f_1,
so (1-based) e_i is index ``i`` and f_i is index ``2n + 1 - i``.  The
alternating form has <e_i, f_i> = 1, i.e. ``J[i, 2n+1-i] = 1`` for
``i <= n`` and ``-1`` for ``i > n``.  A product ``g @ h`` acts as "first g,
then h".

Matrices over GF(p^k) are stored as (2n*k) x (2n*k) block matrices over
GF(p) via the regular representation of the field, so multiplication,
inversion and equality reduce to integer linear algebra mod p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, FormatError, MixedFields, Singular
from .gf import FieldElem, FieldSpec, field_make

__all__ = [
    "GroupParams",
    "Matrix",
    "GenSet",
    "GEN_NAMES",
    "e_index",
    "f_index",
    "form_matrix",
    "standard_generators",
    "is_symplectic",
    "mat_mul",
    "mat_inv",
    "mat_eq",
    "row",
    "random_element",
    "format_matrix",
    "parse_matrix",
    "parse_matrices",
]

GEN_NAMES = ("s", "t", "delta", "u", "v", "x")


@dataclass(frozen=True)
class GroupParams:
    n: int
    field: FieldSpec

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank n must be >= 1")
        if self.field.p % 2 == 0:
            raise ValueError("odd characteristic required")

    @property
    def q(self):
        return self.field.q

    @property
    def dim(self):
        return 2 * self.n


def e_index(i, n):
    """0-based position of e_i (i is 1-based)."""
    return i - 1


def f_index(i, n):
    """0-based position of f_i (i is 1-based)."""
    return 2 * n - i


# -- GF(p) linear algebra on the embedded block matrices ----------------------


def _inv_mod_p(a, p):
    """Gauss-Jordan inverse of an integer matrix mod p."""
    m = a.shape[0]
    aug = np.concatenate([a % p, np.eye(m, dtype=np.int64)], axis=1)
    for col in range(m):
        piv = next((r for r in range(col, m) if aug[r, col]), None)
        if piv is None:
            raise Singular("matrix is singular")
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] = aug[col] * pow(int(aug[col, col]), -1, p) % p
        factors = aug[:, col].copy()
        factors[col] = 0
        aug = (aug - np.outer(factors, aug[col])) % p
    return aug[:, m:]


class Matrix:
    """Immutable square matrix over GF(q)."""

    __slots__ = ("field", "dim", "_big", "_key")

    def __init__(self, field, big, dim):
        self.field = field
        self.dim = dim
        big.flags.writeable = False
        self._big = big
        self._key = None

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_entries(cls, field, entries):
        """Build from a 2-D array-like of canonical encodings or FieldElems."""
        ints = np.array([[int(v) for v in r] for r in entries], dtype=np.int64)
        if ints.ndim != 2 or ints.shape[0] != ints.shape[1]:
            raise DimensionMismatch("matrix must be square")
        if ints.size and (ints.min() < 0 or ints.max() >= field.q):
            raise FormatError("entry out of range")
        d, k = ints.shape[0], field.k
        if k == 1:
            big = ints.copy()
        else:
            big = field.reg[ints].transpose(0, 2, 1, 3).reshape(d * k, d * k).copy()
        return cls(field, big, d)

    @classmethod
    def identity(cls, field, dim):
        return cls(field, np.eye(dim * field.k, dtype=np.int64), dim)

    @classmethod
    def scalar(cls, field, dim, value):
        return cls.from_entries(field, np.diag([int(value)] * dim))

    @property
    def entries(self):
        """(dim, dim) int array of canonical encodings."""
        d, k = self.dim, self.field.k
        if k == 1:
            return self._big.copy()
        digits = self._big.reshape(d, k, d, k)[:, 0, :, :]
        return digits @ self.field._pows

    def __getitem__(self, ij):
        i, j = ij
        k = self.field.k
        if k == 1:
            return FieldElem(self.field, int(self._big[i, j]))
        digits = self._big[i * k, j * k:(j + 1) * k]
        return FieldElem(self.field, int(digits @ self.field._pows))

    def row(self, i):
        """Row i (0-based) as a list of FieldElems."""
        return [self[i, j] for j in range(self.dim)]

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise MixedFields("matrices over different fields")
        if self.dim != other.dim:
            raise DimensionMismatch(f"dims {self.dim} and {other.dim}")

    def __matmul__(self, other):
        self._check(other)
        return Matrix(self.field, (self._big @ other._big) % self.field.p, self.dim)

    def inv(self):
        return Matrix(self.field, _inv_mod_p(self._big, self.field.p), self.dim)

    def transpose(self):
        return Matrix.from_entries(self.field, self.entries.T)

    def scale(self, c):
        c = int(c)
        return Matrix.from_entries(
            self.field, [[self.field.mul(c, int(v)) for v in r] for r in self.entries])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and np.array_equal(self._big, other._big))

    def __hash__(self):
        if self._key is None:
            self._key = hash((self.dim, self.field.q, self._big.tobytes()))
        return self._key

    def is_identity(self):
        return np.array_equal(self._big, np.eye(self._big.shape[0], dtype=np.int64))

    def block(self, lo, hi):
        """Principal submatrix on 0-based positions lo..hi-1."""
        return Matrix.from_entries(self.field, self.entries[lo:hi, lo:hi])

    def __repr__(self):
        return f"Matrix(GF({self.field.q}), {self.entries.tolist()})"


def mat_mul(a, b):
    return a @ b


def mat_inv(a):
    return a.inv()


def mat_eq(a, b):
    return a == b


def row(m, i):
    """Row ``i`` (1-based) of ``m``."""
    return m.row(i - 1)


# -- the form and the generators ------------------------------------------------


def form_matrix(n, field=None):
    """Gram matrix J of the symplectic form (over GF(3) if no field given)."""
    field = field or field_make(3)
    d = 2 * n
    ents = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        ents[i, d - 1 - i] = 1 if i < n else field.neg(1)
    return Matrix.from_entries(field, ents)


def is_symplectic(m, params):
    """True iff ``m J m^T = J``."""
    if m.dim != params.dim:
        raise DimensionMismatch(f"expected dim {params.dim}, got {m.dim}")
    j = form_matrix(params.n, params.field)
    return m @ j @ m.transpose() == j


@dataclass(frozen=True)
class GenSet:
    s: Matrix
    t: Matrix
    delta: Matrix
    u: Matrix
    v: Matrix
    x: Matrix

    def as_tuple(self):
        return (self.s, self.t, self.delta, self.u, self.v, self.x)

    def __iter__(self):
        return iter(self.as_tuple())

    def __getitem__(self, i):
        return self.as_tuple()[i]


def _from_images(params, images):
    """Matrix sending basis index i to the vector images[i] (dict pos->coef);
    unlisted basis vectors are fixed."""
    F, d = params.field, params.dim
    ents = np.eye(d, dtype=np.int64)
    for i, img in images.items():
        ents[i] = 0
        for j, c in img.items():
            ents[i, j] = F.add(int(ents[i, j]), c)
    return Matrix.from_entries(F, ents)


def standard_generators(params):
    """The standard generators (s, t, delta, u, v, x) as natural matrices.

    For n = 1 the generators u, v, x are the identity.
    """
    n, F = params.n, params.field
    e = lambda i: e_index(i, n)  # noqa: E731
    f = lambda i: f_index(i, n)  # noqa: E731
    minus1, w = F.neg(1), F.omega_int

    s = _from_images(params, {e(1): {f(1): 1}, f(1): {e(1): minus1}})
    t = _from_images(params, {e(1): {e(1): 1, f(1): 1}})
    delta = _from_images(params, {e(1): {e(1): w}, f(1): {f(1): F.inv(w)}})
    if n == 1:
        ident = Matrix.identity(F, 2)
        return GenSet(s, t, delta, ident, ident, ident)
    u = _from_images(params, {e(1): {e(2): 1}, e(2): {e(1): 1},
                              f(1): {f(2): 1}, f(2): {f(1): 1}})
    cyc = {}
    for i in range(1, n + 1):
        j = i % n + 1
        cyc[e(i)] = {e(j): 1}
        cyc[f(i)] = {f(j): 1}
    v = _from_images(params, cyc)
    # f_1 -> f_1 + e_2, f_2 -> f_2 + e_1 (a short-root element; see README)
    x = _from_images(params, {f(1): {f(1): 1, e(2): 1}, f(2): {f(2): 1, e(1): 1}})
    return GenSet(s, t, delta, u, v, x)


# -- random elements -----------------------------------------------------------


def random_element(params, gens, word_length, seed):
    """Product of ``word_length`` random generators or inverses.

    Returns ``(matrix, slp)``; the SLP records the word.  For n = 1 only
    s, t, delta are drawn.
    """
    from .slp import slp_word

    if word_length < 1:
        raise ValueError("word_length must be >= 1")
    rng = random.Random(seed)
    slots = range(3) if params.n == 1 else range(6)
    word = [(rng.choice(slots), rng.choice((1, -1))) for _ in range(word_length)]
    g = Matrix.identity(params.field, params.dim)
    invs = {}
    for slot, sign in word:
        m = gens[slot]
        if sign < 0:
            if slot not in invs:
                invs[slot] = m.inv()
            m = invs[slot]
        g = g @ m
    return g, slp_word(word)


# -- file format -----------------------------------------------------------------


def format_matrix(m, params):
    lines = [f"SPN n={params.n} {params.field}"]
    for r in m.entries:
        lines.append(" ".join(str(int(v)) for v in r))
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    """Parse the SPN text format; returns ``(matrix, params)``."""
    from .gf import parse_field_spec

    lines = [ln for ln in text.strip().splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("SPN "):
        raise FormatError("missing SPN header")
    head = lines[0].split(None, 2)
    if len(head) != 3 or not head[1].startswith("n="):
        raise FormatError(f"bad header: {lines[0]!r}")
    try:
        n = int(head[1][2:])
    except ValueError:
        raise FormatError(f"bad rank in header: {head[1]!r}") from None
    if n < 1:
        raise FormatError("rank must be >= 1")
    field = parse_field_spec(head[2])
    d = 2 * n
    body = lines[1:]
    if len(body) != d:
        raise FormatError(f"expected {d} rows, got {len(body)}")
    ents = []
    for i, ln in enumerate(body, start=2):
        toks = ln.split()
        if len(toks) != d:
            raise FormatError(f"line {i}: expected {d} entries, got {len(toks)}")
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise FormatError(f"line {i}: non-integer entry") from None
        if any(not 0 <= v < field.q for v in vals):
            raise FormatError(f"line {i}: entry out of range [0, {field.q})")
        ents.append(vals)
    return Matrix.from_entries(field, ents), GroupParams(n, field)


def parse_matrices(text):
    """Parse a stream of SPN blocks (e.g. the output of ``gens``)."""
    blocks, cur = [], []
    for ln in text.splitlines():
        if ln.startswith("SPN ") and cur:
            blocks.append("\n".join(cur))
            cur = []
        if ln.strip() and not ln.lstrip().startswith("#"):
            cur.append(ln)
    if cur:
        blocks.append("\n".join(cur))
    return [parse_matrix(b) for b in blocks]
