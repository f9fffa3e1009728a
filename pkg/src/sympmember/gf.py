"""Exact arithmetic in GF(p^k), p odd.

Elements are identified with their canonical integer encoding
``sum(coeffs[i] * p**i)`` (coefficients least-degree first), so every
element of GF(q) is an int in ``[0, q)``.  The integer-level functions on
:class:`FieldSpec` are what the matrix layer uses; :class:`FieldElem` wraps
them for scalar work.

The modulus and the primitive element are chosen deterministically (smallest
irreducible monic polynomial by coefficient tuple ``(c0, ..., c_{k-1})``,
smallest primitive element by encoding), so that every downstream
computation is reproducible.
"""

from __future__ import annotations

import itertools
import re

import numpy as np
import sympy

from .errors import (
    DivisionByZero,
    DlogOfZero,
    EvenCharacteristic,
    FormatError,
    MixedFields,
    NotPrime,
    ReducibleModulus,
)

__all__ = ["FieldSpec", "FieldElem", "field_make", "parse_field_spec"]


def _poly_mulmod(a, b, modulus, p):
    """Multiply coefficient lists a, b modulo the monic ``modulus``."""
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * modulus[i]) % p
    return prod[:k]


def _is_irreducible(modulus, p):
    if len(modulus) == 2:
        return True
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(modulus)), x, modulus=p).is_irreducible


class FieldSpec:
    """GF(p^k) with a fixed modulus and primitive element ``omega``.

    Immutable after construction.  Two specs compare equal iff they have the
    same ``(p, k, modulus)``.
    """

    def __init__(self, p, k, modulus):
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.q = p**k
        q = self.q

        self._pows = np.array([p**i for i in range(k)], dtype=np.int64)
        digits = np.zeros((q, k), dtype=np.int64)
        for v in range(q):
            r = v
            for i in range(k):
                digits[v, i] = r % p
                r //= p
        self.digits = digits
        self.digits.flags.writeable = False

        self.omega_int = self._find_primitive()
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        w = 1
        for i in range(q - 1):
            exp[i] = w
            log[w] = i
            w = self._slow_mul(w, self.omega_int)
        self._exp = exp
        self._log = log
        self._neg = np.array([self._encode_digits((-digits[v]) % p) for v in range(q)],
                             dtype=np.int64)

        # regular representation: row i of reg[a] = digits of a * x^i
        reg = np.zeros((q, k, k), dtype=np.int64)
        for a in range(q):
            for i in range(k):
                reg[a, i] = digits[self.mul(a, p**i)]
        self.reg = reg
        self.reg.flags.writeable = False

    # -- construction helpers -------------------------------------------

    def _encode_digits(self, d):
        return int(np.dot(d, self._pows))

    def _slow_mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        c = _poly_mulmod(list(self.digits[a]), list(self.digits[b]), self.modulus, self.p)
        return self._encode_digits(np.array(c, dtype=np.int64))

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _find_primitive(self):
        n = self.q - 1
        primes = list(sympy.factorint(n))
        for cand in range(1, self.q):
            if self._slow_pow(cand, n) != 1:
                continue
            if all(self._slow_pow(cand, n // r) != 1 for r in primes):
                return cand
        raise AssertionError("no primitive element found")

    # -- integer-level arithmetic -----------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        return self._encode_digits((self.digits[a] + self.digits[b]) % self.p)

    def neg(self, a):
        return int(self._neg[a])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero in GF(%d)" % self.q)
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def omega_pow(self, e):
        """omega**e for any integer e (table lookup)."""
        return int(self._exp[e % (self.q - 1)])

    def dlog(self, a):
        """Exponent ``k`` in ``[0, q-1)`` with omega**k == a.

        Deterministic exhaustive scan from k = 0; fine at desk scale.
        """
        a = int(a)
        if a == 0:
            raise DlogOfZero("dlog of zero")
        w = 1
        for k in range(self.q - 1):
            if w == a:
                return k
            w = self.mul(w, self.omega_int)
        raise AssertionError("omega is not primitive")

    def from_int(self, n):
        """Image of the integer n under Z -> GF(q)."""
        return n % self.p

    def sqrt(self, a):
        """Smallest-encoding square root of a, or None if a is a non-square."""
        for r in range(self.q):
            if self.mul(r, r) == a:
                return r
        return None

    # -- element-level API -------------------------------------------------

    def __call__(self, value):
        return FieldElem(self, value)

    @property
    def zero(self):
        return FieldElem(self, 0)

    @property
    def one(self):
        return FieldElem(self, 1)

    @property
    def omega(self):
        return FieldElem(self, self.omega_int)

    def elements(self):
        """All elements in canonical enumeration order."""
        return [FieldElem(self, v) for v in range(self.q)]

    # -- identity ------------------------------------------------------------

    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec({self})"

    def __str__(self):
        return f"p={self.p} k={self.k} mod={','.join(map(str, self.modulus))}"


def field_make(p, k=1, modulus=None):
    """Build GF(p^k).

    ``modulus`` is the coefficient list ``(c0, ..., ck)`` of a monic
    irreducible polynomial; if omitted the smallest one in lexicographic
    ``(c0, ..., c_{k-1})`` order is used.
    """
    p, k = int(p), int(k)
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if p < 2 or not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        for low in itertools.product(range(p), repeat=k):
            cand = tuple(low) + (1,)
            if _is_irreducible(cand, p):
                modulus = cand
                break
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {k}")
        if any(not 0 <= c < p for c in modulus):
            raise ReducibleModulus("modulus coefficients must lie in [0, p)")
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
    return FieldSpec(p, k, modulus)


_SPEC_RE = re.compile(r"^p=(\d+)\s+k=(\d+)\s+mod=([\d,]+)$")


def parse_field_spec(text):
    """Inverse of ``str(FieldSpec)``."""
    m = _SPEC_RE.match(text.strip())
    if not m:
        raise FormatError(f"bad field spec: {text!r}")
    p, k = int(m.group(1)), int(m.group(2))
    modulus = [int(c) for c in m.group(3).split(",")]
    return field_make(p, k, modulus)


class FieldElem:
    """An element of a :class:`FieldSpec`.

    Plain ints are accepted as operands and mean their image under
    Z -> GF(q) (so ``2 * a`` doubles ``a``).  Use ``spec(v)`` to build an
    element from its canonical encoding.
    """

    __slots__ = ("spec", "value")

    def __init__(self, spec, value):
        value = int(value)
        if not 0 <= value < spec.q:
            raise ValueError(f"{value} is not a valid encoding in GF({spec.q})")
        self.spec = spec
        self.value = value

    @property
    def coeffs(self):
        return tuple(int(c) for c in self.spec.digits[self.value])

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.spec is not self.spec and other.spec != self.spec:
                raise MixedFields("operands live in different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.spec.from_int(int(other))
        return NotImplemented

    def _wrap(self, v):
        return FieldElem(self.spec, v)

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.spec.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.spec.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, e):
        return self._wrap(self.spec.pow(self.value, int(e)))

    def inv(self):
        return self._wrap(self.spec.inv(self.value))

    def dlog(self):
        return self.spec.dlog(self.value)

    def is_zero(self):
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    __index__ = __int__

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.spec.from_int(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.q, self.value))

    def __repr__(self):
        return f"GF({self.spec.q})({self.value})"

    def __str__(self):
        return str(self.value)
