"""Black-box copies of Sp(2n, q).

A :class:`BBGroup` hides a natural matrix group behind a seeded scramble
(conjugation by a random invertible matrix ``c``).  Elements are opaque
:class:`BBElem` handles; the only element-level operations are ``mul``,
``inv``, ``eq`` and ``id``, each of which bumps a counter in
:class:`OracleStats` (``id`` is free).

:func:`shadow` undoes the scramble.  It exists for tests and harnesses only;
the rewriting code never imports it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import MixedGroups, Singular
from .spn import Matrix, standard_generators

__all__ = ["BBGroup", "BBElem", "OracleStats", "bb_wrap", "shadow"]


@dataclass
class OracleStats:
    mul_count: int = 0
    inv_count: int = 0
    eq_count: int = 0

    @property
    def total(self):
        return self.mul_count + self.inv_count + self.eq_count

    def snapshot(self):
        return OracleStats(self.mul_count, self.inv_count, self.eq_count)

    def __sub__(self, other):
        return OracleStats(self.mul_count - other.mul_count,
                           self.inv_count - other.inv_count,
                           self.eq_count - other.eq_count)

    def __str__(self):
        return f"mul={self.mul_count} inv={self.inv_count} eq={self.eq_count}"


class BBElem:
    """Opaque element handle."""

    __slots__ = ("_group", "_mat")

    def __init__(self, group, mat):
        self._group = group
        self._mat = mat

    def __repr__(self):
        return f"<BBElem of {self._group!r}>"

    # handles deliberately have no value semantics; use BBGroup.eq
    __hash__ = object.__hash__


def _random_invertible(field, dim, rng):
    while True:
        ents = [[rng.randrange(field.q) for _ in range(dim)] for _ in range(dim)]
        m = Matrix.from_entries(field, ents)
        try:
            return m, m.inv()
        except Singular:
            continue


class BBGroup:
    """Scrambled, oracle-only copy of Sp(2n, q) with its standard generators."""

    def __init__(self, params, scramble_seed=1):
        self.params = params
        self.scramble_seed = scramble_seed
        rng = random.Random(scramble_seed)
        self._c, self._cinv = _random_invertible(params.field, params.dim, rng)
        self.stats = OracleStats()
        self._id = self._wrap(Matrix.identity(params.field, params.dim))
        self.gens = tuple(self.embed(g) for g in standard_generators(params))

    def __repr__(self):
        return f"BBGroup(n={self.params.n}, q={self.params.q}, seed={self.scramble_seed})"

    def _wrap(self, m):
        return BBElem(self, m)

    def _unwrap(self, a):
        if not isinstance(a, BBElem) or a._group is not self:
            raise MixedGroups("handle does not belong to this group")
        return a._mat

    def embed(self, m):
        """Handle for the natural matrix ``m`` (input side of the harness)."""
        return self._wrap(self._cinv @ m @ self._c)

    # -- the oracles -------------------------------------------------------------

    def mul(self, a, b):
        r = self._unwrap(a) @ self._unwrap(b)
        self.stats.mul_count += 1
        return self._wrap(r)

    def inv(self, a):
        r = self._unwrap(a).inv()
        self.stats.inv_count += 1
        return self._wrap(r)

    def eq(self, a, b):
        r = self._unwrap(a) == self._unwrap(b)
        self.stats.eq_count += 1
        return r

    def id(self):
        return self._id

    def reset_stats(self):
        self.stats = OracleStats()


def bb_wrap(params, scramble_seed=1):
    return BBGroup(params, scramble_seed)


def shadow(elem):
    """Test-only: the natural matrix behind a handle (``c m c^-1``)."""
    g = elem._group
    return g._c @ elem._mat @ g._cinv


def raw_bytes(elem):
    """Test-only: the scrambled matrix bytes (what the 'bit string' looks like)."""
    return np.asarray(elem._mat._big).tobytes()
