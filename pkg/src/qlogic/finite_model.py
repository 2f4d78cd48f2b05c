"""Finite ray universes: an independent model for checking the implication.

Replace R(H) by a finite set U of rays. Subsets of U are bitmasks, the
pseudo-negation of S is the set of rays of U orthogonal to every ray of S,
and the implication can be evaluated literally, atom by atom:

    S1 -> S2 = top                                   if S1 is empty
             = meet over s in S1 of ~~(~s | (s & S2)) otherwise

This module never calls into the ray-set algebra.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .exactlin import ComplexRational, Vector, inner_product
from .rayset import Ray

__all__ = ["RayUniverse", "default_universe"]

_ENTRIES = (0, 1, -1, (0, 1), (0, -1))  # 0, 1, -1, i, -i


def _candidate_rays(d: int) -> list[Ray]:
    vals = [ComplexRational(*e) if isinstance(e, tuple) else ComplexRational(e) for e in _ENTRIES]
    seen = {}
    for comps in product(vals, repeat=d):
        v = Vector(comps)
        if v.is_zero():
            continue
        r = Ray(v)
        seen.setdefault(r, None)
    return list(seen)


def default_universe(d: int, size: int = 12) -> "RayUniverse":
    """The first ``size`` rays (in a fixed order) with components in {0, +-1, +-i}.

    The order puts the standard basis first, then rays with few nonzero
    components, so small universes still contain orthogonal pairs.
    """
    rays = _candidate_rays(d)
    rays.sort(key=lambda r: (sum(1 for c in r.representative if c),
                             [(-float(c.re), -float(c.im)) for c in r.representative]))
    return RayUniverse(rays[:size])


class RayUniverse:
    def __init__(self, rays):
        rays = list(rays)
        if not rays:
            raise ValueError("universe must be nonempty")
        if len(rays) > 16:
            raise ValueError("universe too large for exhaustive tables")
        self.rays = rays
        self.n = len(rays)
        self.full = (1 << self.n) - 1
        self.orth = [
            sum(1 << j for j, v in enumerate(rays)
                if not inner_product(u.representative, v.representative))
            for u in rays
        ]
        self._neg = self._neg_table()

    def _neg_table(self) -> np.ndarray:
        neg = np.empty(1 << self.n, dtype=np.int64)
        neg[0] = self.full
        for b in range(self.n):
            lo = 1 << b
            neg[lo:2 * lo] = neg[:lo] & self.orth[b]
        return neg

    def neg(self, s: int) -> int:
        return int(self._neg[s])

    def implies_closed(self, s1: int, s2: int) -> int:
        return self.neg(s1 & ~s2 & self.full)

    def implies_literal(self, s1: int, s2: int) -> int:
        if s1 == 0:
            return self.full
        out = self.full
        for k in range(self.n):
            if s1 >> k & 1:
                s = 1 << k
                out &= self.neg(self.neg(self.neg(s) | (s & s2)))
        return out

    def exhaustive_discrepancies(self, limit: int = 10):
        """Compare both forms on every pair (S1, S2); return (pairs, mismatches)."""
        neg = self._neg
        size = 1 << self.n
        s1 = np.arange(size, dtype=np.int64)
        bad = []
        checked = 0
        for s2 in range(size):
            factors = [int(neg[neg[neg[1 << k] | ((1 << k) & s2)]]) for k in range(self.n)]
            lit = np.empty(size, dtype=np.int64)
            lit[0] = self.full
            for b in range(self.n):
                lo = 1 << b
                lit[lo:2 * lo] = lit[:lo] & factors[b]
            # the empty meet is already top, matching the S1 = bot clause
            closed = neg[s1 & (~s2 & self.full)]
            diff = np.flatnonzero(lit != closed)
            checked += size
            for k in diff[: max(0, limit - len(bad))]:
                bad.append((int(k), s2))
            if len(diff) and len(bad) >= limit:
                break
        return checked, bad
