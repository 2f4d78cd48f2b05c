"""Sets of rays of C^d as finite unions of cells.

A cell ``K \\ {h1, ..., hm}`` is the set of rays [psi] with psi in K but in
none of the holes h_j. Finite unions of cells are closed under union,
intersection, complement, pseudo-negation and the weak-Heyting implication.

Decision procedures rest on one fact: over an infinite field a subspace is
never a finite union of proper subspaces. Given a meet-closed family F of
subspaces (containing 0 and H), every ray lies in a smallest member of F,
so the sets

    A_K = r(K) minus the union of r(K') over K' in F, K' < K     (K != 0)

partition the rays and are all nonempty. Every ray set whose cells use only
members of F is a union of some of these A_K, uniquely. Boolean operations
therefore reduce to set operations on subsets of F, and equality is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exactlin import ONE, Vector
from .subspace import Subspace, join_all, leq, meet, ortho, span

__all__ = [
    "Ray",
    "Cell",
    "RaySet",
    "embed_r",
    "contains",
    "union",
    "intersect",
    "complement",
    "difference",
    "is_empty",
    "equals",
    "subset",
    "span_of",
    "pseudo_neg",
    "implies",
    "implication_factor",
    "f_contains",
    "g_of_generators",
]


class Ray:
    """[psi], stored as psi scaled so its first nonzero component is 1."""

    __slots__ = ("representative",)

    def __init__(self, v: Vector):
        if v.is_zero():
            raise ValueError("the zero vector does not determine a ray")
        lead = next(c for c in v.components if c)
        self.representative = v if lead == ONE else v.scale(ONE / lead)

    @property
    def ambient_dim(self) -> int:
        return self.representative.dim

    def line(self) -> Subspace:
        return span([self.representative], self.ambient_dim)

    def __eq__(self, other):
        if isinstance(other, Ray):
            return self.representative == other.representative
        return NotImplemented

    def __hash__(self):
        return hash(self.representative)

    def __repr__(self):
        return f"Ray{self.representative}"


@dataclass(frozen=True)
class Cell:
    base: Subspace
    holes: tuple[Subspace, ...] = ()

    def is_empty(self) -> bool:
        return self.base.is_zero() or any(leq(self.base, h) for h in self.holes)

    def contains_vector(self, v: Vector) -> bool:
        return self.base.contains_vector(v) and not any(h.contains_vector(v) for h in self.holes)

    def __str__(self):
        if not self.holes:
            return str(self.base)
        return f"{self.base} \\ {{ " + ", ".join(str(h) for h in self.holes) + " }"


def _normalize_cell(base: Subspace, holes: Iterable[Subspace]) -> Cell | None:
    hs = []
    for h in holes:
        h = meet(h, base)
        if h == base:
            return None
        if not h.is_zero():
            hs.append(h)
    if base.is_zero():
        return None
    hs = set(hs)
    maximal = [h for h in hs if not any(h != g and leq(h, g) for g in hs)]
    return Cell(base, tuple(sorted(maximal, key=Subspace.sort_key)))


class RaySet:
    """An element of P(R(C^d)) given as a union of cells.

    The representation is not unique; compare with ``equals`` (or ``==``,
    which is semantic). Operators: ``|`` union, ``&`` intersection,
    ``~`` pseudo-negation, ``-`` set difference.
    """

    __slots__ = ("ambient_dim", "cells")

    def __init__(self, ambient_dim: int, cells: Iterable[Cell] = ()):
        out = []
        for c in cells:
            if c.base.ambient_dim != ambient_dim or any(h.ambient_dim != ambient_dim for h in c.holes):
                raise ValueError("cell dimension does not match the ray set")
            n = _normalize_cell(c.base, c.holes)
            if n is not None:
                out.append(n)
        self.ambient_dim = ambient_dim
        self.cells = tuple(out)

    @classmethod
    def empty(cls, d: int) -> "RaySet":
        return cls(d)

    @classmethod
    def top(cls, d: int) -> "RaySet":
        return cls(d, [Cell(Subspace.full(d))])

    @classmethod
    def cell(cls, base: Subspace, holes: Sequence[Subspace] = ()) -> "RaySet":
        return cls(base.ambient_dim, [Cell(base, tuple(holes))])

    @classmethod
    def of_ray(cls, ray: Ray) -> "RaySet":
        return embed_r(ray.line())

    def subspaces(self) -> frozenset[Subspace]:
        out = set()
        for c in self.cells:
            out.add(c.base)
            out.update(c.holes)
        return frozenset(out)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return pseudo_neg(self)

    def __eq__(self, other):
        if not isinstance(other, RaySet):
            return NotImplemented
        return equals(self, other)

    def __le__(self, other):
        return subset(self, other)

    __hash__ = None

    def __repr__(self):
        return f"RaySet(dim={self.ambient_dim}, {self})"

    def __str__(self):
        if not self.cells:
            return "empty"
        return " | ".join(str(c) for c in self.cells)


def _check(*sets: RaySet):
    d = sets[0].ambient_dim
    for s in sets[1:]:
        if s.ambient_dim != d:
            raise ValueError(f"dimension mismatch: {s.ambient_dim} != {d}")


@lru_cache(maxsize=4096)
def _meet_closure(generators: frozenset[Subspace], d: int) -> tuple[Subspace, ...]:
    fam = set(generators)
    fam.add(Subspace.zero(d))
    fam.add(Subspace.full(d))
    frontier = list(fam)
    while frontier:
        new = []
        current = list(fam)
        for a in frontier:
            for b in current:
                m = meet(a, b)
                if m not in fam:
                    fam.add(m)
                    new.append(m)
        frontier = new
    # largest first, so covering cells are emitted before their sub-atoms
    return tuple(sorted(fam, key=lambda s: (-s.dim, s.sort_key())))


def _atoms(s: RaySet, family: Sequence[Subspace]) -> frozenset[Subspace]:
    out = set()
    for k in family:
        if k.is_zero():
            continue
        for c in s.cells:
            if leq(k, c.base) and not any(leq(k, h) for h in c.holes):
                out.add(k)
                break
    return frozenset(out)


def _from_atoms(atoms: frozenset[Subspace], family: Sequence[Subspace], d: int) -> RaySet:
    cells = []
    covered = set()
    for k in family:  # decreasing dimension
        if k not in atoms or k in covered:
            continue
        below = [m for m in family if m != k and leq(m, k)]
        outside = [m for m in below if m not in atoms and not m.is_zero()]
        holes = [h for h in outside if not any(h != g and leq(h, g) for g in outside)]
        cells.append(Cell(k, tuple(sorted(holes, key=Subspace.sort_key))))
        covered.add(k)
        covered.update(m for m in below if not any(leq(m, h) for h in holes))
    res = RaySet.__new__(RaySet)
    res.ambient_dim = d
    res.cells = tuple(sorted(cells, key=lambda c: c.base.sort_key()))
    return res


def _common(*sets: RaySet):
    _check(*sets)
    d = sets[0].ambient_dim
    gens = frozenset().union(*(s.subspaces() for s in sets))
    fam = _meet_closure(gens, d)
    return d, fam, [_atoms(s, fam) for s in sets]


def _universe(fam) -> frozenset[Subspace]:
    return frozenset(k for k in fam if not k.is_zero())


def embed_r(k: Subspace) -> RaySet:
    """r(K): the rays lying in K. r(0) is empty."""
    return RaySet(k.ambient_dim, [Cell(k)])


def contains(s: RaySet, ray: Ray) -> bool:
    if ray.ambient_dim != s.ambient_dim:
        raise ValueError(f"dimension mismatch: {ray.ambient_dim} != {s.ambient_dim}")
    return any(c.contains_vector(ray.representative) for c in s.cells)


def union(s1: RaySet, s2: RaySet) -> RaySet:
    d, fam, (a1, a2) = _common(s1, s2)
    return _from_atoms(a1 | a2, fam, d)


def intersect(s1: RaySet, s2: RaySet) -> RaySet:
    d, fam, (a1, a2) = _common(s1, s2)
    return _from_atoms(a1 & a2, fam, d)


def difference(s1: RaySet, s2: RaySet) -> RaySet:
    d, fam, (a1, a2) = _common(s1, s2)
    return _from_atoms(a1 - a2, fam, d)


def complement(s: RaySet) -> RaySet:
    """Classical set complement in R(H)."""
    d, fam, (a,) = _common(s)
    return _from_atoms(_universe(fam) - a, fam, d)


def is_empty(s: RaySet) -> bool:
    return all(c.is_empty() for c in s.cells)


def equals(s1: RaySet, s2: RaySet) -> bool:
    """Semantic equality: the symmetric difference has no rays."""
    _d, _fam, (a1, a2) = _common(s1, s2)
    return a1 == a2


def subset(s1: RaySet, s2: RaySet) -> bool:
    _d, _fam, (a1, a2) = _common(s1, s2)
    return a1 <= a2


def span_of(s: RaySet) -> Subspace:
    """Smallest subspace containing every ray of ``s``."""
    return join_all([c.base for c in s.cells if not c.is_empty()], s.ambient_dim)


def pseudo_neg(s: RaySet) -> RaySet:
    """~S: rays orthogonal to every ray of S; ~empty is everything."""
    return embed_r(ortho(span_of(s)))


def implies(s1: RaySet, s2: RaySet) -> RaySet:
    """Weak-Heyting implication, in the closed form ~(S1 minus S2).

    The atom-by-atom definition takes the meet over every ray s <= S1 of
    ~~(~s | (s & S2)). That factor is everything when s <= S2 and ~s when
    not; the meet of ~s over the rays of S1 minus S2 is ~(S1 minus S2).
    """
    return pseudo_neg(difference(s1, s2))


def implication_factor(ray: Ray, s2: RaySet) -> RaySet:
    """~~(~s | (s & S2)) for the atom s = {ray}, computed literally."""
    s = RaySet.of_ray(ray)
    return pseudo_neg(pseudo_neg(union(pseudo_neg(s), intersect(s, s2))))


def f_contains(s: RaySet, k: Subspace) -> bool:
    """K belongs to the distributive ideal f(S): every ray of K is in S."""
    _check(s, embed_r(k))
    return is_empty(difference(embed_r(k), s))


def g_of_generators(ks: Sequence[Subspace], d: int | None = None) -> RaySet:
    """g applied to the ideal generated by ``ks``: the union of their rays."""
    if not ks:
        if d is None:
            raise ValueError("empty generator list needs an ambient dimension")
        return RaySet.empty(d)
    d = ks[0].ambient_dim
    out = RaySet.empty(d)
    for k in ks:
        out = union(out, embed_r(k))
    return out
