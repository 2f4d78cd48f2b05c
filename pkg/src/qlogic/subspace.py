"""The lattice L(H) of subspaces of H = C^d.

Subspaces are kept in canonical form (the nonzero rows of the rref of any
spanning set), so two ``Subspace`` objects are equal iff they are the same
subspace. Lattice operations are memoised; values are immutable.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from typing import Iterable, Sequence

from .exactlin import ONE, ComplexRational, Vector, orth_complement_basis, row_space_basis

__all__ = [
    "Subspace",
    "span",
    "leq",
    "meet",
    "join",
    "meet_all",
    "join_all",
    "ortho",
    "distributivity_witness",
]


class Subspace:
    __slots__ = ("ambient_dim", "rows", "_hash")

    def __init__(self, ambient_dim: int, rows: tuple = ()):
        # `rows` must already be canonical; use span() otherwise.
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        self.ambient_dim = ambient_dim
        self.rows = rows
        self._hash = hash((ambient_dim, rows))

    @classmethod
    def zero(cls, d: int) -> "Subspace":
        return cls(d, ())

    @classmethod
    def full(cls, d: int) -> "Subspace":
        return cls(d, tuple(tuple(ONE if i == j else ComplexRational() for j in range(d))
                            for i in range(d)))

    @classmethod
    def coordinate(cls, d: int, indices: Iterable[int]) -> "Subspace":
        """span{e_k : k in indices} with zero-based k."""
        return span([Vector.basis(d, k) for k in indices], d)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> list[Vector]:
        return [Vector(r) for r in self.rows]

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return len(self.rows) == self.ambient_dim

    def contains_vector(self, v: Vector) -> bool:
        if v.dim != self.ambient_dim:
            raise ValueError(f"dimension mismatch: {v.dim} != {self.ambient_dim}")
        return _reduces_to_zero(self.rows, v.components)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._hash == other._hash and self.ambient_dim == other.ambient_dim \
            and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __le__(self, other: "Subspace") -> bool:
        return leq(self, other)

    def __lt__(self, other: "Subspace") -> bool:
        return self != other and leq(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return meet(self, other)

    def __or__(self, other: "Subspace") -> "Subspace":
        return join(self, other)

    def sort_key(self):
        return (self.dim, tuple((c.re, c.im) for r in self.rows for c in r))

    def __repr__(self):
        return f"Subspace({self})"

    def __str__(self):
        if not self.rows:
            return "zero"
        return "span(" + ", ".join(str(Vector(r)) for r in self.rows) + ")"


def span(vectors: Iterable[Vector], d: int) -> Subspace:
    return Subspace(d, row_space_basis(list(vectors), d))


def _reduces_to_zero(rows, comps) -> bool:
    v = list(comps)
    for r in rows:
        pc = next(k for k, x in enumerate(r) if x)
        f = v[pc]
        if f:
            v = [a - f * b if b else a for a, b in zip(v, r)]
    return not any(v)


def _check(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"dimension mismatch: {a.ambient_dim} != {b.ambient_dim}")


@lru_cache(maxsize=1 << 16)
def _leq(a: Subspace, b: Subspace) -> bool:
    if a.dim > b.dim:
        return False
    return all(_reduces_to_zero(b.rows, r) for r in a.rows)


def leq(a: Subspace, b: Subspace) -> bool:
    """a is a subspace of b."""
    _check(a, b)
    if a is b or not a.rows or b.is_full():
        return True
    return _leq(a, b)


@lru_cache(maxsize=1 << 16)
def _join(a: Subspace, b: Subspace) -> Subspace:
    return Subspace(a.ambient_dim, row_space_basis(a.basis + b.basis, a.ambient_dim))


def join(a: Subspace, b: Subspace) -> Subspace:
    _check(a, b)
    if leq(a, b):
        return b
    if leq(b, a):
        return a
    return _join(a, b)


@lru_cache(maxsize=1 << 16)
def ortho(a: Subspace) -> Subspace:
    """Orthocomplement: all vectors orthogonal to every vector of ``a``."""
    return span(orth_complement_basis(a.basis, a.ambient_dim), a.ambient_dim)


@lru_cache(maxsize=1 << 16)
def _meet(a: Subspace, b: Subspace) -> Subspace:
    return ortho(join(ortho(a), ortho(b)))


def meet(a: Subspace, b: Subspace) -> Subspace:
    _check(a, b)
    if leq(a, b):
        return a
    if leq(b, a):
        return b
    return _meet(a, b)


def meet_all(subspaces: Sequence[Subspace], d: int | None = None) -> Subspace:
    if not subspaces:
        if d is None:
            raise ValueError("empty meet needs an ambient dimension")
        return Subspace.full(d)
    return reduce(meet, subspaces)


def join_all(subspaces: Sequence[Subspace], d: int | None = None) -> Subspace:
    if not subspaces:
        if d is None:
            raise ValueError("empty join needs an ambient dimension")
        return Subspace.zero(d)
    return reduce(join, subspaces)


def distributivity_witness(d: int) -> tuple[Subspace, Subspace, Subspace]:
    """Three subspaces of C^d on which both distributive laws fail.

    Uses span{e1}, span{e2}, span{e1+e2}: the first meets the join of the
    other two (the e1-e2 plane) in itself, but meets each of them in 0.
    """
    if d < 2:
        raise ValueError("L(C^1) is a chain, hence distributive")
    e1, e2 = Vector.basis(d, 0), Vector.basis(d, 1)
    k1 = span([e1], d)
    k2 = span([e2], d)
    k3 = span([e1 + e2], d)
    lhs = meet(k1, join(k2, k3))
    rhs = join(meet(k1, k2), meet(k1, k3))
    if lhs == rhs:  # pragma: no cover - would mean the lattice code is broken
        raise AssertionError("distributivity witness failed to separate the sides")
    return k1, k2, k3
