"""Distributive-ideal completion DI(L) of explicit finite bounded lattices.

A subset I of L is a distributive ideal when it is nonempty, downward
closed, and contains the join of every nonempty X within it whose join
distributes over meets: (V X) ^ y == V (x ^ y) for all y in L.

Subsets of the lattice are int bitmasks (bit k = element k).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "FiniteLattice",
    "IdealSet",
    "LatticeError",
    "DEFAULT_CAP",
    "mo_lattice",
    "boolean_lattice",
    "builtin_lattice",
    "load_lattice",
    "parse_lattice",
    "is_distributive_join",
    "is_distributive_ideal",
    "enumerate_di",
    "down",
    "di_meet",
    "di_join",
    "rpc",
    "di_neg",
    "di_complement",
]

DEFAULT_CAP = 16


class LatticeError(ValueError):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


class FiniteLattice:
    """A finite bounded lattice given by its order relation.

    The constructor computes meet/join tables and raises ``LatticeError`` if
    ``leq`` is not a partial order or some pair lacks a glb or lub.
    """

    def __init__(self, leq, labels: Sequence[str] | None = None,
                 ortho: Sequence[int] | None = None):
        rel = np.asarray(leq, dtype=bool)
        n = rel.shape[0]
        if rel.shape != (n, n) or n == 0:
            raise LatticeError("order relation must be a nonempty square matrix")
        if not rel.diagonal().all():
            raise LatticeError("order is not reflexive")
        if (rel & rel.T & ~np.eye(n, dtype=bool)).any():
            raise LatticeError("order is not antisymmetric")
        rel_i = rel.astype(np.int64)
        if ((rel_i @ rel_i > 0) & ~rel).any():
            raise LatticeError("order is not transitive")
        self.n = n
        self.leq = rel
        self.meet = np.empty((n, n), dtype=np.int64)
        self.join = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                self.meet[i, j] = self._extremum(rel[:, i] & rel[:, j], lower=True, pair=(i, j))
                self.join[i, j] = self._extremum(rel[i, :] & rel[j, :], lower=False, pair=(i, j))
        bottoms = [i for i in range(n) if rel[i, :].all()]
        tops = [i for i in range(n) if rel[:, i].all()]
        if not bottoms or not tops:
            raise LatticeError("lattice is not bounded")
        self.bottom, self.top = bottoms[0], tops[0]
        self.labels = list(labels) if labels is not None else [str(k) for k in range(n)]
        if len(self.labels) != n:
            raise LatticeError("label count does not match element count")
        self.ortho = list(ortho) if ortho is not None else None
        self.down_masks = [sum(1 << j for j in range(n) if rel[j, i]) for i in range(n)]
        self._di = None

    def _extremum(self, cand, lower: bool, pair) -> int:
        idx = np.flatnonzero(cand)
        rel = self.leq
        for c in idx:
            # greatest lower bound dominates all other lower bounds (and dually)
            if lower and rel[idx, c].all():
                return int(c)
            if not lower and rel[c, idx].all():
                return int(c)
        kind = "meet" if lower else "join"
        raise LatticeError(f"elements {pair[0]} and {pair[1]} have no {kind}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def join_of(self, mask: int) -> int:
        acc = self.bottom
        for k in _bits(mask):
            acc = int(self.join[acc, k])
        return acc

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.labels[k] for k in _bits(mask)) + "}"

    def __repr__(self):
        return f"FiniteLattice(n={self.n})"


@dataclass(frozen=True)
class IdealSet:
    members: int
    n: int

    def __contains__(self, k: int) -> bool:
        return bool(self.members >> k & 1)

    def elements(self) -> list[int]:
        return _bits(self.members)

    def __le__(self, other: "IdealSet") -> bool:
        return self.members & ~other.members == 0

    def __lt__(self, other: "IdealSet") -> bool:
        return self <= other and self.members != other.members

    def __len__(self):
        return bin(self.members).count("1")


# -- builtin lattices -------------------------------------------------------

def mo_lattice(n: int) -> FiniteLattice:
    """MO_n: bottom, top and n pairs of mutually complementary atoms."""
    if n < 1:
        raise LatticeError("MO_n needs n >= 1")
    size = 2 * n + 2
    top = size - 1
    rel = np.eye(size, dtype=bool)
    rel[0, :] = True
    rel[:, top] = True
    labels = ["0"]
    ortho = [top]
    for k in range(n):
        name = chr(ord("a") + k) if n <= 26 else f"a{k}"
        labels += [name, name + "'"]
        ortho += [2 * k + 2, 2 * k + 1]
    labels.append("1")
    ortho.append(0)
    return FiniteLattice(rel, labels=labels, ortho=ortho)


def boolean_lattice(k: int) -> FiniteLattice:
    """Subsets of k atoms ordered by inclusion (element index = bitmask)."""
    if not 0 <= k <= 4:
        raise LatticeError("boolean_lattice supports 0 <= k <= 4")
    size = 1 << k
    rel = np.array([[i & ~j == 0 for j in range(size)] for i in range(size)])
    labels = ["{" + ",".join(str(b + 1) for b in _bits(i)) + "}" for i in range(size)]
    return FiniteLattice(rel, labels=labels, ortho=[(size - 1) ^ i for i in range(size)])


_BUILTINS = {
    "mo1": lambda: mo_lattice(1),
    "mo2": lambda: mo_lattice(2),
    "mo3": lambda: mo_lattice(3),
    "bool2": lambda: boolean_lattice(2),
    "bool3": lambda: boolean_lattice(3),
}


def builtin_lattice(name: str) -> FiniteLattice:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise LatticeError(f"unknown lattice {name!r}; choose from {sorted(_BUILTINS)}") from None


def parse_lattice(text: str) -> FiniteLattice:
    """Read the ``lattice n=N`` / ``leq i j`` / ``ortho i j`` format.

    The reflexive-transitive closure of the listed ``leq`` pairs is taken.
    """
    n = None
    pairs = []
    orth = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "lattice":
                if len(parts) != 2 or not parts[1].startswith("n="):
                    raise ValueError
                n = int(parts[1][2:])
            elif parts[0] in ("leq", "ortho") and len(parts) == 3:
                i, j = int(parts[1]), int(parts[2])
                if n is None:
                    raise LatticeError(f"line {lineno}: missing 'lattice n=' header")
                if not (0 <= i < n and 0 <= j < n):
                    raise LatticeError(f"line {lineno}: element out of range")
                if parts[0] == "leq":
                    pairs.append((i, j))
                else:
                    orth[i] = j
                    orth.setdefault(j, i)
            else:
                raise ValueError
        except ValueError as exc:
            if isinstance(exc, LatticeError):
                raise
            raise LatticeError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
    if n is None:
        raise LatticeError("missing 'lattice n=' header")
    rel = np.eye(n, dtype=bool)
    for i, j in pairs:
        rel[i, j] = True
    for k in range(n):  # Warshall
        rel |= rel[:, [k]] & rel[[k], :]
    ortho = None
    if orth:
        if len(orth) != n:
            raise LatticeError("ortho map must cover every element")
        ortho = [orth[k] for k in range(n)]
    return FiniteLattice(rel, ortho=ortho)


def load_lattice(path: str | Path) -> FiniteLattice:
    return parse_lattice(Path(path).read_text())


# -- distributive ideals ----------------------------------------------------

def _as_mask(subset) -> int:
    if isinstance(subset, IdealSet):
        return subset.members
    if isinstance(subset, int):
        return subset
    return sum(1 << k for k in set(subset))


def is_distributive_join(lat: FiniteLattice, subset) -> bool:
    """(V X) ^ y == V (x ^ y) for every element y."""
    mask = _as_mask(subset)
    if not mask:
        raise LatticeError("distributive-join test needs a nonempty subset")
    xs = _bits(mask)
    j = lat.join_of(mask)
    for y in range(lat.n):
        acc = lat.bottom
        for x in xs:
            acc = int(lat.join[acc, lat.meet[x, y]])
        if int(lat.meet[j, y]) != acc:
            return False
    return True


def _is_down_closed(lat: FiniteLattice, mask: int) -> bool:
    return all(lat.down_masks[k] & ~mask == 0 for k in _bits(mask))


def is_distributive_ideal(lat: FiniteLattice, subset) -> bool:
    """Direct check of the definition, enumerating every subset of ``subset``."""
    mask = _as_mask(subset)
    if not mask or not _is_down_closed(lat, mask):
        return False
    members = _bits(mask)
    m = len(members)
    for code in range(1, 1 << m):
        sub = sum(1 << members[b] for b in range(m) if code >> b & 1)
        j = lat.join_of(sub)
        if not mask >> j & 1 and is_distributive_join(lat, sub):
            return False
    return True


def _subset_tables(lat: FiniteLattice):
    """Join and distributivity of every subset of the lattice, vectorised."""
    n = lat.n
    size = 1 << n
    joins = np.full(size, lat.bottom, dtype=np.int64)
    # dist_joins[X, y] = V (x ^ y) over x in X
    dj = np.full((size, n), lat.bottom, dtype=np.int64)
    meet = lat.meet
    jt = lat.join
    for b in range(n):
        lo, hi = 1 << b, 1 << (b + 1)
        prev = np.arange(0, lo)
        joins[lo:hi] = jt[joins[prev], b]
        dj[lo:hi] = jt[dj[prev], meet[b][None, :]]
    distributive = (meet[joins] == dj).all(axis=1)
    distributive[0] = False
    return joins, distributive


def enumerate_di(lat: FiniteLattice, cap: int = DEFAULT_CAP) -> list[IdealSet]:
    """All distributive ideals, sorted by membership bitmask."""
    if lat.n > cap:
        raise LatticeError(f"lattice has {lat.n} elements; enumeration cap is {cap}")
    if lat._di is not None:
        return list(lat._di)
    n = lat.n
    joins, distributive = _subset_tables(lat)
    masks = np.arange(1 << n, dtype=np.int64)
    # condition 1: nonempty and downward closed
    down = (masks >> lat.bottom) & 1 == 1
    for k in range(n):
        has = (masks >> k) & 1 == 1
        down &= ~has | (masks & lat.down_masks[k] == lat.down_masks[k])
    candidates = masks[down]
    # condition 2 only bites when the join is above every element of X
    xs = masks[distributive]
    xj = joins[distributive]
    top_in_x = np.zeros(len(xs), dtype=bool)
    for k in range(n):
        top_in_x |= ((xs >> k) & 1 == 1) & (xj == k)
    xs, xj = xs[~top_in_x], xj[~top_in_x]
    jbit = np.left_shift(1, xj)
    out = []
    for c in candidates:
        c = int(c)
        inside = (xs & ~c) == 0
        if not inside.any() or ((jbit[inside] & c) != 0).all():
            out.append(IdealSet(c, n))
    lat._di = tuple(out)
    return out


def down(lat: FiniteLattice, k: int) -> IdealSet:
    if not 0 <= k < lat.n:
        raise LatticeError(f"no element {k}")
    return IdealSet(lat.down_masks[k], lat.n)


def di_meet(i1: IdealSet, i2: IdealSet) -> IdealSet:
    if i1.n != i2.n:
        raise LatticeError("ideals of different lattices")
    return IdealSet(i1.members & i2.members, i1.n)


def di_join(lat: FiniteLattice, ideals: Iterable[IdealSet]) -> IdealSet:
    """Smallest distributive ideal containing all the given ones."""
    want = 0
    for i in ideals:
        want |= i.members
    best = lat.full_mask
    for cand in enumerate_di(lat):
        if want & ~cand.members == 0:
            best &= cand.members
    return IdealSet(best, lat.n)


def rpc(lat: FiniteLattice, i1: IdealSet, i2: IdealSet) -> IdealSet:
    """Relative pseudo-complement: join of all I3 with I3 ^ I1 <= I2."""
    return di_join(lat, [i3 for i3 in enumerate_di(lat) if di_meet(i3, i1) <= i2])


def di_neg(lat: FiniteLattice, i: IdealSet) -> IdealSet:
    return rpc(lat, i, down(lat, lat.bottom))


def di_complement(lat: FiniteLattice, i: IdealSet) -> IdealSet | None:
    """A Boolean complement of ``i`` in DI(L), if one exists."""
    bot = down(lat, lat.bottom)
    for j in enumerate_di(lat):
        if di_meet(i, j) == bot and di_join(lat, [i, j]).members == lat.full_mask:
            return j
    return None
