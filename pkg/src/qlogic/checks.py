"""Randomised instance generators and the property suites run by the CLI.

All randomness flows through an explicit ``random.Random`` so every run is
reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import rayset as rs
from .exactlin import ComplexRational, Vector
from .rayset import Ray, RaySet
from .subspace import Subspace, join_all, meet, span

_SCALARS = [
    ComplexRational(0), ComplexRational(0), ComplexRational(1), ComplexRational(-1),
    ComplexRational(0, 1), ComplexRational(0, -1), ComplexRational(1, 1),
    ComplexRational(2), ComplexRational(Fraction(1, 2), -1),
]


def random_vector(rng: random.Random, d: int) -> Vector:
    while True:
        v = Vector(rng.choice(_SCALARS) for _ in range(d))
        if not v.is_zero():
            return v


def random_subspace(rng: random.Random, d: int, dim: int | None = None) -> Subspace:
    """Random subspace; often a coordinate subspace."""
    if dim is None:
        dim = rng.choice([k for k in range(d + 1) for _ in range(1 if k in (0, d) else 3)])
    if rng.random() < 0.4:
        return Subspace.coordinate(d, rng.sample(range(d), dim))
    k = Subspace.zero(d)
    while k.dim < dim:
        k = k | span([random_vector(rng, d)], d)
    return k


def random_subspace_of(rng: random.Random, k: Subspace) -> Subspace:
    """Random subspace of ``k`` (possibly 0 or ``k`` itself)."""
    basis = k.basis
    dim = rng.randint(0, len(basis))
    vecs = []
    for _ in range(dim):
        acc = Vector([0] * k.ambient_dim)
        for b in basis:
            acc = acc + b.scale(rng.choice(_SCALARS))
        vecs.append(acc)
    return span(vecs, k.ambient_dim)


def random_rayset(rng: random.Random, pool: list[Subspace], depth: int = 2) -> RaySet:
    """Random combination of r(K), K in ``pool``, under |, &, ! and ~."""
    d = pool[0].ambient_dim
    if depth == 0 or rng.random() < 0.15:
        roll = rng.random()
        if roll < 0.05:
            return RaySet.top(d)
        if roll < 0.08:
            return RaySet.empty(d)
        return rs.embed_r(rng.choice(pool))
    op = rng.choice("||&&!!!~~")
    a = random_rayset(rng, pool, depth - 1)
    if op == "!":
        return rs.complement(a)
    if op == "~":
        return rs.pseudo_neg(a)
    b = random_rayset(rng, pool, depth - 1)
    return rs.union(a, b) if op == "|" else rs.intersect(a, b)


def random_pool(rng: random.Random, d: int, size: int = 3) -> list[Subspace]:
    """Random subspaces; one is nested in another so that holes arise."""
    pool = [random_subspace(rng, d) for _ in range(max(1, size - 1))]
    pool.append(random_subspace_of(rng, rng.choice(pool)))
    return pool


def random_triple(rng: random.Random, d: int, pool_size: int = 3, depth: int = 3):
    pool = random_pool(rng, d, pool_size)
    return tuple(_rich_rayset(rng, pool, depth) for _ in range(3))


def _rich_rayset(rng: random.Random, pool: list[Subspace], depth: int, attempts: int = 4) -> RaySet:
    # bias away from empty/full sets and toward cells with holes
    s = random_rayset(rng, pool, depth)
    for _ in range(attempts):
        trivial = rs.is_empty(s) or rs.equals(s, RaySet.top(s.ambient_dim))
        if not trivial and (any(c.holes for c in s.cells) or rng.random() < 0.5):
            break
        s = random_rayset(rng, pool, depth)
    return s


def sample_ray(rng: random.Random, s: RaySet, tries: int = 64) -> Ray | None:
    """A ray of ``s`` drawn from a random nonempty cell, or None if empty."""
    cells = [c for c in s.cells if not c.is_empty()]
    if not cells:
        return None
    for _ in range(tries):
        c = rng.choice(cells)
        v = Vector([0] * s.ambient_dim)
        for b in c.base.basis:
            v = v + b.scale(rng.choice(_SCALARS))
        if not v.is_zero() and c.contains_vector(v):
            return Ray(v)
    raise RuntimeError("could not sample a ray from a nonempty cell")


# -- weak-Heyting axioms ----------------------------------------------------

AXIOMS = {
    "identity": "S1 -> S1 = top",
    "right-meet": "S1 -> (S2 & S3) = (S1 -> S2) & (S1 -> S3)",
    "left-join": "(S1 | S2) -> S3 = (S1 -> S3) & (S2 -> S3)",
    "transitivity": "(S1 -> S2) & (S2 -> S3) <= S1 -> S3",
}


def check_axioms(s1: RaySet, s2: RaySet, s3: RaySet) -> dict[str, bool]:
    imp, meet_, join_ = rs.implies, rs.intersect, rs.union
    top = RaySet.top(s1.ambient_dim)
    return {
        "identity": rs.equals(imp(s1, s1), top),
        "right-meet": rs.equals(imp(s1, meet_(s2, s3)), meet_(imp(s1, s2), imp(s1, s3))),
        "left-join": rs.equals(imp(join_(s1, s2), s3), meet_(imp(s1, s3), imp(s2, s3))),
        "transitivity": rs.subset(meet_(imp(s1, s2), imp(s2, s3)), imp(s1, s3)),
    }


def check_bottom_law(s: RaySet) -> bool:
    """S -> bot = ~S."""
    return rs.equals(rs.implies(s, RaySet.empty(s.ambient_dim)), rs.pseudo_neg(s))


@dataclass
class SuiteReport:
    trials: int = 0
    failures: dict[str, int] = field(default_factory=dict)
    counterexamples: dict[str, tuple] = field(default_factory=dict)

    def record(self, name: str, ok: bool, instance):
        self.failures.setdefault(name, 0)
        if not ok:
            self.failures[name] += 1
            self.counterexamples.setdefault(name, instance)

    @property
    def held(self) -> list[str]:
        return [k for k, v in self.failures.items() if v == 0]

    @property
    def ok(self) -> bool:
        return all(v == 0 for v in self.failures.values())


def axiom_suite(d: int, trials: int, seed: int) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport()
    for _ in range(trials):
        triple = random_triple(rng, d)
        for name, ok in check_axioms(*triple).items():
            rep.record(name, ok, triple)
        rep.record("bottom-law", check_bottom_law(triple[0]), triple[:1])
        rep.trials += 1
    return rep


# -- isomorphism proof steps --------------------------------------------------

def is_distributive_family(ks: list[Subspace]) -> bool:
    """(V ks) ^ K' = V (k ^ K') for all K'.

    Testing every ray K' = [psi] shows this forces every ray of the join to
    lie in some member; conversely, if the join is a member the identity is
    immediate. Over an infinite field both say: the join is among ``ks``.
    """
    j = join_all(ks)
    return any(k == j for k in ks)


def distributes_over(ks: list[Subspace], probes: list[Subspace]) -> bool:
    """The defining identity, checked literally for each probe K'."""
    j = join_all(ks)
    return all(meet(j, p) == join_all([meet(k, p) for k in ks]) for p in probes)


def iso_instance(rng: random.Random, d: int) -> dict[str, bool]:
    """Proof-step properties of the f/g correspondence on one random S."""
    pool = random_pool(rng, d)
    s = _rich_rayset(rng, pool, depth=3)
    out = {}

    probes = pool + [random_subspace(rng, d) for _ in range(3)]
    probes += [rs_line for rs_line in (_line_of(sample_ray(rng, s)),) if rs_line is not None]
    members = [k for k in probes if rs.f_contains(s, k)]
    # K in f(S) means r(K) <= S
    out["f-sound"] = all(rs.subset(rs.embed_r(k), s) for k in members)
    # [psi] in S gives span{psi} in f(S)
    ray = sample_ray(rng, s)
    out["ray-in-f"] = ray is None or rs.f_contains(s, ray.line())
    # g(f(S)) restricted to a finite family never leaves S
    out["g-f-inside"] = rs.subset(rs.g_of_generators(members, d), s)
    # condition 1: downward closure
    out["down-closed"] = all(rs.f_contains(s, random_subspace_of(rng, k)) for k in members)
    # condition 2: joins of distributive families inside f(S)
    fam_ok = True
    for k in members:
        fam = [k] + [random_subspace_of(rng, k) for _ in range(2)]
        if is_distributive_family(fam):
            fam_ok &= distributes_over(fam, probes) and rs.f_contains(s, join_all(fam))
    out["distributive-join"] = fam_ok
    # exact roundtrip on finite unions of r(K): g of the f-members recovers S
    gens = [random_subspace(rng, d) for _ in range(rng.randint(1, 3))]
    t = rs.g_of_generators(gens)
    fam = gens + [random_subspace(rng, d) for _ in range(3)]
    picked = [k for k in fam if rs.f_contains(t, k)]
    out["g-f-roundtrip"] = rs.equals(rs.g_of_generators(picked, d), t)
    return out


def _line_of(ray: Ray | None) -> Subspace | None:
    return None if ray is None else ray.line()


def iso_suite(d: int, trials: int, seed: int) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport()
    for t in range(trials):
        for name, ok in iso_instance(rng, d).items():
            rep.record(name, ok, (seed, t))
        rep.trials += 1
    return rep
