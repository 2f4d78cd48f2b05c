"""Born-rule probabilities for spin-1/2 measurements and the Bell-type bound

    P(A1 & B1) <= P(A1 & B2) + P(A2 & B1) + P(!A2 & !B2)

which every classical probability model satisfies and the singlet violates.

This module is floating point: the quantities are trigonometric.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "StateVector",
    "Projector",
    "Direction",
    "BellConfig",
    "ClassicalModel",
    "spin_projector",
    "born_prob",
    "singlet",
    "joint_prob",
    "singlet_closed_form",
    "bell_sides",
    "classical_satisfies",
    "random_classical_model",
    "scan_violation",
]

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
IDEMPOTENT_TOL = 1e-10

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class StateVector:
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if abs(np.vdot(amp, amp).real - 1.0) > NORM_TOL:
            raise ValueError("state vector must have unit norm")
        object.__setattr__(self, "amplitudes", amp)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]


@dataclass(frozen=True)
class Projector:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("projector must be a square matrix")
        if np.abs(m - m.conj().T).max() > HERMITIAN_TOL:
            raise ValueError("projector is not Hermitian")
        if np.abs(m @ m - m).max() > IDEMPOTENT_TOL:
            raise ValueError("projector is not idempotent")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def tensor(self, other: "Projector") -> "Projector":
        return Projector(np.kron(self.matrix, other.matrix))


@dataclass(frozen=True)
class Direction:
    x: float
    y: float
    z: float

    def __post_init__(self):
        if abs(math.sqrt(self.x ** 2 + self.y ** 2 + self.z ** 2) - 1.0) > NORM_TOL:
            raise ValueError("direction must be a unit vector")

    @classmethod
    def from_angles(cls, theta: float, phi: float = 0.0) -> "Direction":
        """Polar angle ``theta`` from +z and azimuth ``phi`` (radians)."""
        return cls(math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi),
                   math.cos(theta))

    @classmethod
    def planar(cls, angle: float) -> "Direction":
        """Axis at ``angle`` radians from +z inside the x-z plane."""
        return cls.from_angles(angle, 0.0)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def angle_to(self, other: "Direction") -> float:
        c = float(np.clip(self.as_array() @ other.as_array(), -1.0, 1.0))
        return math.acos(c)


@dataclass(frozen=True)
class BellConfig:
    a1: Direction
    a2: Direction
    b1: Direction
    b2: Direction

    @classmethod
    def planar(cls, angles: Sequence[float], degrees: bool = False) -> "BellConfig":
        if len(angles) != 4:
            raise ValueError("need four angles a1, a2, b1, b2")
        rad = [math.radians(a) if degrees else a for a in angles]
        return cls(*(Direction.planar(a) for a in rad))


def spin_projector(n: Direction, sign: int) -> Projector:
    """(I + sign * n.sigma) / 2: projector onto spin ``sign`` along ``n``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    ns = n.x * PAULI[0] + n.y * PAULI[1] + n.z * PAULI[2]
    return Projector((np.eye(2) + sign * ns) / 2)


def born_prob(psi: StateVector, p: Projector) -> float:
    if psi.dim != p.dim:
        raise ValueError(f"dimension mismatch: {psi.dim} != {p.dim}")
    return float(np.vdot(psi.amplitudes, p.matrix @ psi.amplitudes).real)


def singlet() -> StateVector:
    """(|01> - |10>) / sqrt(2)."""
    return StateVector(np.array([0, 1, -1, 0], dtype=complex) / math.sqrt(2))


def joint_prob(psi: StateVector, na: Direction, sa: int, nb: Direction, sb: int) -> float:
    if psi.dim != 4:
        raise ValueError("joint probabilities need a two-qubit state")
    return born_prob(psi, spin_projector(na, sa).tensor(spin_projector(nb, sb)))


def singlet_closed_form(na: Direction, sa: int, nb: Direction, sb: int) -> float:
    return (1 - sa * sb * float(na.as_array() @ nb.as_array())) / 4


@dataclass(frozen=True)
class ClassicalModel:
    """A probability distribution over the 16 truth assignments of (A1, A2, B1, B2).

    ``weights[k]`` belongs to the assignment whose bits, most significant
    first, are A1, A2, B1, B2.
    """

    weights: tuple

    def __post_init__(self):
        w = tuple(self.weights)
        if len(w) != 16:
            raise ValueError("need 16 weights")
        if any(x < 0 for x in w):
            raise ValueError("weights must be nonnegative")
        total = sum(w)
        exact = all(isinstance(x, (int, Fraction)) for x in w)
        if (total != 1) if exact else abs(total - 1) > NORM_TOL:
            raise ValueError("weights must sum to 1")
        object.__setattr__(self, "weights", w)

    @staticmethod
    def assignments():
        return list(product((True, False), repeat=4))

    @classmethod
    def vertex(cls, index: int) -> "ClassicalModel":
        return cls(tuple(Fraction(int(k == index)) for k in range(16)))

    @classmethod
    def uniform(cls) -> "ClassicalModel":
        return cls(tuple(Fraction(1, 16) for _ in range(16)))

    def prob(self, event: Callable[[bool, bool, bool, bool], bool]):
        total = 0
        for w, (a1, a2, b1, b2) in zip(self.weights, product((True, False), repeat=4)):
            if event(a1, a2, b1, b2):
                total += w
        return total

    def joint(self, a: tuple[int, bool], b: tuple[int, bool]):
        """P(A_i == va and B_j == vb) for a = (i, va), b = (j, vb), i, j in {1, 2}."""
        (i, va), (j, vb) = a, b

        def event(a1, a2, b1, b2):
            return (a1, a2)[i - 1] == va and (b1, b2)[j - 1] == vb

        return self.prob(event)


def bell_sides(cfg: BellConfig | None, probs) -> tuple:
    """(lhs, rhs) of the inequality for a classical model or the singlet.

    ``probs`` is a ``ClassicalModel`` or a two-qubit ``StateVector``. For
    the quantum case "A1" is outcome +1 along a1 and "!A2" is -1 along a2.
    """
    if isinstance(probs, ClassicalModel):
        p = probs.joint
        lhs = p((1, True), (1, True))
        rhs = p((1, True), (2, True)) + p((2, True), (1, True)) + p((2, False), (2, False))
        return lhs, rhs
    if cfg is None:
        raise ValueError("quantum Bell sides need a configuration")
    psi = probs
    lhs = joint_prob(psi, cfg.a1, 1, cfg.b1, 1)
    rhs = (joint_prob(psi, cfg.a1, 1, cfg.b2, 1)
           + joint_prob(psi, cfg.a2, 1, cfg.b1, 1)
           + joint_prob(psi, cfg.a2, -1, cfg.b2, -1))
    return lhs, rhs


def classical_satisfies(model: ClassicalModel) -> bool:
    lhs, rhs = bell_sides(None, model)
    return lhs <= rhs


def random_classical_model(rng: random.Random, max_weight: int = 1000) -> ClassicalModel:
    raw = [rng.randint(0, max_weight) for _ in range(16)]
    if not any(raw):
        raw[rng.randrange(16)] = 1
    total = sum(raw)
    return ClassicalModel(tuple(Fraction(x, total) for x in raw))


def scan_violation(resolution: int) -> tuple[BellConfig, float, tuple[float, float, float, float]]:
    """Grid search over coplanar axes for the largest lhs - rhs of the singlet.

    Axes range over multiples of 180/resolution degrees on the full circle.
    The singlet is rotation invariant, so a1 is pinned at 0. Returns the
    best configuration, its margin and its angles in degrees.
    """
    if resolution < 4:
        raise ValueError("resolution must be at least 4")
    step = math.pi / resolution
    grid = np.arange(2 * resolution) * step
    b1 = grid[:, None]
    b2 = grid[None, :]
    # singlet Born values at coplanar axes: (1 - s_a s_b cos(angle difference)) / 4
    base = (1 - np.cos(b1)) / 4 - (1 - np.cos(b2)) / 4
    best = (-np.inf, 0, 0, 0)
    for i, a2 in enumerate(grid):
        margin = base - (1 - np.cos(b1 - a2)) / 4 - (1 - np.cos(b2 - a2)) / 4
        k = int(np.argmax(margin))
        if margin.flat[k] > best[0]:
            best = (margin.flat[k], i, *np.unravel_index(k, margin.shape))
    _, i, j, k = best
    angles_deg = (0.0, math.degrees(grid[i]), math.degrees(grid[j]), math.degrees(grid[k]))
    cfg = BellConfig.planar(angles_deg, degrees=True)
    lhs_v, rhs_v = bell_sides(cfg, singlet())
    return cfg, lhs_v - rhs_v, angles_deg
