import math
import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from qlogic.bell import (
    BellConfig,
    ClassicalModel,
    Direction,
    Projector,
    StateVector,
    bell_sides,
    born_prob,
    classical_satisfies,
    joint_prob,
    random_classical_model,
    scan_violation,
    singlet,
    singlet_closed_form,
    spin_projector,
)

angles = st.floats(0, math.pi)
azimuths = st.floats(0, 2 * math.pi)
Z = Direction(0, 0, 1)
X = Direction(1, 0, 0)


def test_spin_projector_examples():
    assert np.allclose(spin_projector(Z, 1).matrix, np.diag([1, 0]))
    assert np.allclose(spin_projector(X, 1).matrix, [[0.5, 0.5], [0.5, 0.5]])
    with pytest.raises(ValueError):
        spin_projector(Z, 0)
    with pytest.raises(ValueError):
        Direction(1, 1, 0)


@given(angles, azimuths)
def test_projector_pair_is_complete(theta, phi):
    n = Direction.from_angles(theta, phi)
    total = spin_projector(n, 1).matrix + spin_projector(n, -1).matrix
    assert np.abs(total - np.eye(2)).max() <= 1e-12


def test_born_examples():
    e1 = StateVector([1, 0])
    assert born_prob(e1, Projector(np.diag([1, 0]))) == pytest.approx(1, abs=1e-12)
    assert born_prob(e1, Projector(np.diag([0, 1]))) == pytest.approx(0, abs=1e-12)
    plus = StateVector(np.array([1, 1]) / math.sqrt(2))
    assert born_prob(plus, Projector(np.diag([1, 0]))) == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(ValueError):
        born_prob(e1, Projector(np.eye(4)))
    with pytest.raises(ValueError):
        StateVector([1, 1])
    with pytest.raises(ValueError):
        Projector(np.array([[1, 1], [0, 0]]))


@given(angles, azimuths, angles, azimuths)
def test_singlet_born_values(t1, p1, t2, p2):
    psi = singlet()
    assert np.vdot(psi.amplitudes, psi.amplitudes).real == pytest.approx(1, abs=1e-12)
    na, nb = Direction.from_angles(t1, p1), Direction.from_angles(t2, p2)
    total = 0.0
    for sa, sb in product((1, -1), repeat=2):
        p = joint_prob(psi, na, sa, nb, sb)
        assert -1e-12 <= p <= 1 + 1e-12
        assert abs(p - singlet_closed_form(na, sa, nb, sb)) <= 1e-12
        total += p
    assert abs(total - 1) <= 1e-12
    # marginals are uniform for every axis
    assert abs(joint_prob(psi, na, 1, nb, 1) + joint_prob(psi, na, 1, nb, -1) - 0.5) <= 1e-12


@pytest.mark.parametrize("theta, expected", [(0, 0.0), (math.pi, 0.5), (math.pi / 2, 0.25)])
def test_joint_examples(theta, expected):
    p = joint_prob(singlet(), Direction.planar(0), 1, Direction.planar(theta), 1)
    assert p == pytest.approx(expected, abs=1e-12)


def test_bell_sides_fixed_angles():
    cfg = BellConfig.planar([0, 60, 90, 30], degrees=True)
    lhs, rhs = bell_sides(cfg, singlet())
    # (1 - cos 90°)/4 and 3 (1 - cos 30°)/4
    assert lhs == pytest.approx(0.25, abs=1e-12)
    assert rhs == pytest.approx(3 * (1 - math.cos(math.pi / 6)) / 4, abs=1e-12)
    assert lhs - rhs == pytest.approx(0.1495191, abs=1e-6)


def test_bell_sides_equal_axes():
    lhs, rhs = bell_sides(BellConfig.planar([0.3] * 4), singlet())
    assert lhs == pytest.approx(0, abs=1e-12) and lhs <= rhs + 1e-12


def test_classical_vertices_and_uniform():
    for k in range(16):
        assert classical_satisfies(ClassicalModel.vertex(k))
    assert classical_satisfies(ClassicalModel.uniform())


def test_classical_vertex_values_by_hand():
    # A1 = B1 = true, A2 = B2 = false: lhs 1, rhs = P(!A2 & !B2) = 1
    k = ClassicalModel.assignments().index((True, False, True, False))
    lhs, rhs = bell_sides(None, ClassicalModel.vertex(k))
    assert (lhs, rhs) == (1, 1)


def test_classical_random_sweep():
    rng = random.Random(11)
    for _ in range(2000):
        m = random_classical_model(rng)
        assert sum(m.weights) == 1
        assert classical_satisfies(m)


def test_classical_model_validation():
    with pytest.raises(ValueError):
        ClassicalModel(tuple([Fraction(1, 15)] * 15))
    with pytest.raises(ValueError):
        ClassicalModel(tuple([Fraction(-1)] + [Fraction(2, 15)] * 15))
    with pytest.raises(ValueError):
        ClassicalModel(tuple([Fraction(1, 17)] * 16))


def test_scan():
    cfg, margin, ang = scan_violation(180)
    assert margin >= 0.149
    lhs, rhs = bell_sides(cfg, singlet())
    assert lhs - rhs == pytest.approx(margin, abs=1e-12)
    assert margin == pytest.approx((1 + math.sqrt(0.5)) / 4 - 3 * (1 - math.sqrt(0.5)) / 4, abs=1e-9)
    _, coarse, _ = scan_violation(4)
    assert coarse <= margin + 1e-12
    with pytest.raises(ValueError):
        scan_violation(3)
