"""The associated-bundle identification: isometry, quotient, equivariance."""

import numpy as np
import pytest

from znframes.bundle import (
    BundlePoint,
    CanonicalPoint,
    f_inverse,
    f_map,
    gamma_act_bundle,
    module_action,
    plane_action,
)
from znframes.stiefel import Frame, projector, random_frame, random_unitary, right_act


def test_module_action_examples():
    z = np.array([1.0, 1.0, 1.0, 1.0], dtype=complex)
    assert np.array_equal(module_action(0, z, 2), z)
    np.testing.assert_allclose(
        module_action(1, z, 2), np.array([-1, 1, -1, 1.0]), atol=1e-14
    )


def test_module_action_is_an_action():
    rng = np.random.default_rng(3)
    z = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    for n in (1, 2, 5, 8):
        for p1 in range(n):
            for p2 in range(n):
                lhs = module_action(p1, module_action(p2, z, n), n)
                rhs = module_action(p1 + p2, z, n)
                assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_f_map_standard_frame():
    frame = Frame(np.eye(2, 5, dtype=complex))
    pt = BundlePoint(frame=frame, y=np.array([3.0, 4.0j]))
    cp = f_map(pt)
    assert np.max(np.abs(cp.plane.projector - np.diag([1, 1, 0, 0, 0.0]))) < 1e-14
    np.testing.assert_allclose(cp.z, np.array([3.0, 4.0j, 0, 0, 0]), atol=1e-14)


def test_f_map_zero_section():
    frame = random_frame(2, 6, seed=9)
    cp = f_map(BundlePoint(frame=frame, y=np.zeros(2, dtype=complex)))
    assert np.max(np.abs(cp.z)) == 0.0


def test_f_map_well_defined_on_quotient():
    rng = np.random.default_rng(21)
    for _ in range(100):
        r = int(rng.integers(1, 5))
        s = int(rng.integers(r, 11))
        frame = random_frame(r, s, seed=int(rng.integers(0, 2**31)))
        y = rng.standard_normal(r) + 1j * rng.standard_normal(r)
        a = random_unitary(r, rng)
        cp1 = f_map(BundlePoint(frame=frame, y=y))
        cp2 = f_map(BundlePoint(frame=right_act(frame, a), y=a.conj().T @ y))
        assert cp1.plane.distance(cp2.plane) <= 1e-10
        assert np.max(np.abs(cp1.z - cp2.z)) <= 1e-10


def test_fiber_isometry():
    rng = np.random.default_rng(33)
    for _ in range(100):
        r = int(rng.integers(1, 5))
        frame = random_frame(r, r + 4, seed=int(rng.integers(0, 2**31)))
        y = rng.standard_normal(r) + 1j * rng.standard_normal(r)
        cp = f_map(BundlePoint(frame=frame, y=y))
        assert abs(np.linalg.norm(cp.z) - np.linalg.norm(y)) <= 1e-10


def test_f_inverse_round_trip():
    rng = np.random.default_rng(45)
    for _ in range(50):
        r = int(rng.integers(1, 4))
        frame = random_frame(r, r + 3, seed=int(rng.integers(0, 2**31)))
        y = rng.standard_normal(r) + 1j * rng.standard_normal(r)
        pt = BundlePoint(frame=frame, y=y)
        back = f_inverse(f_map(pt), frame)
        assert np.max(np.abs(back.y - y)) <= 1e-12


def test_f_inverse_unit_vector():
    frame = random_frame(2, 5, seed=8)
    cp = CanonicalPoint(plane=projector(frame), z=frame.rows[0])
    back = f_inverse(cp, frame)
    np.testing.assert_allclose(back.y, np.array([1.0, 0.0]), atol=1e-12)


def test_f_inverse_change_of_frame():
    rng = np.random.default_rng(52)
    frame = random_frame(2, 6, seed=14)
    y = np.array([1.0 - 2.0j, 0.5])
    cp = f_map(BundlePoint(frame=frame, y=y))
    other = right_act(frame, random_unitary(2, rng))
    recovered = f_map(f_inverse(cp, other))
    assert recovered.plane.distance(cp.plane) <= 1e-10
    assert np.max(np.abs(recovered.z - cp.z)) <= 1e-10


def test_f_inverse_rejects_wrong_plane():
    frame = random_frame(2, 6, seed=14)
    stranger = random_frame(2, 6, seed=15)
    cp = f_map(BundlePoint(frame=frame, y=np.array([1.0, 1.0])))
    with pytest.raises(ValueError):
        f_inverse(cp, stranger)


def test_equivariance_square():
    rng = np.random.default_rng(66)
    for _ in range(100):
        n = int(rng.integers(1, 9))
        p = int(rng.integers(0, n))
        r = int(rng.integers(1, 4))
        s = int(rng.integers(r, 10))
        frame = random_frame(r, s, seed=int(rng.integers(0, 2**31)))
        y = rng.standard_normal(r) + 1j * rng.standard_normal(r)
        pt = BundlePoint(frame=frame, y=y)
        cp = f_map(pt)
        lhs = f_map(gamma_act_bundle(p, pt, n))
        assert lhs.plane.distance(plane_action(p, cp.plane, n)) <= 1e-10
        assert np.max(np.abs(lhs.z - module_action(p, cp.z, n))) <= 1e-10


def test_full_cycle_returns_image():
    for n in (1, 2, 3, 6, 8):
        pt = BundlePoint(
            frame=random_frame(2, 8, seed=70 + n),
            y=np.array([1.0, 2.0 - 1.0j]),
        )
        cp = f_map(pt)
        cycled = pt
        for _ in range(n):
            cycled = gamma_act_bundle(1, cycled, n)
        cp2 = f_map(cycled)
        assert cp2.plane.distance(cp.plane) <= 1e-9
        assert np.max(np.abs(cp2.z - cp.z)) <= 1e-9


def test_gamma_act_identity():
    pt = BundlePoint(frame=random_frame(2, 6, seed=2), y=np.array([1.0, 0.0]))
    moved = gamma_act_bundle(0, pt, 4)
    assert np.array_equal(moved.frame.rows, pt.frame.rows)
    assert np.array_equal(moved.y, pt.y)


def test_canonical_point_invariant():
    frame = random_frame(2, 5, seed=4)
    z_outside = np.ones(5, dtype=complex)
    with pytest.raises(ValueError):
        CanonicalPoint(plane=projector(frame), z=z_outside)
