"""Frame action axioms, fixed-point structure, and serialization."""

import json

import numpy as np
import pytest

from znframes.family import SubgroupRep, enumerate_family
from znframes.stiefel import (
    Frame,
    GroupElement,
    act,
    embed_product,
    fixed_point_factors,
    fixed_set_dimension,
    fixed_support_pattern,
    is_fixed,
    off_pattern_mass,
    projector,
    random_frame,
    random_unitary,
    right_act,
    split_fixed_frame,
    subgroup_generator,
    trivial_stabilizer_check,
)


def std_frame(r, s):
    return Frame(np.eye(r, s, dtype=complex))


# -- the left action -------------------------------------------------------------


def test_identity_action():
    v = random_frame(2, 5, seed=1)
    w = act(GroupElement.identity(4, 2), v)
    assert np.max(np.abs(w.rows - v.rows)) < 1e-14


def test_scalar_action_on_line():
    v = Frame(np.array([[1.0, 1.0, 0.0, 0.0]]) / np.sqrt(2))
    g = GroupElement(2, 1, np.eye(1, dtype=complex))
    w = act(g, v)
    expected = np.array([[-1.0, 1.0, 0.0, 0.0]]) / np.sqrt(2)
    assert np.max(np.abs(w.rows - expected)) < 1e-14


def test_weighted_diagonal_fixes_standard_frame():
    # phases cancel the diagonal weights exactly on (e_1, e_2)
    v = std_frame(2, 4)
    g = GroupElement(2, 1, np.diag([-1.0 + 0j, 1.0 + 0j]))
    w = act(g, v)
    assert np.max(np.abs(w.rows - v.rows)) < 1e-14


def test_action_axioms_seeded():
    rng = np.random.default_rng(99)
    for _ in range(200):
        n = int(rng.integers(1, 9))
        r = int(rng.integers(1, 5))
        s = int(rng.integers(r, 17))
        v = random_frame(r, s, seed=int(rng.integers(0, 2**31)))
        g1 = GroupElement(n, int(rng.integers(0, n)), random_unitary(r, rng))
        g2 = GroupElement(n, int(rng.integers(0, n)), random_unitary(r, rng))
        lhs = act(g1.compose(g2), v)
        rhs = act(g1, act(g2, v))
        assert np.max(np.abs(lhs.rows - rhs.rows)) <= 1e-10
        assert lhs.orthonormality_residual() <= 1e-10


def test_dimension_mismatch_rejected():
    v = std_frame(2, 4)
    g = GroupElement(2, 1, np.eye(3, dtype=complex))
    with pytest.raises(ValueError):
        act(g, v)


# -- the right action and the projector -------------------------------------------


def test_right_act_identity_and_swap():
    v = std_frame(2, 4)
    assert np.max(np.abs(right_act(v, np.eye(2)).rows - v.rows)) < 1e-14
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    w = right_act(v, swap)
    assert np.max(np.abs(w.rows - v.rows[::-1])) < 1e-14


def test_right_action_axiom():
    rng = np.random.default_rng(5)
    v = random_frame(3, 8, seed=11)
    a = random_unitary(3, rng)
    b = random_unitary(3, rng)
    lhs = right_act(right_act(v, a), b)
    rhs = right_act(v, a @ b)
    assert np.max(np.abs(lhs.rows - rhs.rows)) <= 1e-10


def test_projector_examples():
    v = std_frame(2, 5)
    P = projector(v).projector
    assert np.max(np.abs(P - np.diag([1, 1, 0, 0, 0.0]))) < 1e-14
    line = Frame(np.array([[1.0, 1.0, 0.0]]) / np.sqrt(2))
    P2 = projector(line).projector
    assert np.max(np.abs(P2[:2, :2] - 0.5)) < 1e-14


def test_projector_right_invariance():
    rng = np.random.default_rng(7)
    for _ in range(25):
        v = random_frame(2, 6, seed=int(rng.integers(0, 2**31)))
        a = random_unitary(2, rng)
        d = projector(right_act(v, a)).distance(projector(v))
        assert d <= 1e-10


def test_left_right_compatibility():
    rng = np.random.default_rng(13)
    for _ in range(25):
        v = random_frame(2, 7, seed=int(rng.integers(0, 2**31)))
        a = random_unitary(2, rng)
        rot = GroupElement(6, int(rng.integers(0, 6)), np.eye(2, dtype=complex))
        lhs = act(rot, right_act(v, a))
        rhs = right_act(act(rot, v), a)
        assert np.max(np.abs(lhs.rows - rhs.rows)) <= 1e-10


# -- fixed points ------------------------------------------------------------------


def test_support_pattern_examples():
    h = SubgroupRep(1, 1, 2, (1, 1))
    assert fixed_support_pattern(h, 5).all()
    h = SubgroupRep(2, 2, 2, (1, 2))
    mask = fixed_support_pattern(h, 4)
    assert mask.tolist() == [[True, False, True, False], [False, True, False, True]]
    h = SubgroupRep(3, 3, 1, (3,))
    mask = fixed_support_pattern(h, 6)
    assert mask.tolist() == [[False, False, True, False, False, True]]


def test_is_fixed_examples():
    h = SubgroupRep(2, 2, 2, (1, 2))
    assert is_fixed(std_frame(2, 4), h)
    swapped = Frame(np.array([[0, 1, 0, 0], [1, 0, 0, 0]], dtype=complex))
    assert not is_fixed(swapped, h)
    trivial = SubgroupRep(4, 1, 2, (1, 1))
    assert is_fixed(swapped, trivial)


def test_factor_examples():
    assert fixed_point_factors(SubgroupRep(2, 2, 2, (1, 2)), 4) == [(1, 2), (1, 2)]
    assert fixed_point_factors(SubgroupRep(2, 1, 3, (1, 1, 1)), 9) == [(3, 9)]
    assert fixed_point_factors(SubgroupRep(2, 2, 2, (1, 1)), 6) == [(2, 3), (0, 3)]


def test_dimension_bookkeeping():
    for n, r in [(2, 2), (4, 2), (6, 3)]:
        s = 2 * r * n
        for h in enumerate_family(n, r):
            dim = fixed_set_dimension(h, s)
            assert dim == sum(
                2 * si * ci - si * si for si, ci in fixed_point_factors(h, s)
            )
            if h.d == 1:
                assert dim == 2 * r * s - r * r


def test_embed_product_example():
    h = SubgroupRep(2, 2, 2, (1, 2))
    c1 = Frame(np.array([[1.0 + 0j]]))
    c2 = Frame(np.array([[1.0 + 0j]]))
    v = embed_product([c1, c2], h, 2)
    assert np.max(np.abs(v.rows - np.eye(2, dtype=complex))) < 1e-14


def test_embed_split_round_trip_exact():
    rng = np.random.default_rng(23)
    for n, r in [(2, 2), (4, 2), (6, 3)]:
        for h in enumerate_family(n, r):
            s = 2 * r * n
            factors = fixed_point_factors(h, s)
            comps = [
                random_frame(si, ci, seed=int(rng.integers(0, 2**31)))
                for si, ci in factors
            ]
            v = embed_product(comps, h, s)
            assert is_fixed(v, h, tol=1e-12)
            assert off_pattern_mass(v, h) == 0.0
            back = split_fixed_frame(v, h)
            for original, recovered in zip(comps, back):
                assert np.array_equal(original.rows, recovered.rows)


def test_is_fixed_agrees_with_pattern_criterion():
    rng = np.random.default_rng(31)
    for n in (2, 3, 4, 6):
        for r in (1, 2, 3):
            for h in enumerate_family(n, r):
                s = 2 * r * n
                factors = fixed_point_factors(h, s)
                comps = [
                    random_frame(si, ci, seed=int(rng.integers(0, 2**31)))
                    for si, ci in factors
                ]
                fixed = embed_product(comps, h, s)
                assert is_fixed(fixed, h, tol=1e-12)
                if h.d == 1:
                    continue
                random = random_frame(r, s, seed=int(rng.integers(0, 2**31)))
                mass = off_pattern_mass(random, h)
                assert is_fixed(random, h, tol=1e-12) == (mass <= 1e-12)


def test_split_rejects_unfixed_frames():
    h = SubgroupRep(2, 2, 2, (1, 2))
    swapped = Frame(np.array([[0, 1, 0, 0], [1, 0, 0, 0]], dtype=complex))
    with pytest.raises(ValueError):
        split_fixed_frame(swapped, h)


# -- freeness ----------------------------------------------------------------------


def test_trivial_stabilizer_examples():
    v = std_frame(2, 4)
    assert trivial_stabilizer_check(v, np.eye(2))
    assert trivial_stabilizer_check(v, np.diag([-1.0, 1.0]))
    rng = np.random.default_rng(41)
    for _ in range(50):
        r = int(rng.integers(1, 5))
        s = int(rng.integers(r, 13))
        frame = random_frame(r, s, seed=int(rng.integers(0, 2**31)))
        a = random_unitary(r, rng)
        if np.max(np.abs(a - np.eye(r))) < 1e-3:
            continue
        g = GroupElement(1, 0, a)
        assert np.max(np.abs(act(g, frame).rows - frame.rows)) >= 1e-6
        assert trivial_stabilizer_check(frame, a)


# -- construction and serialization -------------------------------------------------


def test_frame_invariant_enforced():
    with pytest.raises(ValueError):
        Frame(np.array([[1.0, 0.0], [1.0, 0.0]], dtype=complex))
    with pytest.raises(ValueError):
        Frame(np.ones((3, 2), dtype=complex) / np.sqrt(2))


def test_random_frame_deterministic():
    a = random_frame(3, 9, seed=77)
    b = random_frame(3, 9, seed=77)
    assert np.array_equal(a.rows, b.rows)
    assert a.orthonormality_residual() <= 1e-12


def test_square_random_frame_is_unitary():
    v = random_frame(4, 4, seed=5)
    assert np.max(np.abs(v.rows @ v.rows.conj().T - np.eye(4))) <= 1e-12


def test_json_round_trip_bit_exact():
    v = random_frame(3, 7, seed=123)
    blob = json.dumps(v.to_json())
    w = Frame.from_json(json.loads(blob))
    assert np.array_equal(v.rows, w.rows)


def test_frames_are_immutable():
    v = random_frame(2, 4, seed=3)
    with pytest.raises((ValueError, RuntimeError)):
        v.rows[0, 0] = 1.0
