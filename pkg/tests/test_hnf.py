"""Integer lattice membership and kernels, cross-checked by reconstruction."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from znframes.hnf import (
    hermite_with_transform,
    integer_kernel_basis,
    solve_lattice_membership,
)


def test_transform_reconstructs_input():
    rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    H, U = hermite_with_transform(rows, 3)
    assert np.array_equal(np.array(U) @ np.array(rows), np.array(H))
    # U must be unimodular
    det = round(np.linalg.det(np.array(U, dtype=float)))
    assert det in (-1, 1)


def test_echelon_shape():
    rows = [[0, 3, 1], [0, 6, 4]]
    H, _ = hermite_with_transform(rows, 3)
    pivots = []
    for row in H:
        nz = [j for j, v in enumerate(row) if v != 0]
        if nz:
            pivots.append(nz[0])
            assert row[nz[0]] > 0
    assert pivots == sorted(pivots)


def test_membership_known_cases():
    cols = [[2, 0], [0, 3]]
    assert solve_lattice_membership(cols, [4, 3]) == [2, 1]
    assert solve_lattice_membership(cols, [1, 0]) is None
    assert solve_lattice_membership(cols, [0, 0]) == [0, 0]
    assert solve_lattice_membership([], [0, 0]) == []
    assert solve_lattice_membership([], [1, 0]) is None


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_membership_roundtrip_on_constructed_instances(data):
    ncols = data.draw(st.integers(1, 5))
    nvecs = data.draw(st.integers(1, 6))
    vecs = [
        data.draw(st.lists(st.integers(-6, 6), min_size=ncols, max_size=ncols))
        for _ in range(nvecs)
    ]
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=nvecs, max_size=nvecs))
    target = [sum(c * v[j] for c, v in zip(coeffs, vecs)) for j in range(ncols)]
    witness = solve_lattice_membership(vecs, target)
    assert witness is not None
    rebuilt = [sum(w * v[j] for w, v in zip(witness, vecs)) for j in range(ncols)]
    assert rebuilt == target


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_non_members_by_parity_obstruction(data):
    # every generator has even coordinate sum; any odd-sum target is outside
    ncols = data.draw(st.integers(1, 4))
    nvecs = data.draw(st.integers(1, 4))
    vecs = []
    for _ in range(nvecs):
        v = data.draw(st.lists(st.integers(-5, 5), min_size=ncols, max_size=ncols))
        if sum(v) % 2 == 1:
            v[0] += 1
        vecs.append(v)
    target = data.draw(st.lists(st.integers(-5, 5), min_size=ncols, max_size=ncols))
    if sum(target) % 2 == 0:
        target[0] += 1
    assert solve_lattice_membership(vecs, target) is None


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_kernel_basis_annihilates(data):
    ncols = data.draw(st.integers(1, 4))
    nvecs = data.draw(st.integers(1, 6))
    rows = [
        data.draw(st.lists(st.integers(-4, 4), min_size=ncols, max_size=ncols))
        for _ in range(nvecs)
    ]
    basis = integer_kernel_basis(rows, ncols)
    for vec in basis:
        combo = [sum(z * row[j] for z, row in zip(vec, rows)) for j in range(ncols)]
        assert combo == [0] * ncols
    # rank-nullity over the rationals
    rank = np.linalg.matrix_rank(np.array(rows, dtype=float)) if rows else 0
    assert len(basis) == nvecs - rank
