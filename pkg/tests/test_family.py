"""Subgroup family enumeration against an independent composition counter."""

import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from znframes.family import (
    SubgroupRep,
    enumerate_family,
    family_size,
    restriction_hom,
    rho_matrix,
    subgroup_Hk,
    subgroup_K,
    weights_from_composition,
)


def oracle_composition_count(total, parts):
    """Stars and bars by explicit bar placement, independent of the library."""
    return sum(1 for _ in itertools.combinations(range(total + parts - 1), parts - 1))


def oracle_family_count(n, r):
    return sum(
        oracle_composition_count(r, d) for d in range(1, n + 1) if n % d == 0
    )


# frozen from the oracle above
ORACLE_COUNTS = {(1, 3): 1, (2, 1): 3, (2, 2): 4, (4, 2): 14, (6, 3): 71}


def test_oracle_counts_are_self_consistent():
    for (n, r), count in ORACLE_COUNTS.items():
        assert oracle_family_count(n, r) == count


@pytest.mark.parametrize("n,r", sorted(ORACLE_COUNTS))
def test_enumeration_count_matches_oracle(n, r):
    assert len(enumerate_family(n, r)) == ORACLE_COUNTS[(n, r)]
    assert family_size(n, r) == ORACLE_COUNTS[(n, r)]


def test_enumeration_count_full_range():
    for n in range(1, 13):
        for r in range(1, 7):
            members = enumerate_family(n, r)
            assert len(members) == oracle_family_count(n, r)
            assert len(set(members)) == len(members), "duplicate subgroups"


def test_enumeration_order_and_values_n2_r2():
    got = [(h.d, h.m) for h in enumerate_family(2, 2)]
    assert got == [(1, (1, 1)), (2, (2, 2)), (2, (1, 2)), (2, (1, 1))]


def test_single_divisor_case():
    members = enumerate_family(1, 3)
    assert len(members) == 1
    assert members[0] == SubgroupRep(n=1, d=1, r=3, m=(1, 1, 1))


def test_weights_recover_composition():
    for n, r in [(4, 2), (6, 3), (8, 2)]:
        seen = set()
        for h in enumerate_family(n, r):
            key = (h.d, h.weight_multiplicities())
            assert key not in seen
            seen.add(key)
            assert weights_from_composition(h.weight_multiplicities()) == h.m
            assert tuple(sorted(h.m)) == h.m  # stored ascending


def test_hk_examples():
    assert subgroup_Hk(-1, 2) == SubgroupRep(n=2, d=1, r=2, m=(1, 1))
    assert subgroup_Hk(0, 2) == SubgroupRep(n=2, d=2, r=2, m=(2, 2))
    assert subgroup_Hk(1, 2) == SubgroupRep(n=2, d=2, r=2, m=(1, 2))
    assert subgroup_Hk(2, 2) == SubgroupRep(n=2, d=2, r=2, m=(1, 1))
    with pytest.raises(ValueError):
        subgroup_Hk(3, 2)
    with pytest.raises(ValueError):
        subgroup_Hk(-2, 2)


@pytest.mark.parametrize("r", [1, 2, 3, 5])
def test_hk_family_bijection(r):
    family = set(enumerate_family(2, r))
    hks = {subgroup_Hk(k, r) for k in range(-1, r + 1)}
    assert hks == family


def test_K_examples():
    assert subgroup_K(3, 1, 3, 2) == SubgroupRep(n=3, d=3, r=2, m=(1, 3))
    assert subgroup_K(2, 2, 2, 3) == SubgroupRep(n=2, d=2, r=3, m=(2, 2, 2))
    assert subgroup_K(4, 3, 8, 1) == SubgroupRep(n=8, d=4, r=1, m=(3,))
    with pytest.raises(ValueError):
        subgroup_K(3, 1, 4, 2)
    with pytest.raises(ValueError):
        subgroup_K(3, 4, 3, 2)


def test_rho_examples():
    np.testing.assert_allclose(
        rho_matrix(SubgroupRep(2, 2, 2, (1, 2))), np.diag([-1.0, 1.0]), atol=1e-14
    )
    np.testing.assert_allclose(
        rho_matrix(SubgroupRep(2, 1, 1, (1,))), np.diag([1.0]), atol=1e-14
    )
    np.testing.assert_allclose(
        rho_matrix(SubgroupRep(4, 4, 3, (1, 2, 3))),
        np.diag([1j, -1.0, -1j]),
        atol=1e-14,
    )


@given(st.integers(1, 8), st.data())
@settings(max_examples=60, deadline=None)
def test_rho_is_unitary_of_order_d(n, data):
    r = data.draw(st.integers(1, 4))
    members = enumerate_family(n, r)
    h = data.draw(st.sampled_from(members))
    rho = rho_matrix(h)
    assert np.allclose(rho @ rho.conj().T, np.eye(r), atol=1e-12)
    power = np.linalg.matrix_power(rho, h.d)
    assert np.allclose(power, np.eye(r), atol=1e-10)


def test_restriction_hom_examples():
    h0 = restriction_hom(subgroup_Hk(0, 2))
    assert (h0.target_order, h0.sigma_image, h0.x_images) == (2, 1, (0, 0))
    h1 = restriction_hom(subgroup_Hk(1, 2))
    assert (h1.target_order, h1.sigma_image, h1.x_images) == (2, 1, (1, 0))
    k31 = restriction_hom(subgroup_K(3, 1, 3, 2))
    assert (k31.target_order, k31.sigma_image, k31.x_images) == (3, 1, (1, 0))


def test_invalid_subgroups_rejected():
    with pytest.raises(ValueError):
        SubgroupRep(n=4, d=3, r=2, m=(1, 2))
    with pytest.raises(ValueError):
        SubgroupRep(n=4, d=2, r=2, m=(1, 3))
    with pytest.raises(ValueError):
        SubgroupRep(n=4, d=2, r=2, m=(1,))


def test_json_round_trip():
    for h in enumerate_family(6, 2):
        blob = json.dumps(h.to_json())
        assert SubgroupRep.from_json(json.loads(blob)) == h
