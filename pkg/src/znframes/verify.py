"""Seeded property suites behind the CLI verification subcommands.

Each suite runs a fixed number of randomized trials from an explicit seed
and reports worst-case residuals together with a pass flag, so a report
can be re-verified by rerunning with the same seed.
"""

from __future__ import annotations

import numpy as np

from .bundle import (
    BundlePoint,
    f_inverse,
    f_map,
    gamma_act_bundle,
    module_action,
    plane_action,
)
from .stiefel import (
    Frame,
    GroupElement,
    act,
    projector,
    random_frame,
    random_unitary,
    right_act,
    trivial_stabilizer_check,
)


def action_suite(
    trials: int,
    seed: int,
    max_n: int = 8,
    max_r: int = 4,
    max_s: int = 16,
    tol: float = 1e-10,
    composed_tol: float = 1e-9,
    composed_length: int = 100,
) -> dict:
    """Associativity, identity, frame preservation, and left/right compatibility."""
    rng = np.random.default_rng(seed)
    max_assoc = 0.0
    max_ident = 0.0
    max_ortho = 0.0
    max_compat = 0.0
    for trial in range(trials):
        n = int(rng.integers(1, max_n + 1))
        r = int(rng.integers(1, max_r + 1))
        s = int(rng.integers(r, max_s + 1))
        v = random_frame(r, s, seed=int(rng.integers(0, 2**31)))
        g1 = GroupElement(n, int(rng.integers(0, n)), random_unitary(r, rng))
        g2 = GroupElement(n, int(rng.integers(0, n)), random_unitary(r, rng))

        lhs = act(g1.compose(g2), v)
        rhs = act(g1, act(g2, v))
        max_assoc = max(max_assoc, float(np.max(np.abs(lhs.rows - rhs.rows))))

        ident = act(GroupElement.identity(n, r), v)
        max_ident = max(max_ident, float(np.max(np.abs(ident.rows - v.rows))))

        max_ortho = max(max_ortho, lhs.orthonormality_residual())

        p = int(rng.integers(0, n))
        rot = GroupElement(n, p, np.eye(r, dtype=complex))
        a = random_unitary(r, rng)
        compat = np.abs(act(rot, right_act(v, a)).rows - right_act(act(rot, v), a).rows)
        max_compat = max(max_compat, float(np.max(compat)))

    n, r, s = max_n, max_r, max_s
    v = random_frame(r, s, seed=seed)
    for _ in range(composed_length):
        g = GroupElement(n, int(rng.integers(0, n)), random_unitary(r, rng))
        v = Frame(act(g, v).rows, eps=1e-8)
    composed_residual = v.orthonormality_residual()

    report = {
        "trials": trials,
        "seed": seed,
        "max_associativity_residual": max_assoc,
        "max_identity_residual": max_ident,
        "max_orthonormality_residual": max_ortho,
        "max_left_right_compat_residual": max_compat,
        "composed_actions": composed_length,
        "composed_orthonormality_residual": composed_residual,
        "tolerance": tol,
        "composed_tolerance": composed_tol,
    }
    report["pass"] = bool(
        max_assoc <= tol
        and max_ident <= tol
        and max_ortho <= tol
        and max_compat <= tol
        and composed_residual <= composed_tol
    )
    return report


def equivariance_suite(
    trials: int,
    seed: int,
    max_n: int = 8,
    max_r: int = 4,
    max_s: int = 12,
    tol: float = 1e-10,
) -> dict:
    """Well-definedness, fiber isometry, round trip, and the equivariance square."""
    rng = np.random.default_rng(seed)
    max_welldef = 0.0
    max_isometry = 0.0
    max_roundtrip = 0.0
    max_square = 0.0
    max_cycle = 0.0
    for trial in range(trials):
        n = int(rng.integers(1, max_n + 1))
        r = int(rng.integers(1, max_r + 1))
        s = int(rng.integers(r, max_s + 1))
        frame = random_frame(r, s, seed=int(rng.integers(0, 2**31)))
        y = rng.standard_normal(r) + 1j * rng.standard_normal(r)
        pt = BundlePoint(frame=frame, y=y)
        cp = f_map(pt)

        a = random_unitary(r, rng)
        translated = BundlePoint(frame=right_act(frame, a), y=a.conj().T @ y)
        cp2 = f_map(translated)
        max_welldef = max(
            max_welldef,
            cp.plane.distance(cp2.plane),
            float(np.max(np.abs(cp.z - cp2.z))),
        )

        max_isometry = max(
            max_isometry,
            abs(float(np.linalg.norm(cp.z)) - float(np.linalg.norm(y))),
        )

        back = f_inverse(cp, frame)
        max_roundtrip = max(max_roundtrip, float(np.max(np.abs(back.y - y))))

        p = int(rng.integers(0, n))
        lhs = f_map(gamma_act_bundle(p, pt, n))
        expected_plane = plane_action(p, cp.plane, n)
        expected_z = module_action(p, cp.z, n)
        max_square = max(
            max_square,
            lhs.plane.distance(expected_plane),
            float(np.max(np.abs(lhs.z - expected_z))),
        )

        cycled = pt
        for _ in range(n):
            cycled = gamma_act_bundle(1, cycled, n)
        cp_cycled = f_map(cycled)
        max_cycle = max(
            max_cycle,
            cp.plane.distance(cp_cycled.plane),
            float(np.max(np.abs(cp.z - cp_cycled.z))),
        )

    report = {
        "trials": trials,
        "seed": seed,
        "max_well_definedness_residual": max_welldef,
        "max_fiber_isometry_residual": max_isometry,
        "max_round_trip_residual": max_roundtrip,
        "max_equivariance_residual": max_square,
        "max_full_cycle_residual": max_cycle,
        "tolerance": tol,
    }
    report["pass"] = bool(
        max_welldef <= tol
        and max_isometry <= tol
        and max_roundtrip <= tol
        and max_square <= tol
        and max_cycle <= 10 * tol
    )
    return report


def freeness_suite(
    trials: int,
    seed: int,
    max_r: int = 4,
    max_s: int = 16,
    min_offset: float = 1e-3,
    min_move: float = 1e-6,
) -> dict:
    """Unitaries away from the identity must move every frame."""
    rng = np.random.default_rng(seed)
    smallest_move = float("inf")
    checks = 0
    for trial in range(trials):
        r = int(rng.integers(1, max_r + 1))
        s = int(rng.integers(r, max_s + 1))
        v = random_frame(r, s, seed=int(rng.integers(0, 2**31)))
        a = random_unitary(r, rng)
        if np.max(np.abs(a - np.eye(r))) < min_offset:
            continue
        checks += 1
        g = GroupElement(1, 0, a)
        move = float(np.max(np.abs(act(g, v).rows - v.rows)))
        smallest_move = min(smallest_move, move)
        if not trivial_stabilizer_check(v, a):
            smallest_move = 0.0
    report = {
        "trials": trials,
        "checked": checks,
        "seed": seed,
        "min_identity_offset": min_offset,
        "required_min_move": min_move,
        "smallest_move": smallest_move,
    }
    report["pass"] = bool(checks > 0 and smallest_move >= min_move)
    return report
