"""The associated rank-r vector bundle over the Grassmannian and its
identification with the tautological bundle of the weighted cyclic module.

A bundle point is a (frame, fiber coordinate) pair; its image under the
identification is (projector onto the frame's span, the coordinate vector
expanded in the frame).  The cyclic group acts on frames with trivial
unitary part, on ambient vectors coordinatewise by gamma^k, and on
projectors by conjugation with that coordinate phase matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .stiefel import Frame, GrassmannPoint, GroupElement, act, phase_vector, projector


@dataclass(frozen=True)
class BundlePoint:
    """Representative (frame, y) of a class in the frame-bundle quotient."""

    frame: Frame
    y: np.ndarray

    def __post_init__(self):
        y = np.asarray(self.y, dtype=complex)
        if y.shape != (self.frame.r,):
            raise ValueError(f"fiber coordinate must have shape ({self.frame.r},)")
        if not np.all(np.isfinite(y.view(float))):
            raise ValueError("fiber coordinate must be finite")
        y.setflags(write=False)
        object.__setattr__(self, "y", y)

    def to_json(self) -> dict:
        return {
            "frame": self.frame.to_json(),
            "y": [[float(z.real), float(z.imag)] for z in self.y],
        }


@dataclass(frozen=True)
class CanonicalPoint:
    """(plane, vector in the plane) in the tautological bundle."""

    plane: GrassmannPoint
    z: np.ndarray
    eps: float = 1e-9

    def __post_init__(self):
        z = np.asarray(self.z, dtype=complex)
        if z.shape != (self.plane.s,):
            raise ValueError(f"vector must have shape ({self.plane.s},)")
        norm = np.linalg.norm(z)
        residual = np.linalg.norm(self.plane.projector @ z - z)
        if norm > 0 and residual > self.eps * norm:
            raise ValueError(
                f"vector does not lie in the plane: residual {residual:.3e}"
            )
        z.setflags(write=False)
        object.__setattr__(self, "z", z)

    def to_json(self) -> dict:
        P = self.plane.projector
        return {
            "P": [[[float(v.real), float(v.imag)] for v in row] for row in P],
            "z": [[float(v.real), float(v.imag)] for v in self.z],
        }


def module_action(p: int, z: np.ndarray, n: int) -> np.ndarray:
    """Coordinate k of z scaled by gamma^{p k}, gamma = exp(2*pi*i/n), k 1-indexed."""
    z = np.asarray(z, dtype=complex)
    return z * phase_vector(n, p, z.shape[-1])


def plane_action(p: int, plane: GrassmannPoint, n: int) -> GrassmannPoint:
    """Induced action on projectors: conjugation by the coordinate phase matrix."""
    d = phase_vector(n, p, plane.s)
    return GrassmannPoint(plane.projector * np.outer(d, d.conj()), eps=plane.eps)


def f_map(pt: BundlePoint) -> CanonicalPoint:
    """(frame, y) -> (span projector, sum_i y_i v_i); a fiberwise isometry."""
    z = pt.frame.rows.T @ pt.y
    return CanonicalPoint(plane=projector(pt.frame), z=z)


def f_inverse(cp: CanonicalPoint, frame: Frame, eps: float = 1e-8) -> BundlePoint:
    """Recover fiber coordinates of cp.z in the given frame for the same plane."""
    if frame.s != cp.plane.s:
        raise ValueError("truncation mismatch between frame and plane")
    if projector(frame).distance(cp.plane) > eps:
        raise ValueError("frame does not span the given plane")
    y = frame.rows.conj() @ cp.z
    return BundlePoint(frame=frame, y=y)


def gamma_act_bundle(p: int, pt: BundlePoint, n: int) -> BundlePoint:
    """Cyclic action on the quotient: move the frame, keep the coordinates."""
    g = GroupElement(n, p, np.eye(pt.frame.r, dtype=complex))
    return BundlePoint(frame=act(g, pt.frame), y=pt.y)
