"""Truncated Stiefel manifolds with the left Z_n x U(r) action.

A frame is r orthonormal rows in C^s.  Coordinates are 1-indexed: the
cyclic generator scales coordinate k by gamma^k, so the index convention
is part of the contract (an off-by-one silently breaks every fixed-point
pattern).  The left action mixes rows by the conjugated unitary and
applies the coordinate phases; the right U(r) action and the Grassmannian
projector live on the same data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .family import SubgroupRep, rho_matrix

CONSTRUCTION_EPS = 1e-10
FIXED_POINT_TOL = 1e-12


@dataclass(frozen=True)
class Frame:
    """r orthonormal row vectors in C^s (r <= s)."""

    rows: np.ndarray
    eps: float = CONSTRUCTION_EPS

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=complex)
        if rows.ndim != 2:
            raise ValueError(f"frame rows must be a 2-d array, got shape {rows.shape}")
        r, s = rows.shape
        if r > s:
            raise ValueError(f"rank {r} exceeds truncation {s}")
        gram = rows @ rows.conj().T
        if r and np.max(np.abs(gram - np.eye(r))) > self.eps:
            raise ValueError(
                f"rows are not orthonormal within {self.eps}: "
                f"max deviation {np.max(np.abs(gram - np.eye(r))):.3e}"
            )
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)

    @property
    def r(self) -> int:
        return self.rows.shape[0]

    @property
    def s(self) -> int:
        return self.rows.shape[1]

    def orthonormality_residual(self) -> float:
        if self.r == 0:
            return 0.0
        gram = self.rows @ self.rows.conj().T
        return float(np.max(np.abs(gram - np.eye(self.r))))

    def padded(self, s: int) -> "Frame":
        """Zero-pad to a larger truncation."""
        if s < self.s:
            raise ValueError("cannot shrink a frame by padding")
        out = np.zeros((self.r, s), dtype=complex)
        out[:, : self.s] = self.rows
        return Frame(out, eps=self.eps)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "rows": [[[float(z.real), float(z.imag)] for z in row] for row in self.rows],
        }

    @staticmethod
    def from_json(obj: dict, eps: float = CONSTRUCTION_EPS) -> "Frame":
        rows = np.array(
            [[complex(re, im) for re, im in row] for row in obj["rows"]], dtype=complex
        ).reshape(obj["r"], obj["s"])
        return Frame(rows, eps=eps)


@dataclass(frozen=True)
class GroupElement:
    """(gamma^p, a) in Z_n x U(r), gamma = exp(2*pi*i/n)."""

    n: int
    p: int
    a: np.ndarray
    eps: float = CONSTRUCTION_EPS

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        a = np.asarray(self.a, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("a must be square")
        dev = np.max(np.abs(a @ a.conj().T - np.eye(a.shape[0])))
        if dev > self.eps:
            raise ValueError(f"a is not unitary within {self.eps}: deviation {dev:.3e}")
        a.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", self.p % self.n)

    @property
    def r(self) -> int:
        return self.a.shape[0]

    def compose(self, other: "GroupElement") -> "GroupElement":
        """(p, a) * (p', a') = (p + p', a a')."""
        if self.n != other.n or self.r != other.r:
            raise ValueError("group element shape mismatch")
        return GroupElement(self.n, self.p + other.p, self.a @ other.a, eps=self.eps)

    @staticmethod
    def identity(n: int, r: int) -> "GroupElement":
        return GroupElement(n, 0, np.eye(r, dtype=complex))


@dataclass(frozen=True)
class GrassmannPoint:
    """Rank-r orthogonal projector onto an r-plane in C^s."""

    projector: np.ndarray
    eps: float = CONSTRUCTION_EPS

    def __post_init__(self):
        P = np.asarray(self.projector, dtype=complex)
        if P.ndim != 2 or P.shape[0] != P.shape[1]:
            raise ValueError("projector must be square")
        if np.max(np.abs(P - P.conj().T)) > self.eps:
            raise ValueError("projector is not Hermitian within tolerance")
        if np.max(np.abs(P @ P - P)) > self.eps:
            raise ValueError("projector is not idempotent within tolerance")
        P.setflags(write=False)
        object.__setattr__(self, "projector", P)

    @property
    def s(self) -> int:
        return self.projector.shape[0]

    def rank(self) -> int:
        return int(round(float(np.trace(self.projector).real)))

    def distance(self, other: "GrassmannPoint") -> float:
        return float(np.max(np.abs(self.projector - other.projector)))


def phase_vector(n: int, p: int, s: int) -> np.ndarray:
    """gamma^{p*k} for k = 1..s."""
    k = np.arange(1, s + 1)
    return np.exp(2j * np.pi * p * k / n)


def act(g: GroupElement, v: Frame) -> Frame:
    """Left action: w_j^k = gamma^{p k} * sum_i conj(a_ji) v_i^k."""
    if g.r != v.r:
        raise ValueError(f"rank mismatch: element {g.r}, frame {v.r}")
    mixed = g.a.conj() @ v.rows
    return Frame(mixed * phase_vector(g.n, g.p, v.s)[None, :], eps=v.eps)


def right_act(v: Frame, a: np.ndarray) -> Frame:
    """Right action v . a: row j of output is sum_i a_ij v_i."""
    a = np.asarray(a, dtype=complex)
    if a.shape != (v.r, v.r):
        raise ValueError(f"a must be {v.r}x{v.r}")
    dev = np.max(np.abs(a @ a.conj().T - np.eye(v.r))) if v.r else 0.0
    if dev > v.eps:
        raise ValueError(f"a is not unitary within {v.eps}: deviation {dev:.3e}")
    return Frame(a.T @ v.rows, eps=v.eps)


def projector(v: Frame) -> GrassmannPoint:
    """Orthogonal projector onto the row span; invariant under right_act."""
    return GrassmannPoint(v.rows.T @ v.rows.conj(), eps=max(v.eps, 10 * CONSTRUCTION_EPS))


def subgroup_generator(h: SubgroupRep) -> GroupElement:
    """The generating pair (gamma^{n/d}, diag(lambda^{m_j}))."""
    return GroupElement(h.n, h.generator_power, rho_matrix(h))


def fixed_support_pattern(h: SubgroupRep, s: int) -> np.ndarray:
    """Boolean r x s mask: entry (j, k) allowed iff k = m_j (mod d), k 1-indexed."""
    k = np.arange(1, s + 1)
    return np.array([(k % h.d) == (mj % h.d) for mj in h.m])


def off_pattern_mass(v: Frame, h: SubgroupRep) -> float:
    """Largest entry magnitude outside the allowed support pattern."""
    mask = fixed_support_pattern(h, v.s)
    off = np.abs(v.rows)[~mask]
    return float(off.max()) if off.size else 0.0


def is_fixed(v: Frame, h: SubgroupRep, tol: float = FIXED_POINT_TOL) -> bool:
    """True iff the subgroup generator moves the frame by at most tol (max norm)."""
    if h.r != v.r:
        raise ValueError("rank mismatch between frame and subgroup")
    moved = act(subgroup_generator(h), v)
    return bool(np.max(np.abs(moved.rows - v.rows)) <= tol)


def fixed_point_factors(h: SubgroupRep, s: int) -> list[tuple[int, int]]:
    """Stiefel factors (s_i, c_i) of the fixed set at truncation s.

    s_i counts rows of weight i, c_i the coordinates k <= s with
    k = i (mod d); the fixed set is the product of the V_{s_i, c_i}.
    """
    mults = h.weight_multiplicities()
    k = np.arange(1, s + 1)
    return [
        (mults[i - 1], int(np.count_nonzero(k % h.d == i % h.d)))
        for i in range(1, h.d + 1)
    ]


def fixed_set_dimension(h: SubgroupRep, s: int) -> int:
    """Real dimension: sum of 2 s_i c_i - s_i^2 over the weight classes."""
    return sum(2 * si * ci - si * si for si, ci in fixed_point_factors(h, s))


def _class_rows(h: SubgroupRep, i: int) -> list[int]:
    return [j for j, mj in enumerate(h.m) if mj == i]


def _class_columns(h: SubgroupRep, i: int, s: int) -> list[int]:
    return [k - 1 for k in range(1, s + 1) if k % h.d == i % h.d]


def embed_product(components: Sequence[Frame], h: SubgroupRep, s: int) -> Frame:
    """Scatter per-weight-class frames onto their residue-class coordinates.

    Component i must be an (s_i, c_i) frame per fixed_point_factors; the
    result is a fixed frame of h, and split_fixed_frame inverts exactly.
    """
    factors = fixed_point_factors(h, s)
    if len(components) != len(factors):
        raise ValueError(f"expected {len(factors)} components, got {len(components)}")
    out = np.zeros((h.r, s), dtype=complex)
    for i, (component, (si, ci)) in enumerate(zip(components, factors), start=1):
        if component.r != si or component.s != ci:
            raise ValueError(
                f"component {i} has shape ({component.r},{component.s}), expected ({si},{ci})"
            )
        rows = _class_rows(h, i)
        cols = _class_columns(h, i, s)
        for local_row, j in enumerate(rows):
            out[j, cols] = component.rows[local_row]
    return Frame(out)


def split_fixed_frame(
    v: Frame, h: SubgroupRep, tol: float = FIXED_POINT_TOL
) -> list[Frame]:
    """Gather the residue-class blocks of a fixed frame into per-class frames."""
    mass = off_pattern_mass(v, h)
    if mass > tol:
        raise ValueError(f"frame is not fixed: off-pattern mass {mass:.3e} > {tol}")
    out = []
    for i in range(1, h.d + 1):
        rows = _class_rows(h, i)
        cols = _class_columns(h, i, v.s)
        block = v.rows[np.ix_(rows, cols)] if rows else np.zeros((0, len(cols)))
        out.append(Frame(np.asarray(block, dtype=complex)))
    return out


def trivial_stabilizer_check(v: Frame, a: np.ndarray, tol: float = 1e-10) -> bool:
    """If (1, a) fixes the frame, a must be near the identity.

    Vacuously true when the action moves the frame; a falsification probe
    for the freeness of the U(r) part.
    """
    g = GroupElement(1, 0, a)
    moved = act(g, v)
    if np.max(np.abs(moved.rows - v.rows)) > tol:
        return True
    return bool(np.max(np.abs(np.asarray(a) - np.eye(v.r))) <= np.sqrt(tol))


def random_frame(r: int, s: int, seed: int, eps: float = 1e-12) -> Frame:
    """Seeded Gaussian frame, orthonormalized; deterministic per seed."""
    from .homotopy import gram_schmidt

    if r > s:
        raise ValueError("need r <= s")
    if r == 0:
        return Frame(np.zeros((0, s), dtype=complex))
    rng = np.random.default_rng(seed)
    for _ in range(8):
        raw = rng.standard_normal((r, s)) + 1j * rng.standard_normal((r, s))
        try:
            frame = gram_schmidt(list(raw), tol=1e-8)
        except ValueError:
            continue
        if frame.orthonormality_residual() <= eps:
            return frame
    raise RuntimeError("failed to draw a well-conditioned random frame")


def random_unitary(r: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
    q, rr = np.linalg.qr(z)
    return q * (np.diagonal(rr) / np.abs(np.diagonal(rr)))


def frame_to_json_str(v: Frame) -> str:
    return json.dumps(v.to_json())


def frame_from_json_str(text: str) -> Frame:
    return Frame.from_json(json.loads(text))
