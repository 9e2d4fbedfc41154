"""Interleaving homotopies on frames and their exact determinant check.

The coordinate-spreading maps move a vector of length s into C^{2s},
linearly interpolating between inclusion and the even/odd interleaving.
The first-projection matrix of the spreading map is banded; its
determinant is computed exactly over integer polynomials in t.  The
frame-level homotopy applies the spreading map rowwise and restores
orthonormality with classical Gram-Schmidt.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .stiefel import Frame


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @staticmethod
    def parse(text: str) -> "Parity":
        try:
            return Parity(text.lower())
        except ValueError:
            raise ValueError(f"parity must be 'even' or 'odd', got {text!r}") from None


@dataclass(frozen=True)
class UnivariatePolynomial:
    """Exact integer polynomial in t, coefficients ascending, no trailing zeros."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @staticmethod
    def from_list(coeffs: Sequence[int]) -> "UnivariatePolynomial":
        return UnivariatePolynomial(tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UnivariatePolynomial(tuple(out))

    def __neg__(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self + (-other)

    def __mul__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return UnivariatePolynomial(tuple(out))

    def __pow__(self, k: int) -> "UnivariatePolynomial":
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def divmod_exact(
        self, divisor: "UnivariatePolynomial"
    ) -> tuple["UnivariatePolynomial", "UnivariatePolynomial"]:
        """Polynomial division assuming every coefficient quotient is integral."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coefficients)
        dcoeffs = divisor.coefficients
        lead = dcoeffs[-1]
        quot = [0] * max(len(rem) - len(dcoeffs) + 1, 0)
        for shift in range(len(quot) - 1, -1, -1):
            head = rem[shift + len(dcoeffs) - 1]
            if head % lead != 0:
                raise ArithmeticError("inexact polynomial division")
            q = head // lead
            quot[shift] = q
            if q:
                for i, c in enumerate(dcoeffs):
                    rem[shift + i] -= q * c
        return UnivariatePolynomial(tuple(quot)), UnivariatePolynomial(tuple(rem))

    def exact_div(self, divisor: "UnivariatePolynomial") -> "UnivariatePolynomial":
        q, r = self.divmod_exact(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"non-exact division: remainder {r}")
        return q

    def __call__(self, t: float) -> float:
        out = 0.0
        for c in reversed(self.coefficients):
            out = out * t + c
        return out

    def __str__(self):
        if self.is_zero():
            return "0"
        chunks = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "t" if mag == 1 else f"{mag}*t"
            else:
                body = f"t^{i}" if mag == 1 else f"{mag}*t^{i}"
            if not chunks:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append((" + " if c > 0 else " - ") + body)
        return "".join(chunks)


ZERO = UnivariatePolynomial(())
ONE = UnivariatePolynomial((1,))
T = UnivariatePolynomial((0, 1))
ONE_MINUS_T = UnivariatePolynomial((1, -1))


def binomial_expansion_one_minus_t(n: int) -> UnivariatePolynomial:
    """(1-t)^n by binomial coefficients; independent of polynomial arithmetic."""
    import math

    return UnivariatePolynomial(
        tuple(((-1) ** k) * math.comb(n, k) for k in range(n + 1))
    )


# -- the spreading maps ---------------------------------------------------------


def g(v: np.ndarray, t: float, parity: Parity) -> np.ndarray:
    """Interpolate between inclusion C^s -> C^{2s} and the parity interleaving."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    v = np.asarray(v, dtype=complex)
    s = v.shape[-1]
    out = np.zeros(v.shape[:-1] + (2 * s,), dtype=complex)
    out[..., :s] = (1.0 - t) * v
    if parity is Parity.EVEN:
        out[..., 1::2] += t * v
    else:
        out[..., 0::2] += t * v
    return out


def band_matrix(n: int, parity: Parity) -> list[list[UnivariatePolynomial]]:
    """First-projection matrix of the spreading map as integer polynomials.

    Both parities are cut from the same (n+1)-size band pattern with
    uniform diagonal 1-t and a sub-band of t entries; even parity drops the
    leading row and column, odd parity the trailing ones.  Either cut has
    determinant exactly (1-t)^n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    M = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        M[j][j] = ONE_MINUS_T
    if parity is Parity.EVEN:
        # t at (2k, k), 1-indexed
        for k in range(1, n // 2 + 1):
            M[2 * k - 1][k - 1] = T
    else:
        # t at (2k+1, k+1), 1-indexed
        for k in range(1, (n - 1) // 2 + 1):
            M[2 * k][k] = T
    return M


def det_exact(matrix: Sequence[Sequence[UnivariatePolynomial]]) -> UnivariatePolynomial:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return ONE
    M = [list(row) for row in matrix]
    sign = 1
    denom = ONE
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(denom)
            M[i][k] = ZERO
        denom = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


def sphere_G(v: np.ndarray, t: float, parity: Parity, eps: float = 1e-10) -> np.ndarray:
    """Normalized spreading map on unit vectors; defined for every t in [0, 1]."""
    v = np.asarray(v, dtype=complex)
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > eps:
        raise ValueError(f"input is not a unit vector: norm {norm}")
    image = g(v, t, parity)
    return image / np.linalg.norm(image)


def gram_schmidt(vectors: Sequence[np.ndarray], tol: Optional[float] = None) -> Frame:
    """Classical Gram-Schmidt with normalization; preserves the flag of spans."""
    vecs = [np.asarray(v, dtype=complex) for v in vectors]
    if not vecs:
        raise ValueError("need at least one vector")
    scale = max(float(np.linalg.norm(v)) for v in vecs)
    if tol is None:
        tol = 1e-12 * scale
    rows = []
    for v in vecs:
        u = v.copy()
        for w in rows:
            u = u - np.vdot(w, u) * w
        norm = np.linalg.norm(u)
        if norm <= tol:
            raise ValueError(
                f"vector {len(rows) + 1} is dependent on its predecessors within {tol}"
            )
        rows.append(u / norm)
    return Frame(np.array(rows))


def G_map(v: Frame, t: float, parity: Parity) -> Frame:
    """Framewise spreading followed by Gram-Schmidt; endpoint-exact homotopy."""
    images = [g(row, t, parity) for row in v.rows]
    return gram_schmidt(images)


def parity_leak(v: Frame, parity: Parity) -> float:
    """Largest entry magnitude on the coordinates the parity subspace forbids."""
    if parity is Parity.EVEN:
        forbidden = v.rows[:, 0::2]  # odd 1-indexed coordinates
    else:
        forbidden = v.rows[:, 1::2]
    return float(np.max(np.abs(forbidden))) if forbidden.size else 0.0


def gram_min_eigenvalue(vectors: Sequence[np.ndarray]) -> float:
    """Smallest eigenvalue of the Gram matrix of the raw (pre-GS) images."""
    W = np.array([np.asarray(v, dtype=complex) for v in vectors])
    gram = W @ W.conj().T
    return float(np.min(np.linalg.eigvalsh(gram)))


def homotopy_trace(
    v: Frame, parity: Parity, grid: int
) -> list[dict]:
    """Per-grid-point diagnostics of the frame homotopy."""
    if grid < 2:
        raise ValueError("grid needs at least two points")
    out = []
    for i in range(grid):
        t = i / (grid - 1)
        images = [g(row, t, parity) for row in v.rows]
        moved = gram_schmidt(images)
        out.append(
            {
                "t": t,
                "orthonormality_residual": moved.orthonormality_residual(),
                "parity_leak": parity_leak(moved, parity),
                "gram_min_eig": gram_min_eigenvalue(images),
            }
        )
    return out
