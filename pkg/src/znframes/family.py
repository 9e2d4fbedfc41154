"""Subgroup families of Z_n x U(r) with trivial U(r) intersection.

Each subgroup is cyclic, generated by a pair (primitive d-th root of unity,
diagonal unitary with weight exponents m).  The enumeration covers one
representative per (divisor d, composition of r into d parts); the Z_2
family H_k and the one-hot subgroups K_{d,j} are named constructors into
the same encoding.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class SubgroupRep:
    """Cyclic subgroup of Z_n x U(r): generator (lambda, diag(lambda^m_j)).

    lambda is the primitive d-th root exp(2*pi*i/d); d divides n; each
    weight exponent m_j lies in {1, ..., d}.
    """

    n: int
    d: int
    r: int
    m: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.d < 1 or self.r < 1:
            raise ValueError("n, d, r must be positive")
        if self.n % self.d != 0:
            raise ValueError(f"d={self.d} does not divide n={self.n}")
        if len(self.m) != self.r:
            raise ValueError(f"weight vector has length {len(self.m)}, expected r={self.r}")
        if any(not 1 <= mj <= self.d for mj in self.m):
            raise ValueError(f"weights must lie in 1..{self.d}: {self.m}")

    @property
    def generator_power(self) -> int:
        """Exponent p such that gamma^p is the Z_n component of the generator."""
        return self.n // self.d

    def weight_multiplicities(self) -> tuple[int, ...]:
        """Composition (s_1, ..., s_d): s_i = number of weights equal to i."""
        counts = [0] * self.d
        for mj in self.m:
            counts[mj - 1] += 1
        return tuple(counts)

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "r": self.r, "m": list(self.m)}

    @staticmethod
    def from_json(obj: dict) -> "SubgroupRep":
        return SubgroupRep(n=obj["n"], d=obj["d"], r=obj["r"], m=tuple(obj["m"]))


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of nonnegative parts with a fixed sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise ValueError(f"parts must be nonnegative: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`, lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def weights_from_composition(s: tuple[int, ...]) -> tuple[int, ...]:
    """s_1 copies of 1, then s_2 copies of 2, ...; ascending by construction."""
    return tuple(i + 1 for i, si in enumerate(s) for _ in range(si))


def enumerate_family(n: int, r: int) -> list[SubgroupRep]:
    """All subgroups H_{d,s}: d | n, s a composition of r into d parts.

    Deterministic order: d ascending, compositions lexicographic.  The count
    is sum over d | n of C(r+d-1, d-1).
    """
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    out = []
    for d in divisors(n):
        for s in compositions(r, d):
            out.append(SubgroupRep(n=n, d=d, r=r, m=weights_from_composition(s)))
    return out


def subgroup_Hk(k: int, r: int) -> SubgroupRep:
    """Z_2 family member: k leading weights -1, the rest +1; k=-1 is trivial.

    H_0 is generated by (-1, I_r), H_r by (-1, -I_r).
    """
    if not -1 <= k <= r:
        raise ValueError(f"k={k} outside -1..{r}")
    if k == -1:
        return SubgroupRep(n=2, d=1, r=r, m=(1,) * r)
    return SubgroupRep(n=2, d=2, r=r, m=(1,) * k + (2,) * (r - k))


def subgroup_K(d: int, j: int, n: int, r: int) -> SubgroupRep:
    """Subgroup generated by (lambda, diag(lambda^j, 1, ..., 1)), lambda^d = 1."""
    if n % d != 0:
        raise ValueError(f"d={d} does not divide n={n}")
    if not 1 <= j <= d:
        raise ValueError(f"j={j} outside 1..{d}")
    return SubgroupRep(n=n, d=d, r=r, m=(j,) + (d,) * (r - 1))


def rho_matrix(h: SubgroupRep):
    """Diagonal unitary diag(lambda^{m_1}, ..., lambda^{m_r}), lambda = exp(2*pi*i/d)."""
    import numpy as np

    lam = cmath.exp(2j * cmath.pi / h.d)
    return np.diag([lam ** mj for mj in h.m])


def restriction_hom(h: SubgroupRep):
    """Character-level data of the restriction to h: where sigma and x_j land.

    The generator of h is (gamma^{n/d}, diag(lambda^{m_j})); sigma evaluates
    on it to the standard generator character tau of Z_d, and x_j to tau^{m_j}.
    """
    from .character_ring import RestrictionMap

    return RestrictionMap(
        target_order=h.d,
        sigma_image=1 % h.d,
        x_images=tuple(mj % h.d for mj in h.m),
        ambient=(h.n, h.r),
    )


def family_to_json(subgroups: list[SubgroupRep]) -> str:
    return json.dumps([h.to_json() for h in subgroups])


def family_size(n: int, r: int) -> int:
    """Closed-form count: sum over d | n of C(r+d-1, d-1)."""
    return sum(math.comb(r + d - 1, d - 1) for d in divisors(n))
