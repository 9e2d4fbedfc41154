"""Window-bounded ideal membership, containment, and adic-topology reports.

Kernel ideals are never materialized; membership is decided by restriction.
Generated-ideal membership is an exact integer lattice problem over a
stated exponent window, so every negative answer is only valid within that
window and is reported as NO_WITHIN_WINDOW, never as unbounded
non-membership.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .character_ring import (
    CharacterMonomial,
    CharacterPolynomial,
    CyclicElement,
    format_polynomial,
    in_kernel,
    restrict,
)
from .family import SubgroupRep, restriction_hom
from .hnf import integer_kernel_basis, solve_lattice_membership

YES = "YES"
NO_WITHIN_WINDOW = "NO_WITHIN_WINDOW"
CONTAINED = "CONTAINED"
NOT_CONTAINED = "NOT_CONTAINED"
NONE_WITHIN_BOUNDS = "NONE_WITHIN_BOUNDS"


@dataclass(frozen=True)
class KernelIdeal:
    """Intersection of restriction kernels; a single subgroup is the plain I_H."""

    subgroups: tuple[SubgroupRep, ...]

    def __post_init__(self):
        if not self.subgroups:
            raise ValueError("kernel ideal needs at least one subgroup")

    def describe(self) -> dict:
        return {
            "kind": "kernel",
            "subgroups": [h.to_json() for h in self.subgroups],
        }


@dataclass(frozen=True)
class GeneratedIdeal:
    generators: tuple[CharacterPolynomial, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("generated ideal needs at least one generator")

    def describe(self) -> dict:
        return {
            "kind": "generated",
            "generators": [format_polynomial(g) for g in self.generators],
        }


IdealSpec = Union[KernelIdeal, GeneratedIdeal]


@dataclass(frozen=True)
class WitnessTerm:
    """coefficient * (multiplier monomial) * (product of listed generators)."""

    coefficient: int
    multiplier: CharacterMonomial
    generator_indices: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "coefficient": self.coefficient,
            "multiplier": {"a": self.multiplier.a, "e": list(self.multiplier.e)},
            "generators": list(self.generator_indices),
        }


@dataclass(frozen=True)
class PowerMembership:
    verdict: str  # YES or NO_WITHIN_WINDOW
    power: int
    window: int
    witness: tuple[WitnessTerm, ...] = ()

    @property
    def member(self) -> bool:
        return self.verdict == YES

    def reexpand(
        self, generators: Sequence[CharacterPolynomial], ambient
    ) -> CharacterPolynomial:
        """Multiply the witness back out; must equal the tested element."""
        out = CharacterPolynomial.zero(ambient)
        for term in self.witness:
            prod = CharacterPolynomial.monomial(
                term.multiplier.a, term.multiplier.e, ambient, term.coefficient
            )
            for gi in term.generator_indices:
                prod = prod * generators[gi]
            out = out + prod
        return out

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "power": self.power,
            "window": self.window,
            "witness": [t.to_json() for t in self.witness],
        }


def _window_monomials(n: int, r: int, window: int):
    ranges = [range(n)] + [range(-window, window + 1)] * r
    for combo in itertools.product(*ranges):
        yield CharacterMonomial(combo[0], tuple(combo[1:]))


def power_ideal_member(
    f: CharacterPolynomial,
    generators: Sequence[CharacterPolynomial],
    m: int,
    window: int,
) -> PowerMembership:
    """Decide f in (g_1,...,g_k)^m with multiplier exponents bounded by window.

    Exact over the integers: the columns are monomial multiples of the
    degree-m generator products, and membership is lattice membership
    solved by Hermite normal form.  YES carries a witness that re-expands
    to f; NO is only a statement about this window.
    """
    if m < 1:
        raise ValueError("power m must be >= 1")
    n, r = f.ambient
    if window < f.max_laurent_spread():
        raise ValueError(
            f"window {window} smaller than the Laurent spread {f.max_laurent_spread()} of f"
        )
    for g in generators:
        if g.ambient != f.ambient:
            raise ValueError("generator ambient mismatch")

    products: list[tuple[tuple[int, ...], CharacterPolynomial]] = []
    for combo in itertools.combinations_with_replacement(range(len(generators)), m):
        prod = CharacterPolynomial.constant(1, f.ambient)
        for gi in combo:
            prod = prod * generators[gi]
        if not prod.is_zero():
            products.append((combo, prod))
    if not products:
        # every degree-m product vanishes; only the zero element is reachable
        verdict = YES if f.is_zero() else NO_WITHIN_WINDOW
        return PowerMembership(verdict=verdict, power=m, window=window)

    columns: list[CharacterPolynomial] = []
    column_tags: list[tuple[CharacterMonomial, tuple[int, ...]]] = []
    for mu in _window_monomials(n, r, window):
        mu_poly = CharacterPolynomial.monomial(mu.a, mu.e, f.ambient)
        for combo, prod in products:
            columns.append(mu_poly * prod)
            column_tags.append((mu, combo))

    row_index: dict[CharacterMonomial, int] = {}
    for poly in columns:
        for mono in poly.terms:
            row_index.setdefault(mono, len(row_index))
    if any(mono not in row_index for mono in f.terms):
        return PowerMembership(verdict=NO_WITHIN_WINDOW, power=m, window=window)

    nrows = len(row_index)
    col_vectors = []
    for poly in columns:
        vec = [0] * nrows
        for mono, c in poly.terms.items():
            vec[row_index[mono]] = c
        col_vectors.append(vec)
    target = [0] * nrows
    for mono, c in f.terms.items():
        target[row_index[mono]] = c

    solution = solve_lattice_membership(col_vectors, target)
    if solution is None:
        return PowerMembership(verdict=NO_WITHIN_WINDOW, power=m, window=window)
    witness = tuple(
        WitnessTerm(coefficient=z, multiplier=tag[0], generator_indices=tag[1])
        for z, tag in zip(solution, column_tags)
        if z != 0
    )
    return PowerMembership(verdict=YES, power=m, window=window, witness=witness)


# -- spanning sets -------------------------------------------------------------


def monomials_within_degree(ambient, degree: int) -> list[CharacterMonomial]:
    """All sigma^a x^e with 0 <= a < n and |e_1| + ... + |e_r| <= degree."""
    n, r = ambient
    out = []

    def extend(prefix: tuple[int, ...], budget: int):
        if len(prefix) == r:
            for a in range(n):
                out.append(CharacterMonomial(a, prefix))
            return
        for e in range(-budget, budget + 1):
            extend(prefix + (e,), budget - abs(e))

    extend((), degree)
    return sorted(out, key=lambda mo: (mo.a, mo.e))


def kernel_spanning_set(
    ideal: KernelIdeal, ambient, degree: int
) -> list[CharacterPolynomial]:
    """Module spanning set of the ideal truncated to the degree bound.

    Single kernel: consecutive monomial differences within each restriction
    fiber (these span the zero-sum lattice of the fiber).  Intersections
    need the exact integer kernel of the stacked fiber-sum conditions;
    joint-fiber differences alone under-span an intersection.
    """
    monos = monomials_within_degree(ambient, degree)
    maps = [restriction_hom(h) for h in ideal.subgroups]
    for h in maps:
        if h.ambient != ambient:
            raise ValueError("subgroup ambient mismatch")

    if len(maps) == 1:
        fibers: dict[int, list[CharacterMonomial]] = {}
        for mono in monos:
            fibers.setdefault(maps[0].monomial_image(mono), []).append(mono)
        out = []
        for image in sorted(fibers):
            members = fibers[image]
            for prev, cur in zip(members, members[1:]):
                out.append(
                    CharacterPolynomial(ambient, {cur: 1, prev: -1})
                )
        return out

    # conditions: one row per (map, tau power); columns are the monomials
    offsets = []
    total = 0
    for h in maps:
        offsets.append(total)
        total += h.target_order
    rows = []
    for mono in monos:
        vec = [0] * total
        for h, off in zip(maps, offsets):
            vec[off + h.monomial_image(mono)] = 1
        rows.append(vec)
    basis = integer_kernel_basis(rows, total)
    out = []
    for coeffs in basis:
        terms = {mono: c for mono, c in zip(monos, coeffs) if c != 0}
        if terms:
            out.append(CharacterPolynomial(ambient, terms))
    return out


def generated_spanning_set(
    ideal: GeneratedIdeal, ambient, degree: int
) -> list[CharacterPolynomial]:
    """Monomial multiples of the generators staying within the degree bound."""
    out = []
    for mono in monomials_within_degree(ambient, degree):
        mu = CharacterPolynomial.monomial(mono.a, mono.e, ambient)
        for g in ideal.generators:
            prod = mu * g
            if not prod.is_zero() and prod.total_degree() <= degree:
                out.append(prod)
    return out


def spanning_set(ideal: IdealSpec, ambient, degree: int) -> list[CharacterPolynomial]:
    if isinstance(ideal, KernelIdeal):
        return kernel_spanning_set(ideal, ambient, degree)
    return generated_spanning_set(ideal, ambient, degree)


# -- membership in an ideal spec -----------------------------------------------


@dataclass(frozen=True)
class MembershipOutcome:
    member: bool
    verdict: str
    failing_subgroup: Optional[SubgroupRep] = None
    restriction_value: Optional[CyclicElement] = None
    power_result: Optional[PowerMembership] = None

    def certificate_json(self) -> dict:
        if self.member:
            return {"member": True}
        out: dict = {"member": False}
        if self.failing_subgroup is not None:
            out["failing_subgroup"] = self.failing_subgroup.to_json()
            out["restriction"] = list(self.restriction_value.coefficients)
        if self.power_result is not None:
            out["window_verdict"] = self.power_result.verdict
        return out


def ideal_member(
    f: CharacterPolynomial, ideal: IdealSpec, window: int
) -> MembershipOutcome:
    if isinstance(ideal, KernelIdeal):
        for h in ideal.subgroups:
            value = restrict(f, restriction_hom(h))
            if not value.is_zero():
                return MembershipOutcome(
                    member=False,
                    verdict=NOT_CONTAINED,
                    failing_subgroup=h,
                    restriction_value=value,
                )
        return MembershipOutcome(member=True, verdict=YES)
    # the window must at least contain f's support for the solve to be posed
    result = power_ideal_member(
        f, ideal.generators, m=1, window=max(window, f.max_laurent_spread())
    )
    return MembershipOutcome(
        member=result.member,
        verdict=result.verdict,
        power_result=result,
    )


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class ContainmentReport:
    verdict: str
    direction: str
    degree: int
    window: int
    spanning_size: int
    counterexample: Optional[CharacterPolynomial] = None
    counterexample_outcome: Optional[MembershipOutcome] = None

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "direction": self.direction,
            "degree": self.degree,
            "window": self.window,
            "spanning_size": self.spanning_size,
        }
        if self.counterexample is not None:
            out["certificate"] = {
                "element": format_polynomial(self.counterexample),
                **self.counterexample_outcome.certificate_json(),
            }
        else:
            out["certificate"] = {"checked_spanning_elements": self.spanning_size}
        return out


def containment_report(
    A: IdealSpec,
    B: IdealSpec,
    ambient,
    degree: int,
    window: int,
    direction: str = "A->B",
) -> ContainmentReport:
    """Bounded test of A subset-of B over a spanning set of A.

    CONTAINED means every spanning element of A within the degree bound is
    a member of B (window-bounded when B is generated); a counterexample
    carries its failing evaluation.
    """
    elements = spanning_set(A, ambient, degree)
    if not elements:
        if isinstance(A, GeneratedIdeal) and all(g.is_zero() for g in A.generators):
            # the zero ideal sits inside everything
            return ContainmentReport(
                verdict=CONTAINED,
                direction=direction,
                degree=degree,
                window=window,
                spanning_size=0,
            )
        raise ValueError("degree bound too small: no spanning elements found")
    for f in elements:
        outcome = ideal_member(f, B, window)
        if not outcome.member:
            return ContainmentReport(
                verdict=NOT_CONTAINED,
                direction=direction,
                degree=degree,
                window=window,
                spanning_size=len(elements),
                counterexample=f,
                counterexample_outcome=outcome,
            )
    return ContainmentReport(
        verdict=CONTAINED,
        direction=direction,
        degree=degree,
        window=window,
        spanning_size=len(elements),
    )


@dataclass(frozen=True)
class TopologyDirection:
    direction: str
    verdict: str
    power: Optional[int]
    failures: tuple[tuple[int, str], ...]  # (power, counterexample text) per failed m

    def to_json(self) -> dict:
        return {
            "direction": self.direction,
            "verdict": self.verdict,
            "power": self.power,
            "failures": [
                {"power": p, "element": e} for p, e in self.failures
            ],
        }


@dataclass(frozen=True)
class TopologyReport:
    forward: TopologyDirection
    backward: TopologyDirection
    maxpow: int
    degree: int
    window: int

    def to_json(self) -> dict:
        return {
            "maxpow": self.maxpow,
            "degree": self.degree,
            "window": self.window,
            "directions": [self.forward.to_json(), self.backward.to_json()],
        }


def _least_power_contained(
    A: IdealSpec,
    B: IdealSpec,
    ambient,
    maxpow: int,
    degree: int,
    window: int,
    direction: str,
    max_products: int = 200_000,
) -> TopologyDirection:
    base = spanning_set(A, ambient, degree)
    if not base:
        if isinstance(A, GeneratedIdeal) and all(g.is_zero() for g in A.generators):
            return TopologyDirection(
                direction=direction, verdict=CONTAINED, power=1, failures=()
            )
        raise ValueError("degree bound too small: no spanning elements found")
    failures = []
    for m in range(1, maxpow + 1):
        count = 0
        failed: Optional[CharacterPolynomial] = None
        for combo in itertools.combinations_with_replacement(base, m):
            count += 1
            if count > max_products:
                raise ValueError(
                    f"power {m} spanning products exceed cap {max_products}; tighten bounds"
                )
            prod = combo[0]
            for extra in combo[1:]:
                prod = prod * extra
            if prod.is_zero():
                continue
            if not ideal_member(prod, B, window).member:
                failed = prod
                break
        if failed is None:
            return TopologyDirection(
                direction=direction,
                verdict=CONTAINED,
                power=m,
                failures=tuple(failures),
            )
        failures.append((m, format_polynomial(failed)))
    return TopologyDirection(
        direction=direction,
        verdict=NONE_WITHIN_BOUNDS,
        power=None,
        failures=tuple(failures),
    )


def topology_equivalence_report(
    A: IdealSpec,
    B: IdealSpec,
    ambient,
    maxpow: int,
    degree: int,
    window: int,
) -> TopologyReport:
    """Least powers with A^m inside B and B^m inside A, within stated bounds."""
    if maxpow < 1:
        raise ValueError("maxpow must be >= 1")
    fwd = _least_power_contained(A, B, ambient, maxpow, degree, window, "A->B")
    bwd = _least_power_contained(B, A, ambient, maxpow, degree, window, "B->A")
    return TopologyReport(
        forward=fwd, backward=bwd, maxpow=maxpow, degree=degree, window=window
    )
