"""Exact integer group algebra of Z_n x Z^r (characters of Z_n x T^r).

Elements are finite integer combinations of monomials sigma^a * x1^e1 * ...
* xr^er with a reduced mod n and Laurent exponents e_j in Z.  Restriction
to a finite cyclic subgroup substitutes sigma and the x_j by powers of a
single generator tau with tau^d = 1; kernel-ideal membership is decided by
evaluation.  No floating point anywhere in this module.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .family import SubgroupRep, enumerate_family, restriction_hom, subgroup_Hk

Ambient = tuple[int, int]  # (n, r)


@dataclass(frozen=True)
class CharacterMonomial:
    """sigma^a * x^e with a in {0..n-1} and e a Laurent exponent vector."""

    a: int
    e: tuple[int, ...]


@dataclass(frozen=True)
class RestrictionMap:
    """Images (as powers of tau, tau^d = 1) of sigma and each x_j."""

    target_order: int
    sigma_image: int
    x_images: tuple[int, ...]
    ambient: Ambient

    def __post_init__(self):
        n, r = self.ambient
        if n % self.target_order != 0:
            raise ValueError(f"target order {self.target_order} does not divide n={n}")
        if len(self.x_images) != r:
            raise ValueError("x_images length must equal r")

    def monomial_image(self, mono: CharacterMonomial) -> int:
        """Exponent of tau that the monomial restricts to."""
        k = mono.a * self.sigma_image + sum(ej * xj for ej, xj in zip(mono.e, self.x_images))
        return k % self.target_order


@dataclass(frozen=True)
class CyclicElement:
    """Element of the group algebra Z[tau]/(tau^d - 1), basis 1, tau, ..., tau^(d-1)."""

    coefficients: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def __add__(self, other: "CyclicElement") -> "CyclicElement":
        if self.order != other.order:
            raise ValueError("cyclic order mismatch")
        return CyclicElement(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "CyclicElement") -> "CyclicElement":
        if self.order != other.order:
            raise ValueError("cyclic order mismatch")
        d = self.order
        out = [0] * d
        for i, ci in enumerate(self.coefficients):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coefficients):
                if cj:
                    out[(i + j) % d] += ci * cj
        return CyclicElement(tuple(out))

    @staticmethod
    def zero(d: int) -> "CyclicElement":
        return CyclicElement((0,) * d)


class CharacterPolynomial:
    """Integer combination of character monomials over a fixed ambient (n, r)."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Optional[dict[CharacterMonomial, int]] = None):
        n, r = ambient
        if n < 1 or r < 1:
            raise ValueError("ambient (n, r) must be positive")
        self.ambient = ambient
        clean: dict[CharacterMonomial, int] = {}
        for mono, c in (terms or {}).items():
            if c == 0:
                continue
            if len(mono.e) != r:
                raise ValueError(f"monomial exponent length {len(mono.e)} != r={r}")
            key = CharacterMonomial(mono.a % n, mono.e)
            clean[key] = clean.get(key, 0) + c
            if clean[key] == 0:
                del clean[key]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ambient: Ambient) -> "CharacterPolynomial":
        return CharacterPolynomial(ambient)

    @staticmethod
    def constant(c: int, ambient: Ambient) -> "CharacterPolynomial":
        _, r = ambient
        return CharacterPolynomial(ambient, {CharacterMonomial(0, (0,) * r): c})

    @staticmethod
    def monomial(a: int, e: Iterable[int], ambient: Ambient, coeff: int = 1) -> "CharacterPolynomial":
        return CharacterPolynomial(ambient, {CharacterMonomial(a, tuple(e)): coeff})

    @staticmethod
    def sigma(ambient: Ambient) -> "CharacterPolynomial":
        _, r = ambient
        return CharacterPolynomial.monomial(1, (0,) * r, ambient)

    @staticmethod
    def x(j: int, ambient: Ambient, power: int = 1) -> "CharacterPolynomial":
        """The torus character x_j, 1-indexed."""
        _, r = ambient
        if not 1 <= j <= r:
            raise ValueError(f"x index {j} outside 1..{r}")
        e = [0] * r
        e[j - 1] = power
        return CharacterPolynomial.monomial(0, e, ambient)

    # -- ring structure ----------------------------------------------------

    def _check_ambient(self, other: "CharacterPolynomial"):
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other: "CharacterPolynomial") -> "CharacterPolynomial":
        self._check_ambient(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return CharacterPolynomial(self.ambient, terms)

    def __neg__(self) -> "CharacterPolynomial":
        return CharacterPolynomial(self.ambient, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "CharacterPolynomial") -> "CharacterPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["CharacterPolynomial", int]) -> "CharacterPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._check_ambient(other)
        n, _ = self.ambient
        terms: dict[CharacterMonomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = CharacterMonomial((m1.a + m2.a) % n, tuple(u + v for u, v in zip(m1.e, m2.e)))
                terms[key] = terms.get(key, 0) + c1 * c2
        return CharacterPolynomial(self.ambient, terms)

    __rmul__ = __mul__

    def scale(self, c: int) -> "CharacterPolynomial":
        return CharacterPolynomial(self.ambient, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "CharacterPolynomial":
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined")
        out = CharacterPolynomial.constant(1, self.ambient)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CharacterPolynomial)
            and self.ambient == other.ambient
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[CharacterMonomial]:
        """Monomials sorted by (sigma exponent, x exponents lex), descending."""
        return sorted(self.terms, key=lambda m: (m.a, m.e), reverse=True)

    def max_laurent_spread(self) -> int:
        """Largest |e_j| over the support; 0 for constants."""
        return max((abs(ej) for m in self.terms for ej in m.e), default=0)

    def total_degree(self) -> int:
        """Largest sum |e_1| + ... + |e_r| over the support."""
        return max((sum(abs(ej) for ej in m.e) for m in self.terms), default=0)

    # -- text and JSON forms -------------------------------------------------

    def __repr__(self):
        return f"CharacterPolynomial({self.ambient}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"a": m.a, "e": list(m.e), "c": self.terms[m]} for m in self.support()
            ]
        }

    @staticmethod
    def from_json(obj: dict, ambient: Ambient) -> "CharacterPolynomial":
        terms = {
            CharacterMonomial(t["a"], tuple(t["e"])): t["c"] for t in obj["terms"]
        }
        return CharacterPolynomial(ambient, terms)


# -- canonical text form ------------------------------------------------------


def format_polynomial(f: CharacterPolynomial) -> str:
    """Canonical form, terms sorted by (sigma exponent, x exponents lex)."""
    if f.is_zero():
        return "0"
    chunks = []
    for mono in f.support():
        c = f.terms[mono]
        factors = []
        if mono.a != 0:
            factors.append(f"s^{mono.a}")
        for j, ej in enumerate(mono.e, start=1):
            if ej != 0:
                factors.append(f"x{j}^{ej}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not chunks:
            chunks.append(body if c > 0 else "-" + body)
        else:
            chunks.append((" + " if c > 0 else " - ") + body)
    return "".join(chunks)


_TOKEN = re.compile(r"\s*(\d+|[sS]|[xX]\d+|\^|\*|\+|-|\(|\))")


class PolynomialParseError(ValueError):
    pass


class _Parser:
    """Recursive descent over +, -, *, ^ and parentheses.

    Negative exponents are allowed on single monomial factors (Laurent
    inverses); parenthesized subexpressions only take nonnegative powers.
    """

    def __init__(self, text: str, ambient: Ambient):
        self.ambient = ambient
        self.tokens = []
        pos = 0
        while pos < len(text):
            mo = _TOKEN.match(text, pos)
            if not mo:
                if text[pos:].strip():
                    raise PolynomialParseError(f"bad character at {text[pos:]!r}")
                break
            self.tokens.append(mo.group(1))
            pos = mo.end()
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise PolynomialParseError("unexpected end of input")
        self.i += 1
        return tok

    def parse(self) -> CharacterPolynomial:
        out = self.expr()
        if self.peek() is not None:
            raise PolynomialParseError(f"trailing input at {self.peek()!r}")
        return out

    def expr(self) -> CharacterPolynomial:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        out = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.take() == "-":
                    sign = -sign
            out = out + self.term().scale(sign)
        return out

    def term(self) -> CharacterPolynomial:
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> CharacterPolynomial:
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise PolynomialParseError("unbalanced parenthesis")
            power = self.exponent(allow_negative=False)
            return inner ** power if power != 1 else inner
        if tok.isdigit():
            base = int(tok)
            power = self.exponent(allow_negative=False)
            return CharacterPolynomial.constant(base ** power, self.ambient)
        if tok in ("s", "S"):
            power = self.exponent(allow_negative=True)
            return CharacterPolynomial.monomial(power, (0,) * self.ambient[1], self.ambient)
        if tok[0] in ("x", "X"):
            j = int(tok[1:])
            power = self.exponent(allow_negative=True)
            return CharacterPolynomial.x(j, self.ambient, power)
        raise PolynomialParseError(f"unexpected token {tok!r}")

    def exponent(self, allow_negative: bool) -> int:
        if self.peek() != "^":
            return 1
        self.take()
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.take()
        if not tok.isdigit():
            raise PolynomialParseError(f"expected integer exponent, got {tok!r}")
        power = sign * int(tok)
        if power < 0 and not allow_negative:
            raise PolynomialParseError("negative power of a non-monomial")
        return power


def parse_polynomial(text: str, ambient: Ambient) -> CharacterPolynomial:
    return _Parser(text, ambient).parse()


# -- restriction and kernel membership ----------------------------------------


def restrict(f: CharacterPolynomial, h: RestrictionMap) -> CyclicElement:
    """Substitute sigma -> tau^sigma_image, x_j -> tau^{x_images[j]} in Z[tau]/(tau^d-1)."""
    if h.ambient != f.ambient:
        raise ValueError(f"ambient mismatch: {f.ambient} vs {h.ambient}")
    out = [0] * h.target_order
    for mono, c in f.terms.items():
        out[h.monomial_image(mono)] += c
    return CyclicElement(tuple(out))


def in_kernel(f: CharacterPolynomial, h: SubgroupRep) -> bool:
    return restrict(f, restriction_hom(h)).is_zero()


@dataclass(frozen=True)
class IntersectionVerdict:
    member: bool
    certificate: Optional[SubgroupRep]


def in_intersection(f: CharacterPolynomial, hs: list[SubgroupRep]) -> IntersectionVerdict:
    """Membership in the intersection of kernel ideals, first failure certified."""
    if not hs:
        raise ValueError("subgroup list must be nonempty")
    for h in hs:
        if not in_kernel(f, h):
            return IntersectionVerdict(member=False, certificate=h)
    return IntersectionVerdict(member=True, certificate=None)


def is_symmetric(f: CharacterPolynomial) -> bool:
    """Invariance under all permutations of the x-exponent coordinates."""
    groups: dict[tuple[int, tuple[int, ...]], list[int]] = {}
    for mono, c in f.terms.items():
        groups.setdefault((mono.a, tuple(sorted(mono.e))), []).append(c)
    for (_, sorted_e), coeffs in groups.items():
        if len(set(coeffs)) != 1:
            return False
        if len(coeffs) != _distinct_permutation_count(sorted_e):
            return False
    return True


def _distinct_permutation_count(e: tuple[int, ...]) -> int:
    """Number of distinct permutations of a sorted exponent tuple."""
    mult = 1
    i = 0
    while i < len(e):
        j = i
        while j < len(e) and e[j] == e[i]:
            j += 1
        mult *= math.factorial(j - i)
        i = j
    return math.factorial(len(e)) // mult


def augmentation_torus(f: CharacterPolynomial) -> CyclicElement:
    """Evaluate every x_j at 1, keeping sigma: lands in the group algebra of Z_n."""
    n, _ = f.ambient
    out = [0] * n
    for mono, c in f.terms.items():
        out[mono.a] += c
    return CyclicElement(tuple(out))


def augmentation(f: CharacterPolynomial) -> int:
    """Full augmentation: every character evaluated at the identity."""
    return sum(f.terms.values())


def symmetrize(f: CharacterPolynomial) -> CharacterPolynomial:
    """Sum of f over all permutations of the x coordinates."""
    import itertools

    n, r = f.ambient
    out = CharacterPolynomial.zero(f.ambient)
    for perm in itertools.permutations(range(r)):
        terms = {
            CharacterMonomial(m.a, tuple(m.e[p] for p in perm)): c
            for m, c in f.terms.items()
        }
        out = out + CharacterPolynomial(f.ambient, terms)
    return out


def in_J(f: CharacterPolynomial) -> bool:
    """Symmetric part of the full-family kernel intersection, ambient n = 2."""
    n, r = f.ambient
    if n != 2:
        raise ValueError("in_J is defined for ambient n = 2")
    if not is_symmetric(f):
        return False
    hks = [subgroup_Hk(k, r) for k in range(-1, r + 1)]
    return in_intersection(f, hks).member


def full_family(n: int, r: int) -> list[SubgroupRep]:
    """Alias for the deterministic family enumeration (kernel-ideal index set)."""
    return enumerate_family(n, r)
