"""Absorbing degrees and content arithmetic over the integers.

The residue ideal mZ inside Z has absorbing degree Omega(m), the number of
prime factors of m counted with multiplicity; the prime factorization is
itself the canonical lower witness. This module computes that degree by
trial division, checks content multiplicativity of integer polynomials
(gcd of coefficients; multiplicative by the classical primitive-polynomial
argument), and searches bounded boxes of integer polynomials for
violations of the absorbing property of mZ[X].

The polynomial search is an independent route: products are expanded
honestly with integer coefficient arithmetic, never shortcut through the
content identity they are meant to test.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional, Sequence

__all__ = [
    "INT_LIMIT",
    "IntPolynomial",
    "int_poly",
    "IntOmegaResult",
    "omega_int",
    "content_int",
    "gauss_lemma_check",
    "IntConjectureReport",
    "conjecture_check_int",
]

INT_LIMIT = 2**63 - 1


@dataclass(frozen=True)
class IntPolynomial:
    """Sparse univariate integer polynomial; terms sorted by degree."""

    terms: tuple[tuple[int, int], ...]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else -1

    def coefficients(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.terms)

    def coefficient(self, degree: int) -> int:
        for d, c in self.terms:
            if d == degree:
                return c
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        acc = dict(self.terms)
        for d, c in other.terms:
            s = acc.get(d, 0) + c
            if s == 0:
                acc.pop(d, None)
            else:
                acc[d] = s
        return IntPolynomial(tuple(sorted(acc.items())))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        acc: dict[int, int] = {}
        for da, ca in self.terms:
            for db, cb in other.terms:
                acc[da + db] = acc.get(da + db, 0) + ca * cb
        return IntPolynomial(
            tuple(sorted((d, c) for d, c in acc.items() if c != 0))
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple((d, -c) for d, c in self.terms))

    def display(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d, c in self.terms:
            if d == 0:
                parts.append(str(c))
            else:
                mono = "X" if d == 1 else f"X^{d}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}{mono}")
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"<{self.display()}>"


def int_poly(coeffs: Sequence[int]) -> IntPolynomial:
    """Polynomial from its coefficient list, constant term first."""
    return IntPolynomial(
        tuple((d, c) for d, c in enumerate(coeffs) if c != 0)
    )


@dataclass(frozen=True)
class IntOmegaResult:
    """Absorbing degree of mZ in Z with its prime-multiset witness."""

    modulus: int
    value: int
    factors: tuple[int, ...]


def _factor(m: int) -> tuple[int, ...]:
    out = []
    while m % 2 == 0:
        out.append(2)
        m //= 2
    d = 3
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 2
    if m > 1:
        out.append(m)
    return tuple(out)


def omega_int(m: int, oracle_limit: int = 0) -> IntOmegaResult:
    """Absorbing degree of the ideal mZ inside Z.

    m = 1 gives 0 (the improper ideal), m = 0 gives 1 (the zero ideal is
    prime), and otherwise the value is the number of prime factors of m
    counted with multiplicity. With oracle_limit > 0, values for
    2 <= m <= oracle_limit are cross-checked against the exhaustive scan
    of the zero ideal of the residue ring; disagreement is a hard error.
    """
    if m < 0:
        raise ValueError("modulus must be nonnegative")
    if m > INT_LIMIT:
        raise ValueError(f"modulus exceeds the supported limit {INT_LIMIT}")
    if m == 1:
        return IntOmegaResult(1, 0, ())
    if m == 0:
        return IntOmegaResult(0, 1, ())
    factors = _factor(m)
    result = IntOmegaResult(m, len(factors), factors)
    if oracle_limit and 2 <= m <= oracle_limit:
        from .absorbing import omega
        from .ideals import ideal_from_generators
        from .rings import make_zmod

        ring = make_zmod(m)
        scan = omega(ideal_from_generators(ring, ()), cap=max(result.value, 1))
        if scan.value != result.value:
            raise RuntimeError(
                f"arithmetic degree {result.value} disagrees with the "
                f"exhaustive scan {scan.describe()} for m={m}"
            )
    return result


def content_int(f: IntPolynomial) -> int:
    """gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
    return math.gcd(*f.coefficients()) if f.terms else 0


def gauss_lemma_check(f: IntPolynomial, g: IntPolynomial) -> bool:
    """content(fg) == content(f) * content(g); classical, always true."""
    return content_int(f * g) == content_int(f) * content_int(g)


@dataclass(frozen=True)
class IntConjectureReport:
    """Bounded search for violations of the absorbing property of mZ[X].

    The target: every (n+1)-tuple of polynomials whose product has all
    coefficients divisible by m must contain an n-subproduct with the same
    property, where n = Omega(m). witness_valid re-verifies the prime
    factorization as a tuple of constant polynomials. checked counts the
    qualifying tuples (product actually in mZ[X]) whose subproducts were
    examined; drawn counts raw draws in sampled mode.
    """

    modulus: int
    omega: IntOmegaResult
    max_deg: int
    height: int
    witness_valid: bool
    violation: Optional[tuple[IntPolynomial, ...]]
    mode: str
    checked: int
    drawn: int
    seed: Optional[int] = None


def _box_polys(max_deg: int, height: int, m: int) -> list[IntPolynomial]:
    """All polynomials of degree <= max_deg with |coeff| <= height, except
    those with every coefficient divisible by m (they cannot appear in a
    violation: any subproduct containing one lands in mZ[X])."""
    out = []
    span = range(-height, height + 1)
    coeffs = [()]
    for _ in range(max_deg + 1):
        coeffs = [c + (v,) for c in coeffs for v in span]
    for tup in coeffs:
        if any(c % m for c in tup):
            out.append(int_poly(tup))
    return out


def _in_mzx(f: IntPolynomial, m: int) -> bool:
    return all(c % m == 0 for c in f.coefficients())


def _tuple_violates(polys: Sequence[IntPolynomial], m: int) -> bool:
    full = polys[0]
    for p in polys[1:]:
        full = full * p
    if not _in_mzx(full, m):
        return False
    for omit in range(len(polys)):
        sub = int_poly((1,))
        for t, p in enumerate(polys):
            if t != omit:
                sub = sub * p
        if _in_mzx(sub, m):
            return False
    return True


def _split_draws(
    rng: random.Random, factors: tuple[int, ...], parts: int, height: int
) -> Optional[list[int]]:
    """Random split of the prime multiset into the given number of groups,
    each group product staying within the height bound. None if a draw
    lands outside the bound (caller retries or falls back)."""
    values = [1] * parts
    for p in factors:
        slot = rng.randrange(parts)
        values[slot] *= p
    if any(v > height for v in values):
        return None
    return values


def conjecture_check_int(
    m: int,
    max_deg: int = 1,
    height: int = 2,
    sample: int = 1000,
    seed: int = 0,
    budget: int = 10**7,
) -> IntConjectureReport:
    """Exhaustive box sweep when it fits the budget, else seeded sampling.

    Sampling alternates uniform draws over the coefficient box (rejecting
    tuples whose product misses mZ[X]) with constructed draws that scale a
    random tuple by a random split of the prime factorization, so that
    qualifying tuples are actually exercised.
    """
    if m < 2:
        raise ValueError("conjecture check needs a modulus m >= 2")
    if max_deg < 0 or height < 1:
        raise ValueError("need max_deg >= 0 and height >= 1")
    base = omega_int(m)
    n = base.value
    k = n + 1

    witness = [int_poly((p,)) for p in base.factors]
    full = int_poly((1,))
    for w in witness:
        full = full * w
    witness_valid = _in_mzx(full, m) and not any(
        _in_mzx(_drop_product(witness, i), m) for i in range(len(witness))
    )

    box_size = (2 * height + 1) ** (max_deg + 1)
    exhaustive = box_size**k <= budget
    if exhaustive:
        polys = _box_polys(max_deg, height, m)
        checked = 0
        drawn = 0
        for combo in combinations_with_replacement(range(len(polys)), k):
            drawn += 1
            tup = [polys[i] for i in combo]
            prod = tup[0]
            for p in tup[1:]:
                prod = prod * p
            if not _in_mzx(prod, m):
                continue
            checked += 1
            if _tuple_violates(tup, m):
                return IntConjectureReport(
                    m, base, max_deg, height, witness_valid,
                    tuple(tup), "exhaustive", checked, drawn,
                )
        return IntConjectureReport(
            m, base, max_deg, height, witness_valid,
            None, "exhaustive", checked, drawn,
        )

    rng = random.Random(seed)
    span = 2 * height + 1
    checked = 0
    drawn = 0

    def draw_uniform() -> list[IntPolynomial]:
        return [
            int_poly([rng.randrange(span) - height for _ in range(max_deg + 1)])
            for _ in range(k)
        ]

    def draw_constructed() -> Optional[list[IntPolynomial]]:
        values = _split_draws(rng, base.factors, k, height)
        if values is None:
            return None
        out = []
        for v in values:
            bound = height // v
            coeffs = [v * (rng.randrange(2 * bound + 1) - bound) for _ in range(max_deg + 1)]
            if all(c == 0 for c in coeffs):
                coeffs[rng.randrange(max_deg + 1)] = v
            out.append(int_poly(coeffs))
        return out

    for i in range(sample):
        drawn += 1
        tup = draw_uniform() if i % 2 == 0 else draw_constructed()
        if tup is None:
            continue
        if any(_in_mzx(p, m) for p in tup):
            continue
        prod = tup[0]
        for p in tup[1:]:
            prod = prod * p
        if not _in_mzx(prod, m):
            continue
        checked += 1
        if _tuple_violates(tup, m):
            return IntConjectureReport(
                m, base, max_deg, height, witness_valid,
                tuple(tup), f"sampled:{sample}", checked, drawn, seed,
            )
    return IntConjectureReport(
        m, base, max_deg, height, witness_valid,
        None, f"sampled:{sample}", checked, drawn, seed,
    )


def _drop_product(polys: Sequence[IntPolynomial], omit: int) -> IntPolynomial:
    out = int_poly((1,))
    for t, p in enumerate(polys):
        if t != omit:
            out = out * p
    return out
