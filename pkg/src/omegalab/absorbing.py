"""Absorbing degrees of ideals.

An ideal I of R is n-absorbing when every product of n+1 elements that lands
in I already has an n-element subproduct in I; omega(I) is the least such n,
with omega(R) = 0 by convention. The strong variant quantifies over ideal
tuples instead of element tuples.

Scans enumerate non-decreasing tuples (multisets) in index order with three
sound prunings, each of which removes no violation:

* elements of I are skipped (any tuple containing one has an n-subproduct
  containing it, which then lies in I);
* units are skipped (if the full product lies in I, multiplying by the unit's
  inverse puts the subproduct omitting it in I);
* a prefix whose partial product lies in I is cut (every completion has an
  n-subproduct containing the whole prefix).

The first violation found is therefore the lexicographically least violating
multiset. A pruning-free reference scan is kept for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .ideals import (
    DEFAULT_LATTICE_CAP,
    Ideal,
    all_ideals,
    ideal_display,
    product_elements,
)
from .rings import FiniteRing

__all__ = [
    "DEFAULT_CAP",
    "AbsorbingCheck",
    "OmegaResult",
    "is_n_absorbing",
    "reference_is_n_absorbing",
    "omega",
    "is_strongly_n_absorbing",
    "strong_omega",
    "AgreementRow",
    "AgreementReport",
    "omega_agreement_table",
]

DEFAULT_CAP = 6


@dataclass(frozen=True)
class AbsorbingCheck:
    """Outcome of one n-absorbing scan."""

    holds: bool
    violation: Optional[tuple] = None


@dataclass(frozen=True)
class OmegaResult:
    """Absorbing degree: value=n for an exact answer, None past the cap.

    For value >= 2 the lower_witness is a violating value-tuple showing that
    (value-1)-absorbing fails; for a capped result it shows cap-absorbing
    fails. value 0 happens only for the improper ideal R.
    """

    value: Optional[int]
    cap: int
    lower_witness: Optional[tuple] = None

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def describe(self) -> str:
        if self.value is None:
            return f"exceeds-cap({self.cap})"
        return str(self.value)


def _check_args(ideal: Ideal, n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not ideal.is_proper:
        raise ValueError("n-absorbing is defined for proper ideals only")


def _element_violation(
    ring: FiniteRing, members: frozenset[int], candidates: list[int], n: int
) -> Optional[tuple[int, ...]]:
    """First violating (n+1)-multiset over candidates, or None."""
    k = n + 1
    count = len(candidates)
    mtab = ring.mul_table()
    mul = ring.mul
    one = ring.one
    chosen = [0] * k
    prefix = [one] * (k + 1)  # prefix[t] = product of chosen[:t]

    def leaf_ok() -> bool:
        # full product is in I; reject unless every n-subproduct is outside
        suffix = one
        for t in range(k - 1, -1, -1):
            # subproduct omitting position t
            if t == k - 1 or chosen[t] != chosen[t + 1]:
                if mtab is not None:
                    sub = mtab[prefix[t]][suffix]
                else:
                    sub = mul(prefix[t], suffix)
                if sub in members:
                    return False
            if mtab is not None:
                suffix = mtab[suffix][chosen[t]]
            else:
                suffix = mul(suffix, chosen[t])
        return True

    def rec(start: int, depth: int) -> Optional[tuple[int, ...]]:
        acc = prefix[depth]
        row = mtab[acc] if mtab is not None else None
        last = depth == n
        for ci in range(start, count):
            x = candidates[ci]
            p = row[x] if row is not None else mul(acc, x)
            if last:
                if p in members:
                    chosen[depth] = x
                    prefix[depth + 1] = p
                    if leaf_ok():
                        return tuple(chosen)
            elif p not in members:
                chosen[depth] = x
                prefix[depth + 1] = p
                found = rec(ci, depth + 1)
                if found is not None:
                    return found
        return None

    return rec(0, 0)


def is_n_absorbing(ideal: Ideal, n: int) -> AbsorbingCheck:
    """Scan for a violating (n+1)-element multiset; I must be proper."""
    _check_args(ideal, n)
    ring = ideal.ring
    members = ideal.elements
    units = ring.units()
    candidates = [
        x for x in range(ring.order) if x not in members and x not in units
    ]
    violation = _element_violation(ring, members, candidates, n)
    if violation is None:
        return AbsorbingCheck(holds=True)
    return AbsorbingCheck(holds=False, violation=violation)


def reference_is_n_absorbing(ideal: Ideal, n: int) -> AbsorbingCheck:
    """Pruning-free reference: all non-decreasing tuples, direct checks."""
    _check_args(ideal, n)
    ring = ideal.ring
    members = ideal.elements
    mul = ring.mul
    one = ring.one
    k = n + 1

    def rec(start: int, chosen: tuple[int, ...]) -> Optional[tuple[int, ...]]:
        if len(chosen) == k:
            full = one
            for x in chosen:
                full = mul(full, x)
            if full not in members:
                return None
            for omit in range(k):
                sub = one
                for t, x in enumerate(chosen):
                    if t != omit:
                        sub = mul(sub, x)
                if sub in members:
                    return None
            return chosen
        for x in range(start, ring.order):
            found = rec(x, chosen + (x,))
            if found is not None:
                return found
        return None

    violation = rec(0, ())
    if violation is None:
        return AbsorbingCheck(holds=True)
    return AbsorbingCheck(holds=False, violation=violation)


def omega(ideal: Ideal, cap: int = DEFAULT_CAP) -> OmegaResult:
    """Least n such that I is n-absorbing; 0 iff I = R; None past cap."""
    if not ideal.is_proper:
        return OmegaResult(0, cap)
    witness: Optional[tuple] = None
    for n in range(1, cap + 1):
        check = is_n_absorbing(ideal, n)
        if check.holds:
            return OmegaResult(n, cap, witness)
        witness = check.violation
    return OmegaResult(None, cap, witness)


# ---------------------------------------------------------------------------
# strong variant over the ideal lattice


def _lattice_context(ideal: Ideal, lattice_cap: int):
    ring = ideal.ring
    lattice = all_ideals(ring, lattice_cap)
    sets = [iv.elements for iv in lattice]
    id_of = {els: i for i, els in enumerate(sets)}
    full_id = id_of[frozenset(range(ring.order))]

    prod_cache: dict[tuple[int, int], int] = {}

    def prod(a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        got = prod_cache.get(key)
        if got is None:
            got = id_of[product_elements(ring, sets[a], sets[b])]
            prod_cache[key] = got
        return got

    contained = [els <= ideal.elements for els in sets]
    return lattice, sets, prod, contained, full_id


def _ideal_violation(
    candidates: list[int],
    contained: list[bool],
    prod: Callable[[int, int], int],
    full_id: int,
    n: int,
) -> Optional[tuple[int, ...]]:
    k = n + 1
    count = len(candidates)
    chosen = [0] * k
    prefix = [full_id] * (k + 1)

    def leaf_ok() -> bool:
        suffix = full_id
        for t in range(k - 1, -1, -1):
            if t == k - 1 or chosen[t] != chosen[t + 1]:
                if contained[prod(prefix[t], suffix)]:
                    return False
            suffix = prod(suffix, chosen[t])
        return True

    def rec(start: int, depth: int) -> Optional[tuple[int, ...]]:
        acc = prefix[depth]
        last = depth == n
        for ci in range(start, count):
            x = candidates[ci]
            p = prod(acc, x)
            if last:
                if contained[p]:
                    chosen[depth] = x
                    prefix[depth + 1] = p
                    if leaf_ok():
                        return tuple(chosen)
            elif not contained[p]:
                chosen[depth] = x
                prefix[depth + 1] = p
                found = rec(ci, depth + 1)
                if found is not None:
                    return found
        return None

    return rec(0, 0)


def is_strongly_n_absorbing(
    ideal: Ideal, n: int, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> AbsorbingCheck:
    """Scan ideal multisets: I1..I(n+1) with product inside I but no
    n-subproduct inside I. Ideals contained in I and the full ring are
    skipped (mirrors of the element prunings, equally sound)."""
    _check_args(ideal, n)
    lattice, _, prod, contained, full_id = _lattice_context(ideal, lattice_cap)
    candidates = [
        i for i in range(len(lattice)) if not contained[i] and i != full_id
    ]
    violation = _ideal_violation(candidates, contained, prod, full_id, n)
    if violation is None:
        return AbsorbingCheck(holds=True)
    return AbsorbingCheck(
        holds=False, violation=tuple(lattice[i] for i in violation)
    )


def strong_omega(
    ideal: Ideal, cap: int = DEFAULT_CAP, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> OmegaResult:
    """Least n such that I is strongly n-absorbing; same conventions."""
    if not ideal.is_proper:
        return OmegaResult(0, cap)
    witness: Optional[tuple] = None
    for n in range(1, cap + 1):
        check = is_strongly_n_absorbing(ideal, n, lattice_cap)
        if check.holds:
            return OmegaResult(n, cap, witness)
        witness = check.violation
    return OmegaResult(None, cap, witness)


# ---------------------------------------------------------------------------
# omega vs strong omega agreement


@dataclass(frozen=True)
class AgreementRow:
    ideal: Ideal
    omega: OmegaResult
    strong: OmegaResult

    @property
    def agree(self) -> Optional[bool]:
        """True/False when both sides are exact, None when either capped."""
        if self.omega.value is None or self.strong.value is None:
            return None
        return self.omega.value == self.strong.value


@dataclass(frozen=True)
class AgreementReport:
    ring: FiniteRing
    cap: int
    rows: tuple[AgreementRow, ...]

    @property
    def counterexamples(self) -> tuple[AgreementRow, ...]:
        return tuple(row for row in self.rows if row.agree is False)

    @property
    def capped(self) -> tuple[AgreementRow, ...]:
        return tuple(row for row in self.rows if row.agree is None)

    def describe(self) -> str:
        lines = []
        for row in self.rows:
            mark = {True: "ok", False: "MISMATCH", None: "capped"}[row.agree]
            lines.append(
                f"{ideal_display(row.ideal)}: omega={row.omega.describe()} "
                f"strong={row.strong.describe()} [{mark}]"
            )
        return "\n".join(lines)


def omega_agreement_table(
    ring: FiniteRing,
    cap: int = DEFAULT_CAP,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> AgreementReport:
    """omega vs strong_omega for every proper ideal, in canonical order.

    A row with agree=False is a counterexample to the identity of the two
    absorbing degrees; it is reported, never raised.
    """
    rows = []
    for ideal in all_ideals(ring, lattice_cap):
        if not ideal.is_proper:
            continue
        rows.append(
            AgreementRow(
                ideal=ideal,
                omega=omega(ideal, cap),
                strong=strong_omega(ideal, cap, lattice_cap),
            )
        )
    return AgreementReport(ring=ring, cap=cap, rows=tuple(rows))
