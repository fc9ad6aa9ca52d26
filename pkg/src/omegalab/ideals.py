"""Ideals of finite commutative rings.

An ideal is stored as its full element set (a frozenset of indices) plus the
generators it was built from. Closure is a worklist fixpoint (close under
addition and multiplication by arbitrary ring elements); zmod and product
rings get structured fast paths behind the same interface, cross-checked by
tests against the generic route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import LatticeOverflowError, SpecParseError
from .rings import FiniteRing, ProductRing, QuotientRing, ZmodRing, make_quotient

__all__ = [
    "Ideal",
    "ideal_from_generators",
    "closure_elements",
    "generic_closure",
    "minimal_generators",
    "ideal_sum",
    "ideal_product",
    "product_elements",
    "power_elements",
    "ideal_intersect",
    "ideal_radical",
    "is_prime",
    "is_radical_ideal",
    "all_ideals",
    "parse_ideal_spec",
    "ideal_spec",
    "ideal_display",
    "quotient_by",
    "quotient_image",
]

DEFAULT_LATTICE_CAP = 4096


@dataclass(frozen=True)
class Ideal:
    """An ideal of a finite ring: generators plus the closed element set."""

    ring: FiniteRing
    generators: tuple[int, ...]
    elements: frozenset[int]

    def __contains__(self, index: int) -> bool:
        return index in self.elements

    @property
    def is_proper(self) -> bool:
        return len(self.elements) < self.ring.order

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.elements), tuple(sorted(self.elements)))

    def __le__(self, other: "Ideal") -> bool:
        return self.elements <= other.elements

    def __repr__(self) -> str:
        return f"<Ideal {ideal_display(self)} of {self.ring.descriptor}>"


def generic_closure(ring: FiniteRing, gens: Iterable[int]) -> frozenset[int]:
    """Reference worklist fixpoint: close under + and ring multiplication."""
    closed = {ring.zero}
    work = []
    for g in gens:
        ring.check_index(g)
        if g not in closed:
            closed.add(g)
            work.append(g)
    add = ring.add
    mul = ring.mul
    order = ring.order
    while work:
        x = work.pop()
        for r in range(order):
            y = mul(r, x)
            if y not in closed:
                closed.add(y)
                work.append(y)
        for s in list(closed):
            y = add(x, s)
            if y not in closed:
                closed.add(y)
                work.append(y)
    return frozenset(closed)


def closure_elements(ring: FiniteRing, gens: Iterable[int]) -> frozenset[int]:
    """Element set of the ideal generated by gens (structured fast paths)."""
    gens = tuple(gens)
    if isinstance(ring, ZmodRing):
        g = ring.modulus
        for v in gens:
            ring.check_index(v)
            g = math.gcd(g, v)
        if g == 0:
            g = ring.modulus
        return frozenset(range(0, ring.modulus, g)) if g < ring.modulus else frozenset({0})
    if isinstance(ring, ProductRing):
        lefts = []
        rights = []
        for v in gens:
            a, b = ring.decode(ring.check_index(v))
            lefts.append(a)
            rights.append(b)
        la = closure_elements(ring.left, lefts)
        rb = closure_elements(ring.right, rights)
        size = ring.right.order
        return frozenset(a * size + b for a in la for b in rb)
    return generic_closure(ring, gens)


def minimal_generators(ring: FiniteRing, elements: frozenset[int]) -> tuple[int, ...]:
    """Lexicographically least greedy generating subset of an element set.

    Deterministic: scan indices in ascending order, keep an element iff it is
    not already generated, stop once the whole set is generated.
    """
    cache = ring.caches.setdefault("min_gens", {})
    got = cache.get(elements)
    if got is not None:
        return got
    gens: list[int] = []
    current = frozenset({ring.zero})
    if current == elements:
        cache[elements] = ()
        return ()
    for x in sorted(elements):
        if x in current:
            continue
        gens.append(x)
        current = closure_elements(ring, gens)
        if current == elements:
            break
    if current != elements:
        raise ValueError("element set is not an ideal")
    result = tuple(gens)
    cache[elements] = result
    return result


def ideal_from_generators(ring: FiniteRing, gens: Iterable[int]) -> Ideal:
    """The ideal generated by the given element indices."""
    gens = tuple(sorted(set(gens)))
    elements = closure_elements(ring, gens)
    return Ideal(ring, gens, elements)


def _from_elements(ring: FiniteRing, elements: frozenset[int]) -> Ideal:
    return Ideal(ring, minimal_generators(ring, elements), elements)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    """I + J: pairwise sums (both sets are already ideals)."""
    _same_ring(a, b)
    add = a.ring.add
    elements = frozenset(add(x, y) for x in a.elements for y in b.elements)
    return _from_elements(a.ring, elements)


def product_elements(
    ring: FiniteRing, a: frozenset[int], b: frozenset[int]
) -> frozenset[int]:
    """Element set of the ideal product, memoized per ring."""
    cache = ring.caches.setdefault("ideal_product", {})
    key = frozenset((a, b))
    got = cache.get(key)
    if got is not None:
        return got
    ga = minimal_generators(ring, a)
    gb = minimal_generators(ring, b)
    mul = ring.mul
    result = closure_elements(ring, (mul(x, y) for x in ga for y in gb))
    cache[key] = result
    return result


def power_elements(ring: FiniteRing, a: frozenset[int], n: int) -> frozenset[int]:
    """I^n with I^0 = R, memoized per ring."""
    if n == 0:
        return frozenset(range(ring.order))
    cache = ring.caches.setdefault("ideal_power", {})
    key = (a, n)
    got = cache.get(key)
    if got is not None:
        return got
    result = a
    for _ in range(n - 1):
        result = product_elements(ring, result, a)
    cache[key] = result
    return result


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """I * J: generated by pairwise products of generators."""
    _same_ring(a, b)
    return _from_elements(a.ring, product_elements(a.ring, a.elements, b.elements))


def ideal_intersect(a: Ideal, b: Ideal) -> Ideal:
    """Set intersection with greedy generator recovery."""
    _same_ring(a, b)
    return _from_elements(a.ring, a.elements & b.elements)


def ideal_radical(ideal: Ideal) -> Ideal:
    """{x : x^t in I for some 1 <= t <= |R|}, with power-cycle cutoff."""
    ring = ideal.ring
    members = ideal.elements
    mul = ring.mul
    result = set()
    for x in range(ring.order):
        seen = set()
        p = x
        while p not in seen:
            if p in members:
                result.add(x)
                break
            seen.add(p)
            p = mul(p, x)
    # minimal_generators raises if the set fails to close (corrupt tables)
    return _from_elements(ring, frozenset(result))


def is_prime(ideal: Ideal) -> bool:
    """Proper, and xy in I implies x in I or y in I (full scan)."""
    if not ideal.is_proper:
        return False
    ring = ideal.ring
    members = ideal.elements
    mul = ring.mul
    outside = [x for x in range(ring.order) if x not in members]
    for x in outside:
        for y in outside:
            if mul(x, y) in members:
                return False
    return True


def is_radical_ideal(ideal: Ideal) -> bool:
    return ideal_radical(ideal).elements == ideal.elements


def all_ideals(ring: FiniteRing, count_cap: int = DEFAULT_LATTICE_CAP) -> list[Ideal]:
    """Every ideal of the ring, sorted by (cardinality, element tuple).

    BFS over principal-ideal extensions: start from (0), repeatedly add one
    principal ideal via ideal sum until no new element sets appear. Raises
    LatticeOverflowError when more than count_cap ideals are found.
    """
    cache = ring.caches.get("all_ideals")
    if cache is not None:
        if len(cache) > count_cap:
            raise LatticeOverflowError(
                f"{ring.descriptor}: {len(cache)} ideals exceed cap {count_cap}",
                len(cache),
            )
        return list(cache)
    principal = {}
    for e in range(ring.order):
        els = closure_elements(ring, (e,))
        principal.setdefault(els, e)
    zero = frozenset({ring.zero})
    known = {zero}
    frontier = [zero]
    add = ring.add
    while frontier:
        new_frontier = []
        for current in frontier:
            for els in principal:
                if els <= current:
                    continue
                combined = frozenset(
                    add(x, y) for x in current for y in els
                )
                if combined not in known:
                    known.add(combined)
                    if len(known) > count_cap:
                        raise LatticeOverflowError(
                            f"{ring.descriptor}: ideal count exceeds cap {count_cap}",
                            len(known),
                        )
                    new_frontier.append(combined)
        frontier = new_frontier
    result = [_from_elements(ring, els) for els in known]
    result.sort(key=Ideal.sort_key)
    ring.caches["all_ideals"] = tuple(result)
    return list(result)


def parse_ideal_spec(ring: FiniteRing, text: str) -> Ideal:
    """Parse the exact ideal spec grammar: gen:none | gen:i1,i2,..."""
    if text == "gen:none":
        return ideal_from_generators(ring, ())
    if not text.startswith("gen:"):
        raise SpecParseError("ideal spec must start with gen:", text, 0)
    body = text[4:]
    if not body:
        raise SpecParseError("empty generator list (use gen:none)", text, 4)
    gens = []
    for part in body.split(","):
        if not part.isdigit():
            raise SpecParseError(f"bad generator index {part!r}", text, 4)
        idx = int(part)
        if idx >= ring.order:
            raise SpecParseError(
                f"generator {idx} out of range for {ring.descriptor}", text, 4
            )
        gens.append(idx)
    return ideal_from_generators(ring, gens)


def ideal_spec(ideal: Ideal) -> str:
    """Canonical spec string (minimal generators): gen:none or gen:i1,i2."""
    gens = minimal_generators(ideal.ring, ideal.elements)
    if not gens:
        return "gen:none"
    return "gen:" + ",".join(str(g) for g in gens)


def ideal_display(ideal: Ideal) -> str:
    """Human display: (g1,g2) with element display syntax, (0) for zero."""
    gens = minimal_generators(ideal.ring, ideal.elements)
    if not gens:
        return "(0)"
    return "(" + ",".join(ideal.ring.display(g) for g in gens) + ")"


def quotient_by(ideal: Ideal) -> QuotientRing:
    """R/I as a table ring (proper ideals only)."""
    return make_quotient(ideal.ring, ideal.elements, ideal_spec(ideal))


def quotient_image(quotient: QuotientRing, ideal: Ideal) -> Ideal:
    """Image of an ideal of the parent ring inside R/J."""
    if ideal.ring is not quotient.parent:
        raise ValueError("ideal does not live in the quotient's parent ring")
    project = quotient.project
    elements = frozenset(project[x] for x in ideal.elements)
    return _from_elements(quotient, elements)


def _same_ring(a: Ideal, b: Ideal) -> None:
    if a.ring is not b.ring:
        raise ValueError("ideals of different rings")
