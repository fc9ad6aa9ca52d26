"""Content-ideal checks over polynomial extensions R[x_1..x_k].

Covers: the content containment law c(fg) <= c(f)c(g); Dedekind-Mertens
exponents (least n with c(f)^n c(g) = c(f)^(n-1) c(fg)); exhaustive or
seeded searches for content-multiplicativity violations (c(fg) != c(f)c(g))
and for annihilating pairs with non-annihilating contents (fg = 0 but
c(f)c(g) != 0); the principal-content factorization g = g' * b with unit
content g' available over residue rings and their products; iterated
peeling certificates for products landing in an ideal; and the bounded
search for violations of the absorbing-degree identity between I and its
polynomial extension.

Search enumeration order is fixed: coefficient tuples over the graded-lex
slot list, ascending lexicographically; pairs run f <= g (both predicates
are symmetric), so a returned witness is the canonically first one.
Searches skip polynomials whose content is zero (or contained in the target
ideal) and polynomials with unit content; both skips are sound because such
polynomials can never appear in a violation (the first kind forces every
product through the ideal, the second kind satisfies multiplicativity by
the Dedekind-Mertens law). Pruned and unpruned scans are compared in tests.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .absorbing import DEFAULT_CAP, OmegaResult, omega
from .errors import CapExceededError, UnsupportedRingError
from .ideals import (
    DEFAULT_LATTICE_CAP,
    Ideal,
    all_ideals,
    closure_elements,
    is_radical_ideal,
    product_elements,
    quotient_by,
)
from .polys import (
    Polynomial,
    constant_poly,
    content,
    make_poly,
    monomials_up_to,
    poly_mul,
)
from .rings import FiniteRing, ProductRing, QuotientRing, RingElement, ZmodRing

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_SAMPLE",
    "ContentSpace",
    "content_space",
    "content_subset_property",
    "dm_exponent",
    "SearchOutcome",
    "gaussian_search",
    "armendariz_search",
    "DmTable",
    "dm_exponent_table",
    "BezoutFactorization",
    "bezout_factor",
    "ContainmentCertificate",
    "certify_content_product",
    "CertifySweep",
    "certify_pair_sweep",
    "PolyOmegaReport",
    "verify_poly_omega",
    "QuotientAgreementReport",
    "gaussian_iff_armendariz_quotients",
    "project_poly",
    "lift_poly",
]

DEFAULT_BUDGET = 10**7
DEFAULT_SAMPLE = 10000


class ContentSpace:
    """Per-ring registry of content ideals with small integer ids.

    Content ideals repeat massively across search sweeps; this interns each
    distinct element set once and memoizes sums with principal ideals (the
    building block of content lookup), products, and powers.
    """

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self._ids: dict[frozenset[int], int] = {}
        self._sets: list[frozenset[int]] = []
        self.zero_id = self._register(frozenset({ring.zero}))
        self.full_id = self._register(frozenset(range(ring.order)))
        self._principal: dict[int, int] = {}
        self._sum_elem: dict[tuple[int, int], int] = {}
        self._coeffs_cache: dict[tuple[int, ...], int] = {}
        self._prod: dict[tuple[int, int], int] = {}
        self._pow: dict[tuple[int, int], int] = {}

    def _register(self, els: frozenset[int]) -> int:
        got = self._ids.get(els)
        if got is None:
            got = len(self._sets)
            self._ids[els] = got
            self._sets.append(els)
        return got

    def set_of(self, ideal_id: int) -> frozenset[int]:
        return self._sets[ideal_id]

    def principal_id(self, elem: int) -> int:
        got = self._principal.get(elem)
        if got is None:
            got = self._register(closure_elements(self.ring, (elem,)))
            self._principal[elem] = got
        return got

    def _extend(self, ideal_id: int, elem: int) -> int:
        key = (ideal_id, elem)
        got = self._sum_elem.get(key)
        if got is None:
            add = self.ring.add
            base = self._sets[ideal_id]
            extra = self._sets[self.principal_id(elem)]
            got = self._register(
                frozenset(add(x, y) for x in base for y in extra)
            )
            self._sum_elem[key] = got
        return got

    def id_of_coeffs(self, coeffs: Sequence[int]) -> int:
        """Id of the ideal generated by the given coefficients."""
        zero = self.ring.zero
        key = tuple(sorted(set(c for c in coeffs if c != zero)))
        got = self._coeffs_cache.get(key)
        if got is None:
            got = self.zero_id
            for c in key:
                got = self._extend(got, c)
            self._coeffs_cache[key] = got
        return got

    def id_of_ideal(self, ideal: Ideal) -> int:
        return self._register(ideal.elements)

    def product(self, a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        got = self._prod.get(key)
        if got is None:
            got = self._register(
                product_elements(self.ring, self._sets[a], self._sets[b])
            )
            self._prod[key] = got
        return got

    def power(self, a: int, n: int) -> int:
        if n == 0:
            return self.full_id
        key = (a, n)
        got = self._pow.get(key)
        if got is None:
            got = a
            for _ in range(n - 1):
                got = self.product(got, a)
            self._pow[key] = got
        return got


def content_space(ring: FiniteRing) -> ContentSpace:
    space = ring.caches.get("content_space")
    if space is None:
        space = ContentSpace(ring)
        ring.caches["content_space"] = space
    return space


def content_subset_property(f: Polynomial, g: Polynomial) -> bool:
    """c(fg) <= c(f)c(g); holds in every commutative ring."""
    space = content_space(f.ring)
    cfg = space.id_of_coeffs(poly_mul(f, g).coefficients())
    cf = space.id_of_coeffs(f.coefficients())
    cg = space.id_of_coeffs(g.coefficients())
    return space.set_of(cfg) <= space.set_of(space.product(cf, cg))


def dm_exponent(f: Polynomial, g: Polynomial, cap: int = DEFAULT_CAP) -> Optional[int]:
    """Least n >= 1 with c(f)^n c(g) = c(f)^(n-1) c(fg); None past cap."""
    space = content_space(f.ring)
    cf = space.id_of_coeffs(f.coefficients())
    cg = space.id_of_coeffs(g.coefficients())
    cfg = space.id_of_coeffs(poly_mul(f, g).coefficients())
    for n in range(1, cap + 1):
        left = space.product(space.power(cf, n), cg)
        right = space.product(space.power(cf, n - 1), cfg)
        if left == right:
            return n
    return None


# ---------------------------------------------------------------------------
# coefficient-tuple enumeration helpers


def _convolver(ring: FiniteRing, slots, prod_slots):
    """Convolution over coefficient tuples: returns list of product coeffs."""
    pos_of = {exp: i for i, exp in enumerate(prod_slots)}
    L = len(slots)
    pairpos = [
        [
            pos_of[tuple(a + b for a, b in zip(slots[i], slots[j]))]
            for j in range(L)
        ]
        for i in range(L)
    ]
    zero = ring.zero
    mtab = ring.mul_table()
    atab = ring.add_table()
    if mtab is not None and atab is not None:

        def convolve(fa: Sequence[int], fb: Sequence[int]) -> list[int]:
            out = [zero] * len(prod_slots)
            for i in range(L):
                ca = fa[i]
                if ca != zero:
                    mrow = mtab[ca]
                    row = pairpos[i]
                    for j in range(L):
                        cb = fb[j]
                        if cb != zero:
                            p = mrow[cb]
                            if p != zero:
                                pos = row[j]
                                out[pos] = atab[out[pos]][p]
            return out

    else:
        mul = ring.mul
        add = ring.add

        def convolve(fa: Sequence[int], fb: Sequence[int]) -> list[int]:
            out = [zero] * len(prod_slots)
            for i in range(L):
                ca = fa[i]
                if ca != zero:
                    row = pairpos[i]
                    for j in range(L):
                        cb = fb[j]
                        if cb != zero:
                            p = mul(ca, cb)
                            if p != zero:
                                pos = row[j]
                                out[pos] = add(out[pos], p)
            return out

    return convolve


def _tuple_to_poly(ring: FiniteRing, num_vars: int, slots, coeffs) -> Polynomial:
    return make_poly(
        ring,
        num_vars,
        {exp: c for exp, c in zip(slots, coeffs) if c != ring.zero},
    )


def _iter_coeff_tuples(order: int, length: int):
    """All coefficient tuples in ascending lex order."""
    tup = [0] * length
    while True:
        yield tuple(tup)
        i = length - 1
        while i >= 0 and tup[i] == order - 1:
            tup[i] = 0
            i -= 1
        if i < 0:
            return
        tup[i] += 1


def _admissible_polys(ring: FiniteRing, slots, skip_inside: Optional[frozenset[int]]):
    """Coefficient tuples whose content is proper and not inside skip_inside.

    skip_inside=None means skip only the zero content (search variant);
    otherwise contents contained in the given ideal element set are skipped
    (poly-omega variant, where skip_inside contains zero anyway).
    """
    space = content_space(ring)
    out = []
    full = space.full_id
    for coeffs in _iter_coeff_tuples(ring.order, len(slots)):
        cid = space.id_of_coeffs(coeffs)
        if cid == full:
            continue
        if skip_inside is None:
            if cid == space.zero_id:
                continue
        elif space.set_of(cid) <= skip_inside:
            continue
        out.append((coeffs, cid))
    return out


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a pair search: first canonical witness, or a clean sweep."""

    found: bool
    witness: Optional[tuple[Polynomial, Polynomial]]
    mode: str
    checked: int
    seed: Optional[int] = None


def _pair_search(
    ring: FiniteRing,
    num_vars: int,
    max_deg: int,
    violates: Callable,
    budget: int,
    sample: int,
    seed: int,
) -> SearchOutcome:
    slots = monomials_up_to(num_vars, max_deg)
    prod_slots = monomials_up_to(num_vars, 2 * max_deg)
    convolve = _convolver(ring, slots, prod_slots)
    space = content_space(ring)
    exhaustive = ring.order ** len(slots) <= budget
    if exhaustive:
        adm = _admissible_polys(ring, slots, None)
        checked = 0
        for ia in range(len(adm)):
            fa, ca = adm[ia]
            for ib in range(ia, len(adm)):
                fb, cb = adm[ib]
                checked += 1
                if violates(space, convolve(fa, fb), ca, cb):
                    witness = (
                        _tuple_to_poly(ring, num_vars, slots, fa),
                        _tuple_to_poly(ring, num_vars, slots, fb),
                    )
                    return SearchOutcome(True, witness, "exhaustive", checked)
        return SearchOutcome(False, None, "exhaustive", checked)
    rng = random.Random(seed)
    order = ring.order
    L = len(slots)
    full = space.full_id
    zero_id = space.zero_id
    checked = 0
    for _ in range(sample):
        fa = tuple(rng.randrange(order) for _ in range(L))
        fb = tuple(rng.randrange(order) for _ in range(L))
        ca = space.id_of_coeffs(fa)
        cb = space.id_of_coeffs(fb)
        if ca in (full, zero_id) or cb in (full, zero_id):
            continue
        checked += 1
        if violates(space, convolve(fa, fb), ca, cb):
            if fb < fa:
                fa, fb = fb, fa
            witness = (
                _tuple_to_poly(ring, num_vars, slots, fa),
                _tuple_to_poly(ring, num_vars, slots, fb),
            )
            return SearchOutcome(True, witness, f"sampled:{sample}", checked, seed)
    return SearchOutcome(False, None, f"sampled:{sample}", checked, seed)


def _gaussian_violation(space: ContentSpace, prod_coeffs, ca: int, cb: int) -> bool:
    return space.id_of_coeffs(prod_coeffs) != space.product(ca, cb)


def _armendariz_violation(space: ContentSpace, prod_coeffs, ca: int, cb: int) -> bool:
    zero = space.ring.zero
    if any(c != zero for c in prod_coeffs):
        return False
    return space.product(ca, cb) != space.zero_id


def gaussian_search(
    ring: FiniteRing,
    num_vars: int = 1,
    max_deg: int = 1,
    budget: int = DEFAULT_BUDGET,
    sample: int = DEFAULT_SAMPLE,
    seed: int = 0,
) -> SearchOutcome:
    """First pair with c(fg) != c(f)c(g) up to the degree bound, if any."""
    return _pair_search(
        ring, num_vars, max_deg, _gaussian_violation, budget, sample, seed
    )


def armendariz_search(
    ring: FiniteRing,
    num_vars: int = 1,
    max_deg: int = 1,
    budget: int = DEFAULT_BUDGET,
    sample: int = DEFAULT_SAMPLE,
    seed: int = 0,
) -> SearchOutcome:
    """First pair with fg = 0 but c(f)c(g) != 0, if any."""
    return _pair_search(
        ring, num_vars, max_deg, _armendariz_violation, budget, sample, seed
    )


# ---------------------------------------------------------------------------
# Dedekind-Mertens exponent table


@dataclass(frozen=True)
class DmTable:
    """Distribution of dm exponents over all pairs up to the bounds."""

    histogram: tuple[tuple[int, int], ...]
    max_exponent: int
    witness: Optional[tuple[Polynomial, Polynomial]]
    bound_holds: Optional[bool]
    cap_exceeded: int
    checked: int
    mode: str
    seed: Optional[int] = None


def dm_exponent_table(
    ring: FiniteRing,
    num_vars: int = 1,
    max_deg: int = 1,
    cap: int = DEFAULT_CAP,
    budget: int = DEFAULT_BUDGET,
    sample: int = DEFAULT_SAMPLE,
    seed: int = 0,
) -> DmTable:
    """dm_exponent over all (f, g) pairs, or a seeded sample over budget.

    bound_holds reports the univariate classical bound l <= deg(g)+1 (with
    deg(0) treated as 0); None for multivariate sweeps where the classical
    degree bound statement does not apply.
    """
    slots = monomials_up_to(num_vars, max_deg)
    prod_slots = monomials_up_to(num_vars, 2 * max_deg)
    convolve = _convolver(ring, slots, prod_slots)
    space = content_space(ring)
    slot_degs = [sum(e) for e in slots]
    zero = ring.zero
    order = ring.order
    L = len(slots)

    hist: dict[int, int] = {}
    max_exp = 0
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    cap_exceeded = 0
    checked = 0
    bound_ok: Optional[bool] = True if num_vars == 1 else None

    def dm_of(fa, fb) -> Optional[int]:
        ca = space.id_of_coeffs(fa)
        cb = space.id_of_coeffs(fb)
        cab = space.id_of_coeffs(convolve(fa, fb))
        for n in range(1, cap + 1):
            if space.product(space.power(ca, n), cb) == space.product(
                space.power(ca, n - 1), cab
            ):
                return n
        return None

    def record(fa, fb) -> None:
        nonlocal max_exp, witness, cap_exceeded, checked, bound_ok
        checked += 1
        n = dm_of(fa, fb)
        if n is None:
            cap_exceeded += 1
            return
        hist[n] = hist.get(n, 0) + 1
        if n > max_exp:
            max_exp = n
            witness = (fa, fb)
        if bound_ok is not None and bound_ok:
            deg_g = max(
                (d for c, d in zip(fb, slot_degs) if c != zero), default=0
            )
            if n > deg_g + 1:
                bound_ok = False

    exhaustive = order ** (2 * L) <= budget
    used_seed: Optional[int] = None
    if exhaustive:
        mode = "exhaustive"
        for fa in _iter_coeff_tuples(order, L):
            for fb in _iter_coeff_tuples(order, L):
                record(fa, fb)
    else:
        mode = f"sampled:{sample}"
        used_seed = seed
        rng = random.Random(seed)
        for _ in range(sample):
            fa = tuple(rng.randrange(order) for _ in range(L))
            fb = tuple(rng.randrange(order) for _ in range(L))
            record(fa, fb)

    witness_polys = None
    if witness is not None:
        witness_polys = (
            _tuple_to_poly(ring, num_vars, slots, witness[0]),
            _tuple_to_poly(ring, num_vars, slots, witness[1]),
        )
    return DmTable(
        histogram=tuple(sorted(hist.items())),
        max_exponent=max_exp,
        witness=witness_polys,
        bound_holds=bound_ok,
        cap_exceeded=cap_exceeded,
        checked=checked,
        mode=mode,
        seed=used_seed,
    )


# ---------------------------------------------------------------------------
# principal-content factorization (residue rings and products)


@dataclass(frozen=True)
class BezoutFactorization:
    """g = unit_part * b with c(unit_part) = R and (b) = c(g).

    r and s follow the ascending graded-lex term order of g: term i has
    coefficient b_i = r_i * b and b = sum_i s_i b_i; d = sum_i s_i r_i. When
    1 - d is nonzero the unit_part carries it on fresh_exponent, the least
    exponent vector outside the support of g.
    """

    poly: Polynomial
    b: RingElement
    r: tuple[int, ...]
    s: tuple[int, ...]
    d: RingElement
    fresh_exponent: tuple[int, ...]
    unit_part: Polynomial


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _principal_combination(
    ring: FiniteRing, values: Sequence[int]
) -> tuple[int, list[int], list[int]]:
    """(b, r, s): (values) = (b), values[i] = r[i]*b, b = sum s[i]*values[i]."""
    if isinstance(ring, ZmodRing):
        n = ring.modulus
        g = 0
        combo: list[int] = []
        # left-to-right accumulation; a value that does not strictly
        # refine the gcd keeps the existing combination (canonical form)
        for v in values:
            g2 = math.gcd(g, v)
            if g2 == g and g != 0:
                combo.append(0)
            else:
                g2, u, w = _ext_gcd(g, v)
                combo = [(c * u) % n for c in combo]
                combo.append(w % n)
            g = g2
        g2 = math.gcd(g, n)
        if g2 != g:
            _, u, _ = _ext_gcd(g, n)
            combo = [(c * u) % n for c in combo]
        b = g2 % n
        if b == 0:
            # every value is 0 mod n; happens for one factor of a product
            # ring whose column vanishes, and (0) = (0) with r = s = 0
            return 0, [0] * len(values), [0] * len(values)
        r = [(v // b) % n for v in values]
        return b, r, combo
    if isinstance(ring, ProductRing):
        lefts = [ring.decode(v)[0] for v in values]
        rights = [ring.decode(v)[1] for v in values]
        bl, rl, sl = _principal_combination(ring.left, lefts)
        br, rr, sr = _principal_combination(ring.right, rights)
        b = ring.encode(bl, br)
        r = [ring.encode(x, y) for x, y in zip(rl, rr)]
        s = [ring.encode(x, y) for x, y in zip(sl, sr)]
        return b, r, s
    raise UnsupportedRingError(
        f"principal-content factorization needs zmod or products of zmod, "
        f"got {ring.descriptor}"
    )


def _fresh_exponent(support: set[tuple[int, ...]], num_vars: int) -> tuple[int, ...]:
    """Least graded-lex exponent vector not in the support."""
    degree = 0
    while True:
        for exp in monomials_up_to(num_vars, degree):
            if sum(exp) == degree and exp not in support:
                return exp
        degree += 1


def bezout_factor(g: Polynomial) -> BezoutFactorization:
    """Factor g = g' * b with c(g') = R, per the extended-gcd construction.

    Requires g nonzero over zmod:N or a product of such. The three
    invariants (reconstruction, unit content, fresh exponent outside the
    support) are verified before returning; failure is a hard error.
    """
    if g.is_zero:
        raise ValueError("bezout_factor requires a nonzero polynomial")
    ring = g.ring
    values = [c for _, c in g.terms]
    b, r, s = _principal_combination(ring, values)
    mul = ring.mul
    add = ring.add
    d = ring.zero
    for si, ri in zip(s, r):
        d = add(d, mul(si, ri))
    support = {exp for exp, _ in g.terms}
    fresh = _fresh_exponent(support, g.num_vars)
    unit_terms = {exp: ri for (exp, _), ri in zip(g.terms, r)}
    leftover = ring.sub(ring.one, d)
    if leftover != ring.zero:
        unit_terms[fresh] = leftover
    unit_part = make_poly(ring, g.num_vars, unit_terms)

    # verification: the construction is proved, a failure means corrupt input
    reconstructed = poly_mul(unit_part, constant_poly(ring, b, g.num_vars))
    if reconstructed != g:
        raise RuntimeError("principal-content factorization failed to reconstruct g")
    content_ok = closure_elements(ring, unit_part.coefficients()) == frozenset(
        range(ring.order)
    )
    if not content_ok:
        raise RuntimeError("unit part does not have unit content")
    if fresh in support:
        raise RuntimeError("fresh exponent collided with the support")
    combo = ring.zero
    for si, (_, bi) in zip(s, g.terms):
        combo = add(combo, mul(si, bi))
    if combo != b:
        raise RuntimeError("combination coefficients do not reproduce the generator")
    return BezoutFactorization(
        poly=g,
        b=RingElement(ring, b),
        r=tuple(r),
        s=tuple(s),
        d=RingElement(ring, d),
        fresh_exponent=fresh,
        unit_part=unit_part,
    )


# ---------------------------------------------------------------------------
# iterated peeling certificate


@dataclass(frozen=True)
class ContainmentCertificate:
    """Peeling certificate for c(f_1)...c(f_m) against an ideal I.

    exponents[i] is the dm exponent of f_i against the tail product
    f_{i+1}..f_m. chain_containment verifies
    c(f_1)^{l_1} .. c(f_{m-1})^{l_{m-1}} c(f_m) <= I directly;
    final_containment verifies c(f_1)..c(f_m) <= I, the conclusion that is
    guaranteed when I is radical (the ideal_radical flag).
    """

    ideal: Ideal
    exponents: tuple[int, ...]
    chain_containment: bool
    final_containment: bool
    ideal_radical: bool


def certify_content_product(
    ideal: Ideal, fs: Sequence[Polynomial], cap: int = 8
) -> ContainmentCertificate:
    """Certify the peeling chain for polynomials whose product lies in I[X].

    Preconditions: at least two polynomials, all over the ideal's ring, and
    every coefficient of their full product inside I. Raises
    CapExceededError if any peeling exponent is not found within cap.
    """
    if len(fs) < 2:
        raise ValueError("need at least two polynomials")
    ring = ideal.ring
    for f in fs:
        if f.ring is not ring:
            raise ValueError("polynomial ring does not match the ideal's ring")
    num_vars = fs[0].num_vars
    suffix: list[Polynomial] = [fs[-1]]
    for f in reversed(fs[:-1]):
        suffix.append(poly_mul(f, suffix[-1]))
    suffix.reverse()  # suffix[i] = product fs[i..]
    full = suffix[0]
    members = ideal.elements
    if any(c not in members for c in full.coefficients()):
        raise ValueError("product of the polynomials does not lie in I[X]")

    space = content_space(ring)
    exponents: list[int] = []
    for i in range(len(fs) - 1):
        l = dm_exponent(fs[i], suffix[i + 1], cap)
        if l is None:
            raise CapExceededError(
                f"dm exponent of factor {i} not found within cap {cap}"
            )
        exponents.append(l)

    content_ids = [space.id_of_coeffs(f.coefficients()) for f in fs]
    chain = content_ids[-1]
    for cid, l in zip(content_ids[:-1], exponents):
        chain = space.product(chain, space.power(cid, l))
    chain_ok = space.set_of(chain) <= members

    plain = content_ids[-1]
    for cid in content_ids[:-1]:
        plain = space.product(plain, cid)
    final_ok = space.set_of(plain) <= members

    return ContainmentCertificate(
        ideal=ideal,
        exponents=tuple(exponents),
        chain_containment=chain_ok,
        final_containment=final_ok,
        ideal_radical=is_radical_ideal(ideal),
    )


@dataclass(frozen=True)
class CertifySweep:
    """Sweep of certify_content_product over all (f, g) pairs up to the
    degree bound whose product lies in I[X] (ordered pairs; or a seeded
    sample when the pair space exceeds the budget).

    exp_bound_holds: every peeling exponent stayed <= max_deg + 1.
    chain_holds / final_holds: the corresponding certificate fields held
    for every qualifying pair. witness is the first failing pair, if any.
    """

    ideal: Ideal
    max_deg: int
    pairs: int
    qualifying: int
    max_exponent: int
    exp_bound_holds: bool
    chain_holds: bool
    final_holds: bool
    witness: Optional[tuple[Polynomial, Polynomial]]
    mode: str
    seed: Optional[int] = None


def certify_pair_sweep(
    ideal: Ideal,
    num_vars: int = 1,
    max_deg: int = 1,
    cap: int = 8,
    budget: int = DEFAULT_BUDGET,
    sample: int = DEFAULT_SAMPLE,
    seed: int = 0,
) -> CertifySweep:
    """Certify every bounded pair whose product lands in I[X].

    Pairs are filtered with raw coefficient convolution; the certificate
    machinery only runs on qualifying pairs, which are sparse.
    """
    ring = ideal.ring
    slots = monomials_up_to(num_vars, max_deg)
    prod_slots = monomials_up_to(num_vars, 2 * max_deg)
    convolve = _convolver(ring, slots, prod_slots)
    members = ideal.elements
    L = len(slots)
    order = ring.order
    space = content_space(ring)

    qualifying = 0
    max_exp = 0
    exp_ok = True
    chain_ok = True
    final_ok = True
    witness: Optional[tuple[Polynomial, Polynomial]] = None

    # the pair certificate depends only on the content ids of f, g and fg,
    # so identical triples share one computation; the arithmetic is the
    # same peeling as certify_content_product (tests pin the equivalence)
    memo: dict[tuple[int, int, int], tuple[int, bool, bool]] = {}

    def id_certificate(cf: int, cg: int, cfg: int) -> tuple[int, bool, bool]:
        got = memo.get((cf, cg, cfg))
        if got is None:
            l = None
            for n in range(1, cap + 1):
                if space.product(space.power(cf, n), cg) == space.product(
                    space.power(cf, n - 1), cfg
                ):
                    l = n
                    break
            if l is None:
                raise CapExceededError(
                    f"dm exponent not found within cap {cap}"
                )
            chain = space.set_of(space.product(space.power(cf, l), cg)) <= members
            final = space.set_of(space.product(cf, cg)) <= members
            got = (l, chain, final)
            memo[(cf, cg, cfg)] = got
        return got

    def handle(fa, fb) -> None:
        nonlocal qualifying, max_exp, exp_ok, chain_ok, final_ok, witness
        prod_coeffs = convolve(fa, fb)
        if any(c not in members for c in prod_coeffs):
            return
        qualifying += 1
        l, chain, final = id_certificate(
            space.id_of_coeffs(fa),
            space.id_of_coeffs(fb),
            space.id_of_coeffs(prod_coeffs),
        )
        bad = False
        if l > max_exp:
            max_exp = l
        if l > max_deg + 1:
            exp_ok = False
            bad = True
        if not chain:
            chain_ok = False
            bad = True
        if not final:
            final_ok = False
            bad = True
        if bad and witness is None:
            witness = (
                _tuple_to_poly(ring, num_vars, slots, fa),
                _tuple_to_poly(ring, num_vars, slots, fb),
            )

    total_pairs = order ** (2 * L)
    if total_pairs <= budget:
        mode = "exhaustive"
        used_seed = None
        tuples = list(_iter_coeff_tuples(order, L))
        for fa in tuples:
            for fb in tuples:
                handle(fa, fb)
        pairs = total_pairs
    else:
        mode = f"sampled:{sample}"
        used_seed = seed
        rng = random.Random(seed)
        for _ in range(sample):
            fa = tuple(rng.randrange(order) for _ in range(L))
            fb = tuple(rng.randrange(order) for _ in range(L))
            handle(fa, fb)
        pairs = sample

    return CertifySweep(
        ideal=ideal,
        max_deg=max_deg,
        pairs=pairs,
        qualifying=qualifying,
        max_exponent=max_exp,
        exp_bound_holds=exp_ok,
        chain_holds=chain_ok,
        final_holds=final_ok,
        witness=witness,
        mode=mode,
        seed=used_seed,
    )


# ---------------------------------------------------------------------------
# absorbing degree of I[X]: bounded violation search


@dataclass(frozen=True)
class PolyOmegaReport:
    """Bounded check that I[X] is omega(I)-absorbing in R[x_1..x_k].

    lower_witness_valid re-verifies the base witness as constant
    polynomials (their product lies in I[X] with no smaller subproduct),
    which certifies the polynomial absorbing degree is at least omega(I).
    violation, if present, is an (omega+1)-tuple of polynomials whose
    product lies in I[X] with no omega-subproduct inside, refuting the
    degree identity at these bounds.
    """

    ideal: Ideal
    max_deg: int
    omega_base: OmegaResult
    lower_witness_valid: Optional[bool]
    violation: Optional[tuple[Polynomial, ...]]
    mode: str
    checked: int
    seed: Optional[int] = None


def _poly_dict_mul(ring: FiniteRing, a: dict, b: dict) -> dict:
    add = ring.add
    mul = ring.mul
    zero = ring.zero
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            p = mul(ca, cb)
            if p == zero:
                continue
            exp = tuple(x + y for x, y in zip(ea, eb))
            s = add(out.get(exp, zero), p)
            if s == zero:
                out.pop(exp, None)
            else:
                out[exp] = s
    return out


def verify_poly_omega(
    ideal: Ideal,
    max_deg: int = 1,
    num_vars: int = 1,
    cap: int = DEFAULT_CAP,
    budget: int = DEFAULT_BUDGET,
    sample: int = DEFAULT_SAMPLE,
    seed: int = 0,
) -> PolyOmegaReport:
    """Search for (omega+1)-tuples of bounded polynomials violating the
    absorbing property of I[X]; validate the constant lower witness."""
    if not ideal.is_proper:
        raise ValueError("poly-omega checks need a proper ideal")
    ring = ideal.ring
    base = omega(ideal, cap)
    if base.value is None:
        return PolyOmegaReport(
            ideal, max_deg, base, None, None, "skipped:omega-cap", 0
        )
    n = base.value

    witness_valid: Optional[bool] = None
    if n == 1:
        witness_valid = True  # proper ideals are at least 1-absorbing targets
    elif base.lower_witness is not None:
        witness_valid = _constant_witness_valid(ideal, base.lower_witness, n)
    members = ideal.elements
    slots = monomials_up_to(num_vars, max_deg)
    space = content_space(ring)
    # exhaustive only when the whole tuple space fits the budget: the DFS
    # walks (n+1)-tuples of admissible polynomials, not single polynomials
    exhaustive = ring.order ** len(slots) <= budget
    adm = None
    if exhaustive:
        adm = _admissible_polys(ring, slots, members)
        exhaustive = len(adm) ** (n + 1) <= budget

    def violation_of(dicts: list[dict]) -> bool:
        full = dicts[0]
        for d in dicts[1:]:
            full = _poly_dict_mul(ring, full, d)
        if any(c not in members for c in full.values()):
            return False
        k = len(dicts)
        for omit in range(k):
            sub: dict = {(0,) * num_vars: ring.one}
            for t, d in enumerate(dicts):
                if t != omit:
                    sub = _poly_dict_mul(ring, sub, d)
            if all(c in members for c in sub.values()):
                return False
        return True

    if exhaustive:
        cand_dicts = [
            {exp: c for exp, c in zip(slots, coeffs) if c != ring.zero}
            for coeffs, _ in adm
        ]
        found = _nondecreasing_tuple_scan(ring, members, cand_dicts, n, num_vars)
        checked = found[1]
        if found[0] is not None:
            witness = tuple(
                _tuple_to_poly(ring, num_vars, slots, adm[i][0]) for i in found[0]
            )
            return PolyOmegaReport(
                ideal, max_deg, base, witness_valid, witness, "exhaustive", checked
            )
        return PolyOmegaReport(
            ideal, max_deg, base, witness_valid, None, "exhaustive", checked
        )

    rng = random.Random(seed)
    order = ring.order
    L = len(slots)
    full_id = space.full_id
    checked = 0
    for _ in range(sample):
        tuples = [
            tuple(rng.randrange(order) for _ in range(L)) for _ in range(n + 1)
        ]
        ok = True
        for t in tuples:
            cid = space.id_of_coeffs(t)
            if cid == full_id or space.set_of(cid) <= members:
                ok = False
                break
        if not ok:
            continue
        checked += 1
        dicts = [
            {exp: c for exp, c in zip(slots, t) if c != ring.zero} for t in tuples
        ]
        if violation_of(dicts):
            witness = tuple(
                _tuple_to_poly(ring, num_vars, slots, t) for t in sorted(tuples)
            )
            return PolyOmegaReport(
                ideal,
                max_deg,
                base,
                witness_valid,
                witness,
                f"sampled:{sample}",
                checked,
                seed,
            )
    return PolyOmegaReport(
        ideal, max_deg, base, witness_valid, None, f"sampled:{sample}", checked, seed
    )


def _constant_witness_valid(ideal: Ideal, witness: tuple, n: int) -> bool:
    """The base lower witness, read as constant polynomials: product in
    I[X], no (n-1)-subproduct in I[X]; same arithmetic as the base ring."""
    ring = ideal.ring
    mul = ring.mul
    full = ring.one
    for x in witness:
        full = mul(full, x)
    if full not in ideal.elements:
        return False
    if len(witness) != n:
        return False
    for omit in range(n):
        sub = ring.one
        for t, x in enumerate(witness):
            if t != omit:
                sub = mul(sub, x)
        if sub in ideal.elements:
            return False
    return True


def _nondecreasing_tuple_scan(
    ring: FiniteRing,
    members: frozenset[int],
    candidates: list[dict],
    n: int,
    num_vars: int,
) -> tuple[Optional[tuple[int, ...]], int]:
    """(first violating candidate-index tuple or None, leaves checked)."""
    k = n + 1
    count = len(candidates)
    one_dict = {(0,) * num_vars: ring.one}
    chosen = [0] * k
    prefix: list[dict] = [one_dict] * (k + 1)
    checked = 0

    def in_ideal(d: dict) -> bool:
        return all(c in members for c in d.values())

    def leaf_ok() -> bool:
        suffix = one_dict
        for t in range(k - 1, -1, -1):
            if t == k - 1 or chosen[t] != chosen[t + 1]:
                sub = _poly_dict_mul(ring, prefix[t], suffix)
                if in_ideal(sub):
                    return False
            suffix = _poly_dict_mul(ring, suffix, candidates[chosen[t]])
        return True

    def rec(start: int, depth: int) -> Optional[tuple[int, ...]]:
        nonlocal checked
        acc = prefix[depth]
        last = depth == n
        for ci in range(start, count):
            p = _poly_dict_mul(ring, acc, candidates[ci])
            if last:
                checked += 1
                if in_ideal(p):
                    chosen[depth] = ci
                    prefix[depth + 1] = p
                    if leaf_ok():
                        return tuple(chosen)
            elif not in_ideal(p):
                chosen[depth] = ci
                prefix[depth + 1] = p
                found = rec(ci, depth + 1)
                if found is not None:
                    return found
        return None

    return rec(0, 0), checked


# ---------------------------------------------------------------------------
# quotient transfer (content multiplicativity vs annihilator condition)


def project_poly(quotient: QuotientRing, f: Polynomial) -> Polynomial:
    """Image of a parent-ring polynomial in the quotient ring."""
    if f.ring is not quotient.parent:
        raise ValueError("polynomial does not live in the quotient's parent")
    project = quotient.project
    return make_poly(
        quotient, f.num_vars, {exp: project[c] for exp, c in f.terms}
    )


def lift_poly(quotient: QuotientRing, f: Polynomial) -> Polynomial:
    """Representative lift of a quotient-ring polynomial to the parent."""
    if f.ring is not quotient:
        raise ValueError("polynomial does not live in the quotient ring")
    reps = quotient.reps
    return make_poly(
        quotient.parent, f.num_vars, {exp: reps[c] for exp, c in f.terms}
    )


@dataclass(frozen=True)
class QuotientAgreementReport:
    """Bounded two-way transfer between content multiplicativity on R and
    the annihilator-content condition on every proper quotient R/I.

    forward_verified: a multiplicativity counterexample (f, g) on R was
    re-verified to project to an annihilating violation over R/c(fg).
    backward_verified: the first quotient violation found was lifted and
    re-verified as a multiplicativity counterexample on R. agree summarizes
    that the bounded verdicts match in both directions.
    """

    ring: FiniteRing
    num_vars: int
    max_deg: int
    gaussian: SearchOutcome
    rows: tuple[tuple[Ideal, SearchOutcome], ...]
    forward_verified: Optional[bool]
    backward_verified: Optional[bool]

    @property
    def agree(self) -> bool:
        any_found = any(out.found for _, out in self.rows)
        if self.gaussian.found != any_found:
            return False
        if self.forward_verified is False or self.backward_verified is False:
            return False
        return True


def gaussian_iff_armendariz_quotients(
    ring: FiniteRing,
    num_vars: int = 1,
    max_deg: int = 1,
    budget: int = DEFAULT_BUDGET,
    sample: int = DEFAULT_SAMPLE,
    seed: int = 0,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> QuotientAgreementReport:
    """Run the multiplicativity search on R and the annihilator search on
    R/I for every proper ideal I; verify the two transfer constructions."""
    g_out = gaussian_search(ring, num_vars, max_deg, budget, sample, seed)
    rows: list[tuple[Ideal, SearchOutcome]] = []
    quotients: dict[frozenset[int], QuotientRing] = {}
    for ideal in all_ideals(ring, lattice_cap):
        if not ideal.is_proper:
            continue
        q = quotient_by(ideal)
        quotients[ideal.elements] = q
        rows.append(
            (ideal, armendariz_search(q, num_vars, max_deg, budget, sample, seed))
        )

    forward: Optional[bool] = None
    if g_out.found:
        f, g = g_out.witness
        prod_content = content(poly_mul(f, g))
        q = quotients.get(prod_content.elements)
        forward = False
        if q is not None:
            fq = project_poly(q, f)
            gq = project_poly(q, g)
            image_zero = poly_mul(fq, gq).is_zero
            cf = closure_elements(q, fq.coefficients())
            cg = closure_elements(q, gq.coefficients())
            prod = product_elements(q, cf, cg)
            nonzero = prod != frozenset({q.zero})
            row_found = any(
                out.found for ideal, out in rows if ideal.elements == prod_content.elements
            )
            forward = image_zero and nonzero and row_found

    backward: Optional[bool] = None
    for ideal, out in rows:
        if out.found:
            q = quotients[ideal.elements]
            fq, gq = out.witness
            fr = lift_poly(q, fq)
            gr = lift_poly(q, gq)
            lifted_violation = not _contents_multiply(fr, gr)
            backward = lifted_violation and g_out.found
            break

    return QuotientAgreementReport(
        ring=ring,
        num_vars=num_vars,
        max_deg=max_deg,
        gaussian=g_out,
        rows=tuple(rows),
        forward_verified=forward,
        backward_verified=backward,
    )


def _contents_multiply(f: Polynomial, g: Polynomial) -> bool:
    space = content_space(f.ring)
    cf = space.id_of_coeffs(f.coefficients())
    cg = space.id_of_coeffs(g.coefficients())
    cfg = space.id_of_coeffs(poly_mul(f, g).coefficients())
    return cfg == space.product(cf, cg)
