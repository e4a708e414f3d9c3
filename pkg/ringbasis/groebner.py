"""
Groebner Module

Groebner-basis construction and certification over coefficient rings:
Buchberger over the integers (S- and G-polynomials, strong reduction) and
over fields, the block-order route for k[t][x], normal forms with
canonical coset representatives, short reduced bases and the three
certification predicates (Groebner, strong Groebner, strong reduced).
"""

import heapq
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from ringbasis.coeffring import (
    RingDescriptor,
    RingElement,
    RingKind,
    coefficient_ideal,
    eta,
    leading_generators,
    membership_witness,
    xgcd,
)
from ringbasis.errors import (
    DimensionMismatch,
    NotCertified,
    PairLimitExceeded,
    ProbeNotInIdeal,
    RingMismatch,
    UnsupportedRing,
    ZeroPolynomial,
)
from ringbasis.poly import (
    LeadingData,
    Monomial,
    MonomialOrder,
    Polynomial,
    block_order,
    from_joint,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    to_joint,
)

logger = logging.getLogger(__name__)


class Certification(Enum):
    """How much of the Groebner theory a basis is known to satisfy"""
    RAW = "raw"
    GROEBNER = "groebner"
    SHORT_REDUCED = "short_reduced"
    STRONG_PID = "strong_pid"
    STRONG_REDUCED = "strong_reduced"

    @property
    def is_groebner(self) -> bool:
        return self is not Certification.RAW

    @property
    def is_short_reduced(self) -> bool:
        return self in (Certification.SHORT_REDUCED, Certification.STRONG_REDUCED)


@dataclass(frozen=True)
class GroebnerBasis:
    """Generator list tagged with its ring, order and certification level"""
    ring: RingDescriptor
    order: MonomialOrder
    nvars: int
    elements: Tuple[Polynomial, ...]
    certification: Certification = Certification.RAW

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        for g in self.elements:
            if g.is_zero():
                raise ZeroPolynomial("bases never contain the zero polynomial")
            if g.ring != self.ring:
                raise RingMismatch(f"element over {g.ring.to_header()} in a basis over {self.ring.to_header()}")
            if g.nvars != self.nvars:
                raise DimensionMismatch(f"element in {g.nvars} variables in a basis in {self.nvars}")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("basis elements must be pairwise distinct")

    @classmethod
    def from_polynomials(cls, polys: Iterable[Polynomial], order: MonomialOrder,
                         ring: Optional[RingDescriptor] = None, nvars: Optional[int] = None,
                         certification: Certification = Certification.RAW) -> "GroebnerBasis":
        """Build a basis from arbitrary generators, dropping zeros and duplicates."""
        polys = list(polys)
        ring, nvars = _infer_context(polys, ring, nvars)
        unique: List[Polynomial] = []
        for f in polys:
            if not f.is_zero() and f not in unique:
                unique.append(f)
        return cls(ring, order, nvars, tuple(unique), certification)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading(self) -> List[LeadingData]:
        return [g.leading_data(self.order) for g in self.elements]

    def is_monic(self) -> bool:
        return all(self.ring.is_one(ld.lc) for ld in self.leading())

    def format(self, names: Optional[Sequence[str]] = None) -> List[str]:
        return [g.format(names, self.order) for g in self.elements]


class PairKind(Enum):
    """Critical pair kinds: S cancels leading terms, G realises the gcd of leading coefficients"""
    S = "S"
    G = "G"


@dataclass(frozen=True)
class CriticalPair:
    i: int
    j: int
    kind: PairKind
    lcm_monomial: Monomial


class NormalForm(NamedTuple):
    remainder: Polynomial
    quotients: List[Polynomial]


class StrongCheck(NamedTuple):
    is_strong: bool
    counterexample: Optional[Polynomial]


class StrongReducedCheck(NamedTuple):
    ok: bool
    failed_condition: Optional[int]


@dataclass(frozen=True)
class FieldBasis:
    """Reduced Groebner basis over a field with optional cofactors in the input generators"""
    elements: Tuple[Polynomial, ...]
    cofactors: Tuple[Tuple[Polynomial, ...], ...] = ()


def _infer_context(polys: Sequence[Polynomial], ring: Optional[RingDescriptor],
                   nvars: Optional[int]) -> Tuple[RingDescriptor, int]:
    if polys:
        ring = ring or polys[0].ring
        nvars = polys[0].nvars if nvars is None else nvars
    if ring is None or nvars is None:
        raise ValueError("ring and variable count are required for an empty generator list")
    for f in polys:
        if f.ring != ring:
            raise RingMismatch(f"generator over {f.ring.to_header()} among generators over {ring.to_header()}")
        if f.nvars != nvars:
            raise DimensionMismatch(f"generator in {f.nvars} variables among generators in {nvars}")
    return ring, nvars


def _sorted_elements(polys: Iterable[Polynomial], ring: RingDescriptor,
                     order: MonomialOrder) -> List[Polynomial]:
    def key(g: Polynomial):
        ld = g.leading_data(order)
        return (order.key(ld.lm), ring.sort_key(ld.lc))
    return sorted(polys, key=key, reverse=True)


# Normal forms

def normal_form(f: Polynomial, G: GroebnerBasis) -> NormalForm:
    """
    Reduce f by G down to canonical coset representatives.

    Every term c*x^a of the remainder satisfies c == eta(I, c) where I is
    generated by the leading coefficients of the elements whose leading
    monomial divides x^a.

    Args:
        f: Polynomial over the basis ring
        G: Basis to reduce by

    Returns:
        NormalForm(remainder, quotients) with f == sum(q_i * g_i) + remainder

    Raises:
        RingMismatch: if f lives over another ring
    """
    ring, order = G.ring, G.order
    if f.ring != ring:
        raise RingMismatch(f"cannot reduce a polynomial over {f.ring.to_header()} by a basis over {ring.to_header()}")
    if f.nvars != G.nvars:
        raise DimensionMismatch(f"polynomial in {f.nvars} variables, basis in {G.nvars}")

    leads = G.leading()
    quotients: List[dict] = [{} for _ in leads]
    remainder = {}
    h = f
    while not h.is_zero():
        ld = h.leading_data(order)
        alpha, c = ld.lm, ld.lc
        divisors = [i for i, gd in enumerate(leads) if monomial_divides(gd.lm, alpha)]
        rep = c
        if divisors:
            ideal = coefficient_ideal(ring, [leads[i].lc for i in divisors])
            rep = eta(ideal, c)
            diff = ring.sub(c, rep)
            if not ring.is_zero(diff):
                witness = membership_witness(ideal, diff)
                for i, b in zip(divisors, witness):
                    if ring.is_zero(b):
                        continue
                    m = monomial_div(alpha, leads[i].lm)
                    h = h - G.elements[i].mul_term(b, m)
                    quotients[i][m] = b
        if not ring.is_zero(rep):
            remainder[alpha] = rep
        h = h.without(alpha)

    return NormalForm(
        Polynomial._make(ring, G.nvars, remainder),
        [Polynomial._make(ring, G.nvars, q) for q in quotients],
    )


def ideal_contains(G: GroebnerBasis, f: Polynomial) -> bool:
    """Membership test; meaningful when G is a Groebner basis."""
    return normal_form(f, G).remainder.is_zero()


# Critical pairs

def _pair_multipliers(ring: RingDescriptor, a: LeadingData, b: LeadingData,
                      kind: PairKind) -> Tuple[RingElement, Monomial, RingElement, Monomial]:
    lcm = monomial_lcm(a.lm, b.lm)
    ma, mb = monomial_div(lcm, a.lm), monomial_div(lcm, b.lm)
    if kind is PairKind.G:
        if ring.kind is not RingKind.INTEGERS:
            raise UnsupportedRing("G-polynomials are defined over the integers")
        x, y, _ = xgcd(a.lc, b.lc)
        return x, ma, y, mb
    if ring.kind is RingKind.INTEGERS:
        x, y, g = xgcd(a.lc, b.lc)
        lcm_c = abs(a.lc * b.lc) // g
        return lcm_c // a.lc, ma, -(lcm_c // b.lc), mb
    if ring.is_field:
        return ring.inverse(a.lc), ma, ring.neg(ring.inverse(b.lc)), mb
    raise UnsupportedRing("critical pairs over k[t] are formed in the joint ring")


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial: cancels the leading terms through lcm of coefficients and monomials."""
    fd, gd = f.leading_data(order), g.leading_data(order)
    cf, mf, cg, mg = _pair_multipliers(f.ring, fd, gd, PairKind.S)
    return f.mul_term(cf, mf) + g.mul_term(cg, mg)


def g_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """G-polynomial: leading term gcd(lc f, lc g) times lcm(lm f, lm g)."""
    fd, gd = f.leading_data(order), g.leading_data(order)
    cf, mf, cg, mg = _pair_multipliers(f.ring, fd, gd, PairKind.G)
    return f.mul_term(cf, mf) + g.mul_term(cg, mg)


# Buchberger engine shared by the integer and field cases

@dataclass
class _Entry:
    poly: Polynomial
    lead: LeadingData
    cofactors: Optional[List[Polynomial]] = None


def _combine(cof: Optional[List[Polynomial]], other: Optional[List[Polynomial]],
             c: RingElement, m: Monomial) -> Optional[List[Polynomial]]:
    # cof - c*x^m*other
    if cof is None:
        return None
    return [a - b.mul_term(c, m) for a, b in zip(cof, other)]


def _normalize(ring: RingDescriptor, order: MonomialOrder, h: Polynomial,
               cof: Optional[List[Polynomial]]) -> _Entry:
    ld = h.leading_data(order)
    if ring.kind is RingKind.INTEGERS:
        unit = -1 if ld.lc < 0 else 1
    else:
        unit = ring.inverse(ld.lc)
    if not ring.is_one(unit):
        h = h.scale(unit)
        if cof is not None:
            cof = [c.scale(unit) for c in cof]
        ld = h.leading_data(order)
    return _Entry(h, ld, cof)


def _top_reduce(ring: RingDescriptor, order: MonomialOrder, h: Polynomial,
                cof: Optional[List[Polynomial]], basis: Sequence[_Entry]):
    # Strong reduction: the leading term must be divisible by a single leading term
    while not h.is_zero():
        ld = h.leading_data(order)
        for e in basis:
            if monomial_divides(e.lead.lm, ld.lm) and ring.divides(e.lead.lc, ld.lc):
                c = ring.exact_quotient(ld.lc, e.lead.lc)
                m = monomial_div(ld.lm, e.lead.lm)
                h = h - e.poly.mul_term(c, m)
                cof = _combine(cof, e.cofactors, c, m)
                break
        else:
            break
    return h, cof


def _full_reduce(ring: RingDescriptor, order: MonomialOrder, entry: _Entry,
                 basis: Sequence[_Entry]) -> _Entry:
    # Field case: reduce every term below the leading one
    lead = entry.lead
    h = entry.poly.without(lead.lm)
    cof = entry.cofactors
    kept = {lead.lm: lead.lc}
    while not h.is_zero():
        ld = h.leading_data(order)
        for e in basis:
            if monomial_divides(e.lead.lm, ld.lm):
                c = ring.mul(ld.lc, ring.inverse(e.lead.lc))
                m = monomial_div(ld.lm, e.lead.lm)
                h = h - e.poly.mul_term(c, m)
                cof = _combine(cof, e.cofactors, c, m)
                break
        else:
            kept[ld.lm] = ld.lc
            h = h.without(ld.lm)
    poly = Polynomial._make(ring, entry.poly.nvars, kept)
    return _Entry(poly, lead, cof)


def _complete(ring: RingDescriptor, order: MonomialOrder, entries: Sequence[_Entry],
              max_pairs: int = 0) -> List[_Entry]:
    basis: List[_Entry] = []
    heap: list = []
    with_g_pairs = ring.kind is RingKind.INTEGERS

    def add(entry: _Entry):
        j = len(basis)
        basis.append(entry)
        for i in range(j):
            a, b = basis[i].lead, entry.lead
            lcm = monomial_lcm(a.lm, b.lm)
            key = order.key(lcm)
            coprime = lcm == monomial_mul(a.lm, b.lm)
            if not (ring.is_field and coprime):
                heapq.heappush(heap, (key, 0, i, j, lcm))
            if with_g_pairs:
                heapq.heappush(heap, (key, 1, i, j, lcm))

    for e in entries:
        h, cof = _top_reduce(ring, order, e.poly, e.cofactors, basis)
        if not h.is_zero():
            add(_normalize(ring, order, h, cof))

    processed = 0
    while heap:
        _, kind_flag, i, j, lcm = heapq.heappop(heap)
        processed += 1
        if max_pairs and processed > max_pairs:
            raise PairLimitExceeded(f"critical-pair budget of {max_pairs} exhausted", max_pairs=max_pairs)
        pair = CriticalPair(i, j, PairKind.G if kind_flag else PairKind.S, lcm)
        a, b = basis[pair.i], basis[pair.j]
        ca, ma, cb, mb = _pair_multipliers(ring, a.lead, b.lead, pair.kind)
        h = a.poly.mul_term(ca, ma) + b.poly.mul_term(cb, mb)
        cof = None
        if a.cofactors is not None:
            cof = [x.mul_term(ca, ma) + y.mul_term(cb, mb) for x, y in zip(a.cofactors, b.cofactors)]
        h, cof = _top_reduce(ring, order, h, cof, basis)
        if not h.is_zero():
            logger.debug(f"{pair.kind.value}-pair ({i}, {j}) adds an element with leading monomial "
                         f"{h.leading_data(order).lm}")
            add(_normalize(ring, order, h, cof))

    logger.debug(f"Buchberger processed {processed} critical pairs, {len(basis)} elements before minimisation")
    return basis


def _minimalize(ring: RingDescriptor, basis: Sequence[_Entry]) -> List[_Entry]:
    # Drop elements whose leading term is divisible by another leading term
    kept = []
    for k, e in enumerate(basis):
        redundant = False
        for j, other in enumerate(basis):
            if j == k:
                continue
            if monomial_divides(other.lead.lm, e.lead.lm) and ring.divides(other.lead.lc, e.lead.lc):
                same = other.lead.lm == e.lead.lm and ring.divides(e.lead.lc, other.lead.lc)
                if not same or j < k:
                    redundant = True
                    break
        if not redundant:
            kept.append(e)
    return kept


def _entries(polys: Sequence[Polynomial], order: MonomialOrder, track: bool) -> List[_Entry]:
    entries = []
    for j, f in enumerate(polys):
        if f.is_zero():
            continue
        cof = None
        if track:
            cof = [Polynomial.zero(f.ring, f.nvars) for _ in polys]
            cof[j] = Polynomial.constant(f.ring, f.nvars, 1)
        entries.append(_Entry(f, f.leading_data(order), cof))
    return entries


def field_buchberger(gens: Sequence[Polynomial], order: MonomialOrder, track: bool = False) -> FieldBasis:
    """
    Reduced Groebner basis over a field.

    Args:
        gens: Generators over a field
        order: Monomial order
        track: Also return cofactors expressing each element in ``gens``

    Returns:
        FieldBasis with monic, inter-reduced elements in ascending order
    """
    if not gens:
        return FieldBasis((), ())
    ring = gens[0].ring
    if not ring.is_field:
        raise UnsupportedRing(f"field Buchberger over {ring.to_header()}")
    basis = _complete(ring, order, _entries(gens, order, track))
    basis = _minimalize(ring, basis)
    reduced = [_full_reduce(ring, order, e, [o for o in basis if o is not e]) for e in basis]
    reduced.sort(key=lambda e: order.key(e.lead.lm))
    elements = tuple(e.poly for e in reduced)
    cofactors = tuple(tuple(e.cofactors) for e in reduced) if track else ()
    return FieldBasis(elements, cofactors)


def buchberger_pid(gens: Sequence[Polynomial], order: MonomialOrder, max_pairs: int = 0,
                   ring: Optional[RingDescriptor] = None, nvars: Optional[int] = None) -> GroebnerBasis:
    """
    Strong Groebner basis over the integers, classical Buchberger over a field.

    Pairs are processed by increasing lcm monomial, S before G at equal lcm.

    Raises:
        UnsupportedRing: for k[t] coefficient rings (use buchberger_block)
        PairLimitExceeded: when ``max_pairs`` > 0 pairs did not suffice
    """
    gens = list(gens)
    ring, nvars = _infer_context(gens, ring, nvars)
    if ring.kind is RingKind.POLY_OVER_FIELD:
        raise UnsupportedRing("polynomial coefficient rings go through buchberger_block")
    basis = _minimalize(ring, _complete(ring, order, _entries(gens, order, False), max_pairs))
    elements = _sorted_elements([e.poly for e in basis], ring, order)
    certification = Certification.STRONG_PID if ring.kind is RingKind.INTEGERS else Certification.GROEBNER
    logger.info(f"Buchberger over {ring.to_header()}: {len(gens)} generators -> {len(elements)} basis elements")
    return GroebnerBasis(ring, order, nvars, tuple(elements), certification)


def buchberger_block(gens: Sequence[Polynomial], x_order: MonomialOrder,
                     theta_order: Optional[str] = None,
                     ring: Optional[RingDescriptor] = None, nvars: Optional[int] = None) -> GroebnerBasis:
    """
    Groebner basis over k[t][x] through the joint ring k[x, t].

    A reduced basis is computed in k[x, t] under the block order that
    eliminates x before t, then every element is read back as an
    x-polynomial with k[t] coefficients.
    """
    gens = list(gens)
    ring, nvars = _infer_context(gens, ring, nvars)
    if ring.kind is not RingKind.POLY_OVER_FIELD:
        raise UnsupportedRing(f"block construction needs a k[t] coefficient ring, got {ring.to_header()}")
    if theta_order is not None and theta_order != ring.theta_order:
        raise RingMismatch(f"coefficient order {theta_order} differs from the ring's {ring.theta_order}")
    joint = [to_joint(g) for g in gens if not g.is_zero()]
    reduced = field_buchberger(joint, block_order(x_order, ring, nvars))
    elements = _sorted_elements([from_joint(h, ring, nvars) for h in reduced.elements], ring, x_order)
    logger.info(f"Block Buchberger over {ring.to_header()}: {len(gens)} generators -> {len(elements)} basis elements")
    return GroebnerBasis(ring, x_order, nvars, tuple(elements), Certification.GROEBNER)


def groebner_basis(gens: Sequence[Polynomial], order: MonomialOrder, max_pairs: int = 0,
                   ring: Optional[RingDescriptor] = None, nvars: Optional[int] = None) -> GroebnerBasis:
    """Dispatch to the construction that fits the coefficient ring."""
    gens = list(gens)
    ring, nvars = _infer_context(gens, ring, nvars)
    if ring.kind is RingKind.POLY_OVER_FIELD:
        return buchberger_block(gens, order, ring=ring, nvars=nvars)
    return buchberger_pid(gens, order, max_pairs, ring=ring, nvars=nvars)


# Short reduced bases

def pauer_short_reduce(G: GroebnerBasis) -> GroebnerBasis:
    """
    Short reduced Groebner basis of the ideal generated by G.

    For each leading monomial x^a of G the leading coefficient ideal at a
    and the one contributed by proper divisors of x^a are formed; every
    leading generator the ring strategy picks for that pair yields one
    element with that leading coefficient, whose lower terms are then
    brought to their canonical representatives.

    Raises:
        NotCertified: if G is not certified as a Groebner basis
    """
    if not G.certification.is_groebner:
        raise NotCertified("short reduction needs a certified Groebner basis")
    ring, order, n = G.ring, G.order, G.nvars
    leads = G.leading()
    alphas = sorted({ld.lm for ld in leads}, key=order.key)
    out: List[Polynomial] = []
    for alpha in alphas:
        divisors = [i for i, ld in enumerate(leads) if monomial_divides(ld.lm, alpha)]
        proper = [i for i in divisors if leads[i].lm != alpha]
        full = coefficient_ideal(ring, [leads[i].lc for i in divisors])
        lower = coefficient_ideal(ring, [leads[i].lc for i in proper])
        for a in leading_generators(full, lower):
            witness = membership_witness(full, a)
            h = Polynomial.zero(ring, n)
            for i, b in zip(divisors, witness):
                if not ring.is_zero(b):
                    h = h + G.elements[i].mul_term(b, monomial_div(alpha, leads[i].lm))
            lead = Polynomial.monomial(ring, n, alpha, a)
            out.append(lead + normal_form(h - lead, G).remainder)
    elements = _sorted_elements(out, ring, order)
    logger.info(f"Short reduction: {len(G)} elements -> {len(elements)} elements")
    return GroebnerBasis(ring, order, n, tuple(elements), Certification.SHORT_REDUCED)


def short_reduced_basis(gens: Sequence[Polynomial], order: MonomialOrder, max_pairs: int = 0,
                        ring: Optional[RingDescriptor] = None, nvars: Optional[int] = None) -> GroebnerBasis:
    return pauer_short_reduce(groebner_basis(gens, order, max_pairs, ring=ring, nvars=nvars))


# Certification

def verify_groebner(G: GroebnerBasis, ideal_gens: Optional[Sequence[Polynomial]] = None) -> bool:
    """
    Decide from the definition whether G is a Groebner basis.

    Over Z and fields every S-pair (and G-pair over Z) must reduce to zero.
    Over k[t] the joint-ring basis of the ideal is computed and each of its
    leading terms must lie in the leading term ideal of G.

    Args:
        G: Candidate basis, any certification
        ideal_gens: When given, G must also generate exactly this ideal
    """
    ring, order = G.ring, G.order
    if ring.kind is RingKind.POLY_OVER_FIELD:
        ok = _covers_joint_basis(G)
    else:
        elements = G.elements
        ok = True
        kinds = [PairKind.S, PairKind.G] if ring.kind is RingKind.INTEGERS else [PairKind.S]
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                for kind in kinds:
                    fd, gd = elements[i].leading_data(order), elements[j].leading_data(order)
                    ca, ma, cb, mb = _pair_multipliers(ring, fd, gd, kind)
                    h = elements[i].mul_term(ca, ma) + elements[j].mul_term(cb, mb)
                    if not normal_form(h, G).remainder.is_zero():
                        logger.debug(f"{kind.value}-pair ({i}, {j}) does not reduce to zero")
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
    if ok and ideal_gens is not None:
        ok = _same_ideal(G, ideal_gens)
    return ok


def _covers_joint_basis(G: GroebnerBasis) -> bool:
    ring, order, n = G.ring, G.order, G.nvars
    leads = G.leading()
    joint = [to_joint(g) for g in G.elements]
    for r in field_buchberger(joint, block_order(order, ring, n)).elements:
        rd = from_joint(r, ring, n).leading_data(order)
        lcs = [ld.lc for ld in leads if monomial_divides(ld.lm, rd.lm)]
        if rd.lc not in coefficient_ideal(ring, lcs):
            logger.debug(f"leading term at {rd.lm} is not covered")
            return False
    return True


def _same_ideal(G: GroebnerBasis, ideal_gens: Sequence[Polynomial]) -> bool:
    gens = [f for f in ideal_gens if not f.is_zero()]
    if any(not ideal_contains(G, f) for f in gens):
        return False
    reference = groebner_basis(gens, G.order, ring=G.ring, nvars=G.nvars)
    return all(ideal_contains(reference, g) for g in G.elements)


def certify_groebner(G: GroebnerBasis, ideal_gens: Optional[Sequence[Polynomial]] = None) -> GroebnerBasis:
    """Return G tagged as a Groebner basis, or raise NotCertified."""
    if G.certification.is_groebner and ideal_gens is None:
        return G
    if not verify_groebner(G, ideal_gens):
        raise NotCertified("the given generators are not a Groebner basis")
    if G.certification.is_groebner:
        return G
    return replace(G, certification=Certification.GROEBNER)


def is_strong_gb(G: GroebnerBasis, probes: Sequence[Polynomial] = ()) -> StrongCheck:
    """
    Decide whether every leading term of the ideal is divisible by a single
    leading term of G.

    Over Z this is decided exactly: for each pair the term
    gcd(lc_i, lc_j) * lcm(lm_i, lm_j) must be divisible by one leading term,
    and the failing pair's G-polynomial is the counterexample. Elsewhere the
    given probes are tested.

    Raises:
        NotCertified: if G is not certified as a Groebner basis
        ProbeNotInIdeal: if a probe is not an element of the ideal
    """
    if not G.certification.is_groebner:
        raise NotCertified("strength is only defined for Groebner bases")
    ring, order = G.ring, G.order
    leads = G.leading()

    for probe in probes:
        if not ideal_contains(G, probe):
            raise ProbeNotInIdeal(f"probe {probe.format(order=order)} is not in the ideal")

    if ring.kind is RingKind.INTEGERS:
        for i in range(len(leads)):
            for j in range(i + 1, len(leads)):
                _, _, g = xgcd(leads[i].lc, leads[j].lc)
                lcm = monomial_lcm(leads[i].lm, leads[j].lm)
                if not any(monomial_divides(ld.lm, lcm) and g % ld.lc == 0 for ld in leads):
                    counterexample = g_polynomial(G.elements[i], G.elements[j], order)
                    logger.info(f"Pair ({i}, {j}) has no single leading-term divisor")
                    return StrongCheck(False, counterexample)
        return StrongCheck(True, None)

    for probe in probes:
        if probe.is_zero():
            continue
        pd = probe.leading_data(order)
        if not any(monomial_divides(ld.lm, pd.lm) and ring.divides(ld.lc, pd.lc) for ld in leads):
            return StrongCheck(False, probe)
    return StrongCheck(True, None)


def verify_strong_reduced(G: GroebnerBasis) -> StrongReducedCheck:
    """
    Check the strong reduced conditions for a basis over k[t][x].

    Conditions are checked per leading x-monomial e in ascending order:
    first that the leading coefficients of G_e form a reduced basis modulo
    the ideal of leading coefficients from proper divisors of e (3), then
    for each p in G_e that no joint-ring term of p is divisible by another
    element's joint leading monomial (1) and that no x-term of p lies in
    the leading term ideal of the other elements (2). Finally G must be a
    Groebner basis; failing only that reports no condition number.
    """
    ring, order = G.ring, G.order
    if ring.kind is not RingKind.POLY_OVER_FIELD:
        raise UnsupportedRing("strong reduced bases are defined over k[t][x]")
    theta = ring.coefficient_order
    leads = G.leading()
    joint_lms = [ld.lm + ld.lc.leading_data(theta).lm for ld in leads]

    for e in sorted({ld.lm for ld in leads}, key=order.key):
        members = [k for k, ld in enumerate(leads) if ld.lm == e]
        below = [k for k, ld in enumerate(leads) if ld.lm != e and monomial_divides(ld.lm, e)]
        if not _reduced_modulo(ring, [leads[k].lc for k in members], [leads[k].lc for k in below]):
            return StrongReducedCheck(False, 3)
        for p in members:
            if not _joint_terms_irreducible(G, p, joint_lms):
                return StrongReducedCheck(False, 1)
            if not _x_terms_irreducible(G, p, leads):
                return StrongReducedCheck(False, 2)

    if not verify_groebner(G):
        return StrongReducedCheck(False, None)
    return StrongReducedCheck(True, None)


def _reduced_modulo(ring: RingDescriptor, coeffs: List[Polynomial], lower: List[Polynomial]) -> bool:
    theta = ring.coefficient_order
    if len(set(coeffs)) != len(coeffs):
        return False
    modulus = list(coefficient_ideal(ring, lower).min_generators)
    modulus_lms = [g.leading_data(theta).lm for g in modulus]
    own_lms = [t.leading_data(theta).lm for t in coeffs]
    for k, t in enumerate(coeffs):
        if not ring.base.is_one(t.leading_data(theta).lc):
            return False
        others = modulus_lms + own_lms[:k] + own_lms[k + 1:]
        if any(monomial_divides(m, tm) for tm in t.terms for m in others):
            return False
    # Together with the modulus the coefficients must form a Groebner basis
    generators = modulus_lms + own_lms
    for r in coefficient_ideal(ring, list(coeffs) + modulus).min_generators:
        rlm = r.leading_data(theta).lm
        if not any(monomial_divides(m, rlm) for m in generators):
            return False
    return True


def _joint_terms_irreducible(G: GroebnerBasis, p: int, joint_lms: List[Monomial]) -> bool:
    for m, c in G.elements[p].terms.items():
        for tm in c.terms:
            joint = m + tm
            if any(monomial_divides(joint_lms[k], joint) for k in range(len(joint_lms)) if k != p):
                return False
    return True


def _x_terms_irreducible(G: GroebnerBasis, p: int, leads: List[LeadingData]) -> bool:
    ring = G.ring
    theta = ring.coefficient_order
    for m, c in G.elements[p].terms.items():
        others = [leads[k].lc for k in range(len(leads)) if k != p and monomial_divides(leads[k].lm, m)]
        if m == leads[p].lm:
            # Leading terms: the coefficient's leading monomial must not be reducible
            clm = c.leading_data(theta).lm
            if any(monomial_divides(o.leading_data(theta).lm, clm) for o in others):
                return False
        elif c in coefficient_ideal(ring, others):
            return False
    return True
