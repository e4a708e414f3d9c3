"""
Quotient Module

Residue class rings A[x]/I described by a short reduced Groebner basis:
the monic freeness test, finite-rank detection, standard monomial
enumeration (module bases), coordinates under the map that sends a residue
to its canonical coefficients, and binomial generators for lattice ideals.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple, Union

from ringbasis.coeffring import CoefficientIdeal, RingDescriptor, RingElement, coefficient_ideal, eta, integers
from ringbasis.errors import (
    CapRequired,
    DimensionMismatch,
    InfiniteBasis,
    NotMonic,
    NotShortReduced,
    ZeroVector,
)
from ringbasis.groebner import GroebnerBasis, normal_form
from ringbasis.poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    format_monomial,
    monomial_degree,
    monomial_divides,
    monomial_mul,
    one_monomial,
    pure_power_index,
    variable_monomial,
)

logger = logging.getLogger(__name__)

INFINITE = "infinite"

Rank = Union[int, str, None]


class Freeness(Enum):
    """Whether the quotient is a free module over the coefficient ring"""
    FREE = "free"
    NOT_FREE = "not_free"


@dataclass(frozen=True)
class StandardMonomialSet:
    """Standard monomials in ascending order; ``complete`` is False when a degree cap cut the list"""
    monomials: Tuple[Monomial, ...]
    complete: bool

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __contains__(self, m: Monomial) -> bool:
        return tuple(m) in self.monomials

    def format(self, names: Sequence[str]) -> List[str]:
        return [format_monomial(m, names) for m in self.monomials]


@dataclass(frozen=True)
class QuotientRing:
    """
    A[x]/I with I given by a short reduced Groebner basis.

    For free quotients ``monomials`` are the standard monomials; otherwise
    they are the monomials whose leading coefficient ideal is proper, i.e.
    the positions carrying a nonzero factor A/I_m in the coordinate map.
    ``rank`` is None when the quotient is not free.
    """
    ideal_basis: GroebnerBasis
    ring: RingDescriptor
    freeness: Freeness
    rank: Rank
    monomials: Tuple[Monomial, ...]
    complete: bool
    degree_cap: Optional[int] = None

    @property
    def is_free(self) -> bool:
        return self.freeness is Freeness.FREE

    @property
    def nvars(self) -> int:
        return self.ideal_basis.nvars

    @property
    def order(self) -> MonomialOrder:
        return self.ideal_basis.order


def require_short_reduced(G: GroebnerBasis):
    if not G.certification.is_short_reduced:
        raise NotShortReduced(
            f"expected a short reduced basis, got certification '{G.certification.value}'",
            certification=G.certification.value,
        )


def leading_coeff_ideal(G: GroebnerBasis, m: Monomial) -> CoefficientIdeal:
    """
    Ideal generated by the leading coefficients of the elements whose
    leading monomial divides m (the zero ideal when there are none).
    """
    lcs = [ld.lc for ld in G.leading() if monomial_divides(ld.lm, tuple(m))]
    return coefficient_ideal(G.ring, lcs)


def is_free(G: GroebnerBasis) -> bool:
    """
    A[x]/<G> is free iff the short reduced basis G is monic.

    Raises:
        NotShortReduced: for weaker certifications; a non-monic plain
            reduced basis can still describe a free quotient
    """
    require_short_reduced(G)
    free = G.is_monic()
    logger.info(f"Quotient by {len(G)} elements is {'free' if free else 'not free'}")
    return free


def is_finite_rank(G: GroebnerBasis, monic: Optional[bool] = None) -> bool:
    """
    For monic G: the rank is finite iff every variable has a pure power
    among the leading monomials.

    Args:
        G: Monic short reduced basis
        monic: Precomputed monicity; computed from G when omitted

    Raises:
        NotShortReduced: for weaker certifications
        NotMonic: if G is not monic
    """
    require_short_reduced(G)
    if monic is None:
        monic = G.is_monic()
    if not monic:
        raise NotMonic("the rank criterion needs a monic basis")
    return _box_bounds(G, free=True) is not None


def _box_bounds(G: GroebnerBasis, free: bool) -> Optional[Tuple[int, ...]]:
    # Exclusive exponent bounds enclosing every monomial with a proper leading
    # coefficient ideal, or None if some variable has all its powers in that set
    leads = G.leading()
    bounds = []
    for i in range(G.nvars):
        powers = [ld for ld in leads if pure_power_index(ld.lm) == i or not any(ld.lm)]
        if free:
            if not powers:
                return None
            bounds.append(min(ld.lm[i] for ld in powers))
            continue
        if not powers or not coefficient_ideal(G.ring, [ld.lc for ld in powers]).is_unit():
            return None
        bounds.append(max(ld.lm[i] for ld in powers) + 1)
    return tuple(bounds)


def _walk(n: int, alive: Callable[[Monomial], bool], within: Callable[[Monomial], bool]) -> List[Monomial]:
    # The alive set is divisor-closed, so a walk upwards from 1 reaches all of it
    start = one_monomial(n)
    if not alive(start):
        return []
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                up = monomial_mul(m, variable_monomial(i, n))
                if up not in seen and within(up) and alive(up):
                    seen.add(up)
                    nxt.append(up)
        frontier = nxt
    return list(seen)


def _standard_predicate(G: GroebnerBasis, free: bool) -> Callable[[Monomial], bool]:
    if free:
        lms = [ld.lm for ld in G.leading()]
        return lambda m: not any(monomial_divides(lm, m) for lm in lms)
    return lambda m: not leading_coeff_ideal(G, m).is_unit()


def _enumerate(G: GroebnerBasis, free: bool, degree_cap: Optional[int]) -> Tuple[Optional[List[Monomial]], bool]:
    alive = _standard_predicate(G, free)
    bounds = _box_bounds(G, free)
    if bounds is not None:
        monomials = _walk(G.nvars, alive, lambda m: all(e < b for e, b in zip(m, bounds)))
        return sorted(monomials, key=G.order.key), True
    if degree_cap is None:
        return None, False
    monomials = _walk(G.nvars, alive, lambda m: monomial_degree(m) <= degree_cap)
    return sorted(monomials, key=G.order.key), False


def module_basis(G: GroebnerBasis, degree_cap: Optional[int] = None) -> StandardMonomialSet:
    """
    Module basis of a free quotient: its standard monomials.

    Finite ranks are enumerated exhaustively inside the box given by the
    pure-power leading monomials; infinite ranks are listed up to total
    degree ``degree_cap`` and marked incomplete.

    Raises:
        NotShortReduced: for weaker certifications
        NotMonic: when the quotient has no module basis
        CapRequired: for infinite rank without a cap
    """
    require_short_reduced(G)
    if not G.is_monic():
        raise NotMonic("the quotient is not free, so it has no module basis")
    monomials, complete = _enumerate(G, True, degree_cap)
    if monomials is None:
        raise CapRequired("infinite rank: pass a degree cap to enumerate standard monomials")
    logger.info(f"Module basis with {len(monomials)} monomials ({'complete' if complete else 'truncated'})")
    return StandardMonomialSet(tuple(monomials), complete)


def standard_monomials_by_ideal(G: GroebnerBasis, bound: int) -> StandardMonomialSet:
    """
    Standard monomials of total degree <= bound computed by monomial-ideal
    membership: x^m is standard iff it has nonzero normal form modulo the
    monomial ideal generated by the leading monomials of G.

    The set is complete when no standard monomial of degree bound + 1
    exists, since standard monomials are closed under division.
    """
    n = G.nvars
    ring = G.ring
    lead_monomials = sorted({ld.lm for ld in G.leading()}, key=G.order.key)
    staircase = GroebnerBasis(
        ring, G.order, n,
        tuple(Polynomial.monomial(ring, n, lm) for lm in lead_monomials),
    )

    def standard(m: Monomial) -> bool:
        return not normal_form(Polynomial.monomial(ring, n, m), staircase).remainder.is_zero()

    found, next_level = [], False
    for m in itertools.product(range(bound + 2), repeat=n):
        degree = monomial_degree(m)
        if degree > bound + 1 or not standard(m):
            continue
        if degree == bound + 1:
            next_level = True
        else:
            found.append(m)
    return StandardMonomialSet(tuple(sorted(found, key=G.order.key)), not next_level)


def quotient_ring(G: GroebnerBasis, degree_cap: Optional[int] = None) -> QuotientRing:
    """
    Describe A[x]/<G> for a short reduced basis G.

    Raises:
        NotShortReduced: for weaker certifications
    """
    require_short_reduced(G)
    free = G.is_monic()
    monomials, complete = _enumerate(G, free, degree_cap)
    if free:
        rank: Rank = len(monomials) if complete else INFINITE
    else:
        rank = None
    logger.debug(f"Quotient ring: free={free}, rank={rank}, {len(monomials or ())} stored monomials")
    return QuotientRing(
        ideal_basis=G,
        ring=G.ring,
        freeness=Freeness.FREE if free else Freeness.NOT_FREE,
        rank=rank,
        monomials=tuple(monomials or ()),
        complete=complete,
        degree_cap=degree_cap,
    )


def phi_coordinates(f: Polynomial, Q: QuotientRing) -> List[RingElement]:
    """
    Coordinates of f + I: for each stored monomial x^m the canonical
    representative of the coefficient of x^m in the normal form, modulo
    the leading coefficient ideal at m.

    Raises:
        InfiniteBasis: when the stored monomial list is truncated and does
            not cover the normal form of f
    """
    G = Q.ideal_basis
    remainder = normal_form(f, G).remainder
    if not Q.complete:
        stored = set(Q.monomials)
        outside = [m for m in remainder.terms if m not in stored]
        if not Q.monomials or outside:
            raise InfiniteBasis(
                "the normal form leaves the enumerated monomials; raise the degree cap",
                degree_cap=Q.degree_cap,
            )
    return [eta(leading_coeff_ideal(G, m), remainder.coefficient(m)) for m in Q.monomials]


def from_coordinates(coords: Sequence[RingElement], Q: QuotientRing) -> Polynomial:
    """The representative sum(c_i * x^m_i) of a coordinate vector."""
    if len(coords) != len(Q.monomials):
        raise DimensionMismatch(f"{len(coords)} coordinates for {len(Q.monomials)} monomials")
    return Polynomial(Q.ring, Q.nvars, dict(zip(Q.monomials, coords)))


def torsion_witness(G: GroebnerBasis) -> Optional[Tuple[RingElement, Polynomial]]:
    """
    Search for c, m with c*m in I and m not in I, starting from the leading
    terms of non-monic elements of G.

    Returns:
        (c, x^m) or None; a quotient can be torsion-free without being
        free (Z[x]/<2x + 1>), so absence of a witness proves nothing
    """
    require_short_reduced(G)
    ring, n = G.ring, G.nvars
    for ld in G.leading():
        if ring.is_one(ld.lc):
            continue
        m = Polynomial.monomial(ring, n, ld.lm)
        if normal_form(m, G).remainder.is_zero():
            continue
        if normal_form(m.scale(ld.lc), G).remainder.is_zero():
            return ld.lc, m
    return None


def lattice_ideal_generators(vectors: Sequence[Sequence[int]],
                             ring: Optional[RingDescriptor] = None) -> List[Polynomial]:
    """
    Binomials x^(v+) - x^(v-) for integer vectors v, with v+ and v- the
    positive and negative parts. No saturation is performed.

    Raises:
        ZeroVector: for a zero vector
        DimensionMismatch: for vectors of different lengths
    """
    ring = ring or integers()
    if not vectors:
        return []
    n = len(vectors[0])
    out = []
    for v in vectors:
        v = tuple(int(e) for e in v)
        if len(v) != n:
            raise DimensionMismatch(f"vector {list(v)} does not have length {n}")
        if not any(v):
            raise ZeroVector("lattice vectors must be nonzero")
        plus = tuple(max(e, 0) for e in v)
        minus = tuple(max(-e, 0) for e in v)
        out.append(Polynomial(ring, n, {plus: 1, minus: -1}))
    logger.debug(f"{len(out)} lattice binomials in {n} variables")
    return out
