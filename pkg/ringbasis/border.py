"""
Border Basis Module

Order ideals and their borders, border prebasis validation, the border
basis read off a monic short reduced Groebner basis, and the border
division algorithm.
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ringbasis.coeffring import RingDescriptor
from ringbasis.errors import (
    BadSupport,
    CountMismatch,
    DimensionMismatch,
    EmptySet,
    InfiniteQuotient,
    MissingBorderTerm,
    NotCertified,
    NotDivisorClosed,
    NotFree,
    OrderIdealMismatch,
    RingMismatch,
)
from ringbasis.groebner import GroebnerBasis, groebner_basis, ideal_contains, normal_form, short_reduced_basis
from ringbasis.poly import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    format_monomial,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_mul,
    variable_monomial,
)
from ringbasis.quotient import is_finite_rank, module_basis, require_short_reduced

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderIdealSpec:
    """A finite divisor-closed monomial set together with its border"""
    monomials: Tuple[Monomial, ...]
    border: Tuple[Monomial, ...]
    nvars: int

    def __contains__(self, m: Monomial) -> bool:
        return tuple(m) in self.monomials

    def format(self, names: Sequence[str]) -> Dict[str, List[str]]:
        return {
            "order_ideal": [format_monomial(m, names) for m in self.monomials],
            "border": [format_monomial(m, names) for m in self.border],
        }


@dataclass(frozen=True)
class BorderPrebasis:
    """
    One polynomial per border monomial, aligned with ``order_ideal.border``.

    ``certified`` is set only for border bases produced by
    border_basis_of or confirmed by certify_border_basis.
    """
    order_ideal: OrderIdealSpec
    elements: Tuple[Polynomial, ...]
    ring: RingDescriptor
    order: MonomialOrder = GREVLEX
    certified: bool = False

    def element_for(self, border_monomial: Monomial) -> Polynomial:
        return self.elements[self.order_ideal.border.index(tuple(border_monomial))]


def validate_order_ideal(monomials: Iterable[Monomial], nvars: Optional[int] = None,
                         order: MonomialOrder = GREVLEX) -> OrderIdealSpec:
    """
    Check that a monomial set is a nonempty order ideal and compute its border.

    Raises:
        EmptySet: for the empty set
        NotDivisorClosed: with the first member found whose divisor is missing
        DimensionMismatch: for monomials of different lengths
    """
    members = {tuple(m) for m in monomials}
    if not members:
        raise EmptySet("an order ideal must contain at least the monomial 1")
    if nvars is None:
        nvars = len(next(iter(members)))
    if any(len(m) != nvars for m in members):
        raise DimensionMismatch(f"order ideal monomials must have {nvars} exponents")

    ordered = sorted(members, key=order.key)
    for m in ordered:
        absent = [
            monomial_div(m, variable_monomial(i, nvars))
            for i in range(nvars) if m[i]
        ]
        absent = [d for d in absent if d not in members]
        if absent:
            raise NotDivisorClosed(m, max(absent, key=order.key))

    border = {
        monomial_mul(m, variable_monomial(i, nvars))
        for m in members for i in range(nvars)
    } - members
    return OrderIdealSpec(tuple(ordered), tuple(sorted(border, key=order.key)), nvars)


def validate_prebasis(O: OrderIdealSpec, polys: Sequence[Polynomial],
                      order: MonomialOrder = GREVLEX) -> BorderPrebasis:
    """
    Check the border prebasis shape: each polynomial is x^b minus a
    combination of order-ideal monomials, one per border monomial b.

    The border term of a polynomial is its greatest border monomial; any
    other term outside the order ideal is reported as bad support.

    Raises:
        CountMismatch: when the number of polynomials differs from |border|
        BadSupport: for a term outside the order ideal and the border term
        MissingBorderTerm: when a polynomial has no border term with
            coefficient 1, or a border monomial is left without a polynomial
    """
    polys = list(polys)
    if len(polys) != len(O.border):
        raise CountMismatch(
            f"{len(polys)} polynomials for a border of {len(O.border)} monomials",
            expected=len(O.border), actual=len(polys),
        )
    if not polys:
        raise CountMismatch("a border is never empty")
    ring = polys[0].ring
    border = set(O.border)
    heads: List[Monomial] = []
    for f in polys:
        if f.ring != ring:
            raise RingMismatch("prebasis polynomials must share one ring")
        if f.nvars != O.nvars:
            raise DimensionMismatch(f"polynomial in {f.nvars} variables for an order ideal in {O.nvars}")
        candidates = sorted((m for m in f.terms if m in border), key=order.key, reverse=True)
        if not candidates:
            raise MissingBorderTerm(f"{f.format(order=order)} has no border term")
        head = candidates[0]
        if not ring.is_one(f.coefficient(head)):
            raise MissingBorderTerm(f"border term of {f.format(order=order)} does not have coefficient 1")
        for m in sorted(f.terms, key=order.key, reverse=True):
            if m != head and m not in O:
                raise BadSupport(
                    f"term at {list(m)} of {f.format(order=order)} lies outside the order ideal",
                    monomial=list(m),
                )
        heads.append(head)
    missing = [b for b in O.border if b not in set(heads)]
    if missing:
        raise MissingBorderTerm(f"no polynomial for border monomial {list(missing[0])}", monomial=list(missing[0]))
    assigned = dict(zip(heads, polys))
    return BorderPrebasis(O, tuple(assigned[b] for b in O.border), ring, order)


def border_index(m: Monomial, O: OrderIdealSpec) -> int:
    """
    Distance of m from the order ideal: the least degree of t with m = t*o, o in O.
    """
    m = tuple(m)
    if m in O:
        return 0
    return min(monomial_degree(m) - monomial_degree(o) for o in O.monomials if monomial_divides(o, m))


def border_basis_of(G: GroebnerBasis, O: OrderIdealSpec) -> BorderPrebasis:
    """
    The O-border basis of the ideal of a monic short reduced basis G:
    {x^b - NF(x^b) : b in border(O)}.

    Raises:
        NotShortReduced: for weaker certifications
        NotFree: if G is not monic
        InfiniteQuotient: if the quotient has infinite rank
        OrderIdealMismatch: if O is not the set of standard monomials of G
    """
    require_short_reduced(G)
    if not G.is_monic():
        raise NotFree("border bases need a free quotient (monic short reduced basis)")
    if O.nvars != G.nvars:
        raise DimensionMismatch(f"order ideal in {O.nvars} variables, basis in {G.nvars}")
    if not is_finite_rank(G, monic=True):
        raise InfiniteQuotient("the quotient has infinitely many standard monomials")
    standard = set(module_basis(G).monomials)
    if standard != set(O.monomials):
        raise OrderIdealMismatch(
            "the order ideal differs from the standard monomials of the basis",
            standard=sorted(list(m) for m in standard),
        )
    ring, n = G.ring, G.nvars
    elements = []
    for b in O.border:
        xb = Polynomial.monomial(ring, n, b)
        elements.append(xb - normal_form(xb, G).remainder)
    logger.info(f"Border basis with {len(elements)} elements over an order ideal of size {len(O.monomials)}")
    return BorderPrebasis(O, tuple(elements), ring, G.order, certified=True)


def is_border_basis(B: BorderPrebasis, ideal_gens: Sequence[Polynomial]) -> bool:
    """
    True iff B generates the ideal of ``ideal_gens`` and its order ideal is
    the standard monomial set of that ideal's monic short reduced basis.

    Raises:
        NotFree: when the ideal's short reduced basis is not monic
    """
    order = B.order
    G = short_reduced_basis(ideal_gens, order, ring=B.ring, nvars=B.order_ideal.nvars)
    if not G.is_monic():
        raise NotFree("the quotient by these generators is not free")
    if not is_finite_rank(G, monic=True):
        logger.info("Border check: quotient has infinite rank")
        return False
    if set(module_basis(G).monomials) != set(B.order_ideal.monomials):
        logger.info("Border check: order ideal differs from the standard monomials")
        return False
    if not all(ideal_contains(G, b) for b in B.elements):
        logger.info("Border check: a prebasis element is outside the ideal")
        return False
    span = groebner_basis(B.elements, order)
    return all(ideal_contains(span, f) for f in ideal_gens)


def certify_border_basis(B: BorderPrebasis, ideal_gens: Sequence[Polynomial]) -> BorderPrebasis:
    """Certified copy of B, or NotCertified when B is not a border basis of the ideal."""
    if not is_border_basis(B, ideal_gens):
        raise NotCertified("the prebasis is not a border basis of the given ideal")
    return replace(B, certified=True)


def border_nf(f: Polynomial, B: BorderPrebasis) -> Polynomial:
    """
    Border division: rewrite terms outside the order ideal until f is
    supported on it.

    The largest term outside O in the basis order goes first. It is
    written as t*b with b a border monomial and deg t = index - 1, and
    replaced through the border element of b. Every border element has
    leading term x^b, so the largest outside term strictly drops and the
    loop ends.

    Raises:
        NotCertified: for prebases that are not certified border bases
    """
    if not B.certified:
        raise NotCertified("border normal forms are only unique for certified border bases")
    if f.ring != B.ring:
        raise RingMismatch("polynomial and border basis live over different rings")
    O, order = B.order_ideal, B.order
    h = f
    while True:
        outside = [m for m in h.terms if m not in O]
        if not outside:
            return h
        m = max(outside, key=order.key)
        index = border_index(m, O)
        candidates = [
            b for b in O.border
            if monomial_divides(b, m) and monomial_degree(m) - monomial_degree(b) == index - 1
        ]
        b = max(candidates, key=order.key)
        h = h - B.element_for(b).mul_term(h.coefficient(m), monomial_div(m, b))
