"""
Polynomial Module

Sparse multivariate polynomials over any coefficient ring, monomial orders
(lex, graded reverse lex and block orders) and the leading-data extractors
used by the basis algorithms.

Exponent arithmetic and the order keys come from sympy.polys; this module
adds the coefficient-ring side, which sympy's domains do not model for
rings such as k[t] with canonical coset representatives.

Terms are stored unordered; every consumer sorts by the order it is working
with, so one polynomial value serves several orders.
"""

import logging
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_deg, monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.orderings import ProductOrder, grevlex, lex

from ringbasis.coeffring import RingDescriptor, RingElement, RingKind
from ringbasis.errors import DimensionMismatch, RingMismatch, ZeroPolynomial

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


# Monomials

def one_monomial(n: int) -> Monomial:
    return (0,) * n


def variable_monomial(i: int, n: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(n))


def monomial_degree(m: Monomial) -> int:
    return monomial_deg(m)


def pure_power_index(m: Monomial) -> Optional[int]:
    """Index i when m = x_i^v with v >= 1, otherwise None."""
    nonzero = [i for i, e in enumerate(m) if e]
    return nonzero[0] if len(nonzero) == 1 else None


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, m) if e]
    return "*".join(parts) if parts else "1"


def default_names(prefix: str, n: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


# Monomial orders

class Ordering(IntEnum):
    """Result of comparing two monomials"""
    LESS = -1
    EQUAL = 0
    GREATER = 1


class OrderKind(Enum):
    """Monomial order kinds"""
    LEX = "lex"
    GREVLEX = "grevlex"
    BLOCK = "block"


_SYMPY_ORDERS = {OrderKind.LEX: lex, OrderKind.GREVLEX: grevlex}


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order.

    ``precedence`` permutes variable positions (empty means x1 > x2 > ...).
    Block orders compare the first ``split`` exponents under ``x_kind``
    and break ties on the remaining exponents under ``theta_kind``
    (a sympy ProductOrder).
    """
    kind: OrderKind
    precedence: Tuple[int, ...] = ()
    split: int = 0
    x_kind: OrderKind = OrderKind.LEX
    theta_kind: OrderKind = OrderKind.LEX

    @classmethod
    def from_name(cls, name: str, precedence: Sequence[int] = ()) -> "MonomialOrder":
        try:
            kind = OrderKind(name)
        except ValueError:
            raise ValueError(f"unknown monomial order '{name}'") from None
        if kind is OrderKind.BLOCK:
            raise ValueError("block orders are built with MonomialOrder.block")
        return cls(kind, tuple(precedence))

    @classmethod
    def block(cls, x_order: "MonomialOrder", theta_kind: OrderKind, split: int) -> "MonomialOrder":
        return cls(OrderKind.BLOCK, x_order.precedence, split, x_order.kind, theta_kind)

    @property
    def name(self) -> str:
        if self.kind is OrderKind.BLOCK:
            return f"block({self.x_kind.value},{self.theta_kind.value})"
        return self.kind.value

    def x_view(self) -> "MonomialOrder":
        """The order a block order induces on its first block."""
        if self.kind is not OrderKind.BLOCK:
            return self
        return MonomialOrder(self.x_kind, self.precedence)

    def _permute(self, m: Monomial) -> Monomial:
        return tuple(m[i] for i in self.precedence) if self.precedence else m

    @cached_property
    def _sympy_key(self) -> Callable[[Monomial], Any]:
        if self.kind is not OrderKind.BLOCK:
            return _SYMPY_ORDERS[self.kind]
        split, permute = self.split, self._permute
        return ProductOrder(
            (_SYMPY_ORDERS[self.x_kind], lambda m: permute(m[:split])),
            (_SYMPY_ORDERS[self.theta_kind], lambda m: m[split:]),
        )

    def key(self, m: Monomial) -> Tuple:
        """Sort key: a < b in this order iff key(a) < key(b)."""
        if self.kind is OrderKind.BLOCK:
            return self._sympy_key(tuple(m))
        return self._sympy_key(self._permute(tuple(m)))

    def compare(self, a: Monomial, b: Monomial) -> Ordering:
        if len(a) != len(b):
            raise DimensionMismatch(f"cannot compare monomials of lengths {len(a)} and {len(b)}")
        covered = self.split if self.kind is OrderKind.BLOCK else len(a)
        if self.precedence and sorted(self.precedence) != list(range(covered)):
            raise DimensionMismatch(f"precedence {self.precedence} does not cover {covered} variables")
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return Ordering.EQUAL
        return Ordering.GREATER if ka > kb else Ordering.LESS


LEX = MonomialOrder(OrderKind.LEX)
GREVLEX = MonomialOrder(OrderKind.GREVLEX)


def monomial_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> Ordering:
    """Compare two monomials under ``order``."""
    return order.compare(a, b)


# Polynomials

@dataclass(frozen=True)
class LeadingData:
    """Leading term, monomial, coefficient and degree of a polynomial"""
    lt: "Polynomial"
    lm: Monomial
    lc: RingElement
    deg: Monomial


class Polynomial:
    """
    Immutable sparse polynomial over a coefficient ring.

    ``terms`` maps exponent tuples to nonzero canonical coefficients.
    """

    __slots__ = ("ring", "nvars", "_terms", "_hash")

    def __init__(self, ring: RingDescriptor, nvars: int, terms: Optional[Mapping[Monomial, Any]] = None):
        clean: Dict[Monomial, RingElement] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != nvars:
                raise DimensionMismatch(f"monomial {m} does not have {nvars} exponents")
            if any(e < 0 for e in m):
                raise DimensionMismatch(f"monomial {m} has a negative exponent")
            c = ring.canonical(c)
            if m in clean:
                c = ring.add(clean[m], c)
            clean[m] = c
        self.ring = ring
        self.nvars = nvars
        self._terms = {m: c for m, c in clean.items() if not ring.is_zero(c)}
        self._hash = None

    @classmethod
    def _make(cls, ring: RingDescriptor, nvars: int, terms: Dict[Monomial, RingElement]) -> "Polynomial":
        # Trusted constructor: monomials and coefficients are already canonical and nonzero
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.nvars = nvars
        poly._terms = terms
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls, ring: RingDescriptor, nvars: int) -> "Polynomial":
        return cls._make(ring, nvars, {})

    @classmethod
    def constant(cls, ring: RingDescriptor, nvars: int, c: Any) -> "Polynomial":
        return cls(ring, nvars, {one_monomial(nvars): c})

    @classmethod
    def monomial(cls, ring: RingDescriptor, nvars: int, m: Monomial, c: Any = 1) -> "Polynomial":
        return cls(ring, nvars, {tuple(m): c})

    @classmethod
    def variable(cls, ring: RingDescriptor, nvars: int, i: int) -> "Polynomial":
        return cls(ring, nvars, {variable_monomial(i, nvars): 1})

    # Inspection

    @property
    def terms(self) -> Mapping[Monomial, RingElement]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {one_monomial(self.nvars)}

    def constant_coefficient(self) -> RingElement:
        return self.coefficient(one_monomial(self.nvars))

    def coefficient(self, m: Monomial) -> RingElement:
        return self._terms.get(tuple(m), self.ring.zero())

    def support(self) -> List[Monomial]:
        return list(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self, order: MonomialOrder, descending: bool = True) -> List[Tuple[Monomial, RingElement]]:
        return sorted(self._terms.items(), key=lambda item: order.key(item[0]), reverse=descending)

    def leading_data(self, order: MonomialOrder) -> LeadingData:
        """
        Leading data under ``order``.

        Raises:
            ZeroPolynomial: for the zero polynomial
        """
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        lm = max(self._terms, key=order.key)
        lc = self._terms[lm]
        return LeadingData(Polynomial._make(self.ring, self.nvars, {lm: lc}), lm, lc, lm)

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(sum(m) for m in self._terms)

    # Arithmetic

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring == self.ring:
                if other.nvars != self.nvars:
                    raise DimensionMismatch(f"polynomials in {self.nvars} and {other.nvars} variables")
                return other
            if self.ring.kind is RingKind.POLY_OVER_FIELD and other.ring == self.ring.base \
                    and other.nvars == self.ring.theta_count:
                return Polynomial.constant(self.ring, self.nvars, other)
            raise RingMismatch(f"cannot combine {self.ring.to_header()} with {other.ring.to_header()}")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self.ring, self.nvars, other)
        raise RingMismatch(f"cannot combine a polynomial with {other!r}")

    def __add__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        ring = self.ring
        terms = dict(self._terms)
        for m, c in other._terms.items():
            if m in terms:
                s = ring.add(terms[m], c)
                if ring.is_zero(s):
                    del terms[m]
                else:
                    terms[m] = s
            else:
                terms[m] = c
        return Polynomial._make(ring, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        ring = self.ring
        return Polynomial._make(ring, self.nvars, {m: ring.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        ring = self.ring
        terms: Dict[Monomial, RingElement] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                c = ring.mul(c1, c2)
                if m in terms:
                    c = ring.add(terms[m], c)
                terms[m] = c
        return Polynomial._make(ring, self.nvars, {m: c for m, c in terms.items() if not ring.is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise DimensionMismatch(f"exponent {k!r} is not a non-negative integer")
        result = Polynomial.constant(self.ring, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: RingElement) -> "Polynomial":
        """Multiply every coefficient by the ring element c."""
        ring = self.ring
        c = ring.canonical(c)
        if ring.is_zero(c):
            return Polynomial.zero(ring, self.nvars)
        terms = {m: ring.mul(a, c) for m, a in self._terms.items()}
        return Polynomial._make(ring, self.nvars, {m: a for m, a in terms.items() if not ring.is_zero(a)})

    def mul_term(self, c: RingElement, m: Monomial) -> "Polynomial":
        """Multiply by the term c*x^m."""
        ring = self.ring
        if ring.is_zero(c):
            return Polynomial.zero(ring, self.nvars)
        terms = {monomial_mul(k, m): ring.mul(a, c) for k, a in self._terms.items()}
        return Polynomial._make(ring, self.nvars, {k: a for k, a in terms.items() if not ring.is_zero(a)})

    def without(self, m: Monomial) -> "Polynomial":
        """Copy with the term at m removed."""
        terms = dict(self._terms)
        terms.pop(m, None)
        return Polynomial._make(self.ring, self.nvars, terms)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Polynomial):
            try:
                other = self._coerce(other)
            except (RingMismatch, DimensionMismatch):
                return NotImplemented
        return self.ring == other.ring and self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.nvars, frozenset(self._terms.items())))
        return self._hash

    # Printing

    def format(self, names: Optional[Sequence[str]] = None, order: Optional[MonomialOrder] = None) -> str:
        """
        Canonical text form: terms in descending order, coefficients first,
        explicit ``*`` and ``^`` (e.g. ``3*x1^2 + 2*x2``).

        Coefficients from k[t] with several terms are parenthesised, except
        on the monomial 1 where their terms are written inline.
        """
        names = tuple(names) if names else default_names("x", self.nvars)
        order = order or LEX
        ring = self.ring
        pieces: List[Tuple[bool, str]] = []
        for m, c in self.sorted_terms(order):
            xmono = [] if not any(m) else [format_monomial(m, names)]
            if ring.kind is RingKind.POLY_OVER_FIELD:
                theta_order = ring.coefficient_order
                theta_terms = c.sorted_terms(theta_order)
                if len(theta_terms) == 1 or not xmono:
                    for tm, tc in theta_terms:
                        tmono = [] if not any(tm) else [format_monomial(tm, ring.theta_vars)]
                        negative, coef = _split_sign(ring.base, tc)
                        pieces.append((negative, _term_body(coef, tmono + xmono)))
                else:
                    pieces.append((False, f"({c.format(ring.theta_vars, theta_order)})*{xmono[0]}"))
            else:
                negative, coef = _split_sign(ring, c)
                pieces.append((negative, _term_body(coef, xmono)))
        if not pieces:
            return "0"
        first_negative, first_body = pieces[0]
        out = ("-" if first_negative else "") + first_body
        for negative, body in pieces[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r} over {self.ring.to_header()})"


def _split_sign(ring: RingDescriptor, c: RingElement) -> Tuple[bool, str]:
    if ring.kind in (RingKind.INTEGERS, RingKind.RATIONALS) and c < 0:
        return True, str(-c)
    return False, str(c)


def _term_body(coef: str, monomials: List[str]) -> str:
    if not monomials:
        return coef
    if coef == "1":
        return "*".join(monomials)
    return "*".join([coef] + monomials)


# Operations

class PolyOp(Enum):
    """Arithmetic operations supported by poly_arith"""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    SCALE = "scale"


def poly_arith(op: PolyOp, f: Polynomial, g: Any) -> Polynomial:
    """
    Exact ring arithmetic on polynomials.

    Args:
        op: Operation
        f: Left operand
        g: Polynomial, or a coefficient-ring element for SCALE

    Raises:
        RingMismatch, DimensionMismatch: for incompatible operands
    """
    if op is PolyOp.SCALE:
        return f.scale(g)
    if isinstance(g, Polynomial) and g.ring != f.ring:
        raise RingMismatch(f"cannot combine {f.ring.to_header()} with {g.ring.to_header()}")
    if op is PolyOp.ADD:
        return f + g
    if op is PolyOp.SUB:
        return f - g
    return f * g


def leading_data(f: Polynomial, order: MonomialOrder) -> LeadingData:
    return f.leading_data(order)


def divide(f: Polynomial, divisors: Sequence[Polynomial],
           order: MonomialOrder) -> Tuple[List[Polynomial], Polynomial]:
    """
    Multivariate division over a field.

    Returns:
        (quotients, remainder) with f == sum(q*g) + remainder and no term of
        the remainder divisible by a leading monomial of the divisors
    """
    ring = f.ring
    n = f.nvars
    leads = [g.leading_data(order) for g in divisors]
    quotients: List[Dict[Monomial, RingElement]] = [{} for _ in divisors]
    remainder: Dict[Monomial, RingElement] = {}
    h = f
    while not h.is_zero():
        ld = h.leading_data(order)
        for i, gd in enumerate(leads):
            if monomial_divides(gd.lm, ld.lm):
                c = ring.mul(ld.lc, ring.inverse(gd.lc))
                m = monomial_div(ld.lm, gd.lm)
                h = h - divisors[i].mul_term(c, m)
                quotients[i][m] = c
                break
        else:
            remainder[ld.lm] = ld.lc
            h = h.without(ld.lm)
    return [Polynomial._make(ring, n, q) for q in quotients], Polynomial._make(ring, n, remainder)


# Joint ring k[x, t] for coefficient rings k[t]

def to_joint(f: Polynomial) -> Polynomial:
    """View a k[t][x] polynomial as a k[x, t] polynomial, x variables first."""
    ring = f.ring
    if ring.kind is not RingKind.POLY_OVER_FIELD:
        raise RingMismatch("joint-ring conversion needs a polynomial coefficient ring")
    terms = {}
    for m, c in f.terms.items():
        for tm, tc in c.terms.items():
            terms[m + tm] = tc
    return Polynomial._make(ring.base, f.nvars + ring.theta_count, terms)


def from_joint(h: Polynomial, ring: RingDescriptor, nvars: int) -> Polynomial:
    """Inverse of to_joint."""
    m_count = ring.theta_count
    grouped: Dict[Monomial, Dict[Monomial, RingElement]] = {}
    for m, c in h.terms.items():
        grouped.setdefault(m[:nvars], {})[m[nvars:]] = c
    terms = {m: Polynomial._make(ring.base, m_count, ts) for m, ts in grouped.items()}
    return Polynomial._make(ring, nvars, terms)


def block_order(x_order: MonomialOrder, ring: RingDescriptor, nvars: int) -> MonomialOrder:
    """Block order with x variables eliminated before the coefficient variables."""
    return MonomialOrder.block(x_order, OrderKind(ring.theta_order), nvars)


def joint_leading_monomial(f: Polynomial, order: MonomialOrder) -> Monomial:
    """Leading monomial of f in k[x, t] under the block order built from ``order``."""
    ld = f.leading_data(order)
    return ld.lm + ld.lc.leading_data(f.ring.coefficient_order).lm
