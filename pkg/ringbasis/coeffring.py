"""
Coefficient Ring Module

Coefficient rings for polynomial computations: the integers, the rationals,
prime fields and polynomial rings k[t1..tm] over one of those fields.

Every ring supplies the three capabilities the basis algorithms rely on:
minimal generating sets of ideals, a canonical coset representative
(``eta``) and constructive ideal membership (``membership_witness``).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple

from sympy import isprime, mod_inverse
from sympy.core.intfunc import igcdex

from ringbasis.errors import RingMismatch, UnsupportedRing

logger = logging.getLogger(__name__)

# int for Z and GF(p), Fraction for Q, Polynomial in the theta variables for k[theta]
RingElement = Any

THETA_ORDERS = ("lex", "grevlex")


class RingKind(Enum):
    """Coefficient ring kinds"""
    INTEGERS = "Z"
    RATIONALS = "Q"
    PRIME_FIELD = "GF"
    POLY_OVER_FIELD = "poly"


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended gcd on integers.

    Returns:
        (x, y, g) with x*a + y*b == g and g >= 0
    """
    x, y, g = igcdex(int(a), int(b))
    return int(x), int(y), int(g)


@dataclass(frozen=True)
class RingDescriptor:
    """Describes a coefficient ring and implements its element arithmetic"""
    kind: RingKind
    p: Optional[int] = None
    base: Optional["RingDescriptor"] = None
    theta_vars: Tuple[str, ...] = ()
    theta_order: str = "lex"

    def __post_init__(self):
        if self.kind is RingKind.PRIME_FIELD:
            if self.p is None or not isprime(self.p):
                raise UnsupportedRing(f"GF({self.p}) needs a prime modulus", p=self.p)
        if self.kind is RingKind.POLY_OVER_FIELD:
            if self.base is None or not self.base.is_field:
                raise UnsupportedRing("polynomial coefficient rings need a field as base")
            if not self.theta_vars:
                raise UnsupportedRing("polynomial coefficient rings need at least one variable")
            if len(set(self.theta_vars)) != len(self.theta_vars):
                raise UnsupportedRing(f"duplicate coefficient variables in {list(self.theta_vars)}")
            if self.theta_order not in THETA_ORDERS:
                raise UnsupportedRing(f"unknown coefficient order '{self.theta_order}'")

    # Structure

    @property
    def is_field(self) -> bool:
        return self.kind in (RingKind.RATIONALS, RingKind.PRIME_FIELD)

    @property
    def is_polynomial(self) -> bool:
        return self.kind is RingKind.POLY_OVER_FIELD

    @property
    def theta_count(self) -> int:
        return len(self.theta_vars)

    @property
    def coefficient_order(self):
        """Monomial order on the theta variables (polynomial coefficient rings only)."""
        from ringbasis.poly import MonomialOrder
        return MonomialOrder.from_name(self.theta_order)

    # Elements

    def zero(self) -> RingElement:
        if self.kind is RingKind.RATIONALS:
            return Fraction(0)
        if self.kind is RingKind.POLY_OVER_FIELD:
            from ringbasis.poly import Polynomial
            return Polynomial.zero(self.base, self.theta_count)
        return 0

    def one(self) -> RingElement:
        return self.from_int(1)

    def from_int(self, n: int) -> RingElement:
        if self.kind is RingKind.INTEGERS:
            return int(n)
        if self.kind is RingKind.RATIONALS:
            return Fraction(n)
        if self.kind is RingKind.PRIME_FIELD:
            return int(n) % self.p
        from ringbasis.poly import Polynomial
        return Polynomial.constant(self.base, self.theta_count, self.base.from_int(n))

    def canonical(self, value: RingElement) -> RingElement:
        """
        Coerce a value into the canonical element representation.

        Raises:
            RingMismatch: if the value does not belong to this ring
        """
        if self.kind is RingKind.POLY_OVER_FIELD:
            from ringbasis.poly import Polynomial
            if isinstance(value, Polynomial):
                if value.ring != self.base or value.nvars != self.theta_count:
                    raise RingMismatch(f"{value!r} is not an element of {self.to_header()}")
                return value
            return Polynomial.constant(self.base, self.theta_count, self.base.canonical(value))
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise RingMismatch(f"{value!r} is not an element of {self.to_header()}")
        if self.kind is RingKind.INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise RingMismatch(f"{value} is not an integer")
                return int(value.numerator)
            return int(value)
        if self.kind is RingKind.RATIONALS:
            return Fraction(value)
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise RingMismatch(f"{value} has no image in GF({self.p})")
        return value.numerator * int(mod_inverse(value.denominator, self.p)) % self.p

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        if self.kind is RingKind.PRIME_FIELD:
            return (a + b) % self.p
        return a + b

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        if self.kind is RingKind.PRIME_FIELD:
            return (a - b) % self.p
        return a - b

    def neg(self, a: RingElement) -> RingElement:
        if self.kind is RingKind.PRIME_FIELD:
            return -a % self.p
        return -a

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        if self.kind is RingKind.PRIME_FIELD:
            return a * b % self.p
        return a * b

    def is_zero(self, a: RingElement) -> bool:
        if self.kind is RingKind.POLY_OVER_FIELD:
            return a.is_zero()
        return a == 0

    def is_one(self, a: RingElement) -> bool:
        if self.kind is RingKind.POLY_OVER_FIELD:
            return a == self.one()
        return a == 1

    def is_unit(self, a: RingElement) -> bool:
        if self.kind is RingKind.INTEGERS:
            return a in (1, -1)
        if self.kind is RingKind.POLY_OVER_FIELD:
            return a.is_constant() and not a.is_zero()
        return a != 0

    def inverse(self, a: RingElement) -> RingElement:
        """Multiplicative inverse of a unit."""
        if self.is_zero(a) or not self.is_unit(a):
            raise ZeroDivisionError(f"{self.format_element(a)} is not invertible in {self.to_header()}")
        if self.kind is RingKind.RATIONALS:
            return 1 / a
        if self.kind is RingKind.PRIME_FIELD:
            return int(mod_inverse(a, self.p))
        if self.kind is RingKind.INTEGERS:
            return a
        from ringbasis.poly import Polynomial
        c = a.constant_coefficient()
        return Polynomial.constant(self.base, self.theta_count, self.base.inverse(c))

    def divides(self, a: RingElement, b: RingElement) -> bool:
        """True iff a divides b."""
        if self.is_zero(a):
            return self.is_zero(b)
        if self.kind is RingKind.INTEGERS:
            return b % a == 0
        if self.is_field:
            return True
        from ringbasis.poly import divide
        _, remainder = divide(b, [a], self.coefficient_order)
        return remainder.is_zero()

    def exact_quotient(self, b: RingElement, a: RingElement) -> RingElement:
        """b / a for a dividing b."""
        if self.kind is RingKind.INTEGERS:
            q, r = divmod(b, a)
            if r:
                raise ArithmeticError(f"{a} does not divide {b}")
            return q
        if self.is_field:
            return self.mul(b, self.inverse(a))
        from ringbasis.poly import divide
        (q,), remainder = divide(b, [a], self.coefficient_order)
        if not remainder.is_zero():
            raise ArithmeticError(f"{a} does not divide {b}")
        return q

    def sort_key(self, a: RingElement) -> Tuple:
        """Deterministic total-order key for elements."""
        if self.kind is RingKind.POLY_OVER_FIELD:
            order = self.coefficient_order
            return tuple(
                (order.key(m), self.base.sort_key(c))
                for m, c in a.sorted_terms(order)
            )
        return (a,)

    def format_element(self, a: RingElement) -> str:
        if self.kind is RingKind.POLY_OVER_FIELD:
            return a.format(self.theta_vars, self.coefficient_order)
        return str(a)

    def to_header(self) -> str:
        """Render the ring in problem-file header syntax."""
        if self.kind is RingKind.INTEGERS:
            return "Z"
        if self.kind is RingKind.RATIONALS:
            return "Q"
        if self.kind is RingKind.PRIME_FIELD:
            return f"GF({self.p})"
        return f"{self.base.to_header()}[{','.join(self.theta_vars)}] order {self.theta_order}"


def integers() -> RingDescriptor:
    return RingDescriptor(RingKind.INTEGERS)


def rationals() -> RingDescriptor:
    return RingDescriptor(RingKind.RATIONALS)


def prime_field(p: int) -> RingDescriptor:
    return RingDescriptor(RingKind.PRIME_FIELD, p=p)


def poly_over_field(base: RingDescriptor, names: Sequence[str], order: str = "lex") -> RingDescriptor:
    return RingDescriptor(RingKind.POLY_OVER_FIELD, base=base, theta_vars=tuple(names), theta_order=order)


@dataclass(frozen=True)
class CoefficientIdeal:
    """
    Finitely generated ideal of a coefficient ring.

    ``cofactors[i][j]`` expresses ``min_generators[i]`` in ``raw_generators[j]``.
    """
    ring: RingDescriptor
    raw_generators: Tuple[RingElement, ...]
    min_generators: Tuple[RingElement, ...]
    cofactors: Tuple[Tuple[RingElement, ...], ...]

    def is_zero(self) -> bool:
        return not self.min_generators

    def is_unit(self) -> bool:
        return len(self.min_generators) == 1 and self.ring.is_unit(self.min_generators[0])

    def __contains__(self, z: RingElement) -> bool:
        return membership_witness(self, z) is not None


def coefficient_ideal(ring: RingDescriptor, gens: Sequence[RingElement]) -> CoefficientIdeal:
    """
    Build the ideal generated by ``gens`` together with its minimal generators.

    Args:
        ring: Coefficient ring
        gens: Generators, coerced to canonical form

    Returns:
        CoefficientIdeal (memoised; values are immutable)
    """
    return _build_ideal(ring, tuple(ring.canonical(g) for g in gens))


@lru_cache(maxsize=4096)
def _build_ideal(ring: RingDescriptor, gens: Tuple[RingElement, ...]) -> CoefficientIdeal:
    n = len(gens)
    zero = ring.zero()

    if ring.kind is RingKind.INTEGERS:
        g = 0
        coeffs = [0] * n
        # Left-to-right extended gcd fold
        for j, a in enumerate(gens):
            if a == 0:
                continue
            x, y, g = xgcd(g, a)
            coeffs = [x * c for c in coeffs]
            coeffs[j] += y
        if g == 0:
            return CoefficientIdeal(ring, gens, (), ())
        return CoefficientIdeal(ring, gens, (g,), (tuple(coeffs),))

    if ring.is_field:
        for k, a in enumerate(gens):
            if not ring.is_zero(a):
                row = [zero] * n
                row[k] = ring.inverse(a)
                return CoefficientIdeal(ring, gens, (ring.one(),), (tuple(row),))
        return CoefficientIdeal(ring, gens, (), ())

    if ring.kind is RingKind.POLY_OVER_FIELD:
        from ringbasis.groebner import field_buchberger
        positions = [j for j, a in enumerate(gens) if not a.is_zero()]
        if not positions:
            return CoefficientIdeal(ring, gens, (), ())
        reduced = field_buchberger([gens[j] for j in positions], ring.coefficient_order, track=True)
        rows = []
        for cof in reduced.cofactors:
            row = [zero] * n
            for j, c in zip(positions, cof):
                row[j] = c
            rows.append(tuple(row))
        logger.debug(f"Coefficient ideal of {n} generators has reduced basis of size {len(reduced.elements)}")
        return CoefficientIdeal(ring, gens, tuple(reduced.elements), tuple(rows))

    raise UnsupportedRing(f"no ideal strategy for {ring.kind}")


def minimal_generators(ring: RingDescriptor, gens: Sequence[RingElement]) -> List[RingElement]:
    """
    Generating set of minimal length for the ideal generated by ``gens``.

    Over Z this is the single positive gcd, over a field {1}, and over
    k[t] the reduced Groebner basis under the ring's coefficient order.
    The zero ideal has no generators.
    """
    return list(coefficient_ideal(ring, gens).min_generators)


def eta(ideal: CoefficientIdeal, z: RingElement) -> RingElement:
    """
    Canonical representative of the coset z + I.

    Args:
        ideal: The ideal I
        z: Element of the ideal's ring

    Returns:
        Over Z the residue in [0, g); over a field 0 unless I is zero;
        over k[t] the normal form of z by the reduced basis of I.
    """
    ring = ideal.ring
    z = ring.canonical(z)
    if ideal.is_zero():
        return z
    if ring.kind is RingKind.INTEGERS:
        return z % ideal.min_generators[0]
    if ring.is_field:
        return ring.zero()
    from ringbasis.poly import divide
    _, remainder = divide(z, list(ideal.min_generators), ring.coefficient_order)
    return remainder


def membership_witness(ideal: CoefficientIdeal, z: RingElement) -> Optional[List[RingElement]]:
    """
    Express z in the raw generators of the ideal.

    Returns:
        Coefficients b with z == sum(b[j] * raw_generators[j]), or None
        when z is not in the ideal
    """
    ring = ideal.ring
    z = ring.canonical(z)
    n = len(ideal.raw_generators)
    if ideal.is_zero():
        return [ring.zero()] * n if ring.is_zero(z) else None

    if ring.kind is RingKind.INTEGERS:
        g = ideal.min_generators[0]
        if z % g:
            return None
        q = z // g
        return [q * c for c in ideal.cofactors[0]]

    if ring.is_field:
        return [ring.mul(z, c) for c in ideal.cofactors[0]]

    from ringbasis.poly import divide
    quotients, remainder = divide(z, list(ideal.min_generators), ring.coefficient_order)
    if not remainder.is_zero():
        return None
    witness = [ring.zero()] * n
    for q, row in zip(quotients, ideal.cofactors):
        if q.is_zero():
            continue
        for j, c in enumerate(row):
            if not c.is_zero():
                witness[j] = witness[j] + q * c
    return witness


def contains(ideal: CoefficientIdeal, z: RingElement) -> bool:
    return z in ideal


def leading_generators(full: CoefficientIdeal, lower: CoefficientIdeal) -> List[RingElement]:
    """
    Generators a leading monomial contributes to a short reduced basis.

    Args:
        full: Ideal of leading coefficients at the monomial (own degree and divisors)
        lower: Ideal of leading coefficients from proper divisors only

    Returns:
        Over Z and fields the nonzero representatives eta(lower, a) of the
        minimal generators a of ``full``. Over k[t] the reduced-basis
        elements of ``full`` whose leading monomial is outside the leading
        monomial ideal of ``lower``; these are fixed by eta(lower, .).
    """
    ring = full.ring
    if ring.kind is RingKind.POLY_OVER_FIELD:
        from ringbasis.poly import monomial_divides
        order = ring.coefficient_order
        lower_lms = [g.leading_data(order).lm for g in lower.min_generators]
        picked = []
        for a in full.min_generators:
            lm = a.leading_data(order).lm
            if not any(monomial_divides(m, lm) for m in lower_lms):
                picked.append(a)
        return picked
    reps = (eta(lower, a) for a in full.min_generators)
    return [r for r in reps if not ring.is_zero(r)]
