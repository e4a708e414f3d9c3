"""
Errors Module

Exception hierarchy shared by the library and the command-line front-end.
Every error carries a stable ``code`` used in machine-readable output.
"""

from typing import Any, Dict, Iterable, Optional, Tuple


class RingBasisError(Exception):
    """Base class for all ringbasis errors"""

    code = "RingBasisError"

    def __init__(self, message: str = "", **details: Any):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        """Serialise the error for JSON output."""
        payload: Dict[str, Any] = {"error": self.code, "message": self.message}
        payload.update(self.details)
        return payload


class DomainError(RingBasisError):
    """Raised when an input is well formed but mathematically unsuitable"""

    code = "DomainError"


class ParseError(RingBasisError):
    """Raised when problem text cannot be read"""

    code = "ParseError"


# Coefficient rings

class UnsupportedRing(DomainError):
    code = "UnsupportedRing"


class RingMismatch(DomainError):
    code = "RingMismatch"


class DimensionMismatch(DomainError):
    code = "DimensionMismatch"


# Polynomials and bases

class ZeroPolynomial(DomainError):
    code = "ZeroPolynomial"


class NotCertified(DomainError):
    code = "NotCertified"


class NotShortReduced(DomainError):
    code = "NotShortReduced"


class PairLimitExceeded(DomainError):
    code = "PairLimitExceeded"


class ProbeNotInIdeal(DomainError):
    code = "ProbeNotInIdeal"


# Quotients

class NotMonic(DomainError):
    code = "NotMonic"


class CapRequired(DomainError):
    code = "CapRequired"


class InfiniteBasis(DomainError):
    code = "InfiniteBasis"


class ZeroVector(DomainError):
    code = "ZeroVector"


# Border bases

class EmptySet(DomainError):
    code = "EmptySet"


class NotDivisorClosed(DomainError):
    code = "NotDivisorClosed"

    def __init__(self, monomial: Tuple[int, ...], missing: Tuple[int, ...]):
        super().__init__(
            f"monomial {monomial} has divisor {missing} outside the set",
            monomial=list(monomial),
            missing_divisor=list(missing),
        )
        self.monomial = monomial
        self.missing = missing


class CountMismatch(DomainError):
    code = "CountMismatch"


class BadSupport(DomainError):
    code = "BadSupport"


class MissingBorderTerm(DomainError):
    code = "MissingBorderTerm"


class NotFree(DomainError):
    code = "NotFree"


class OrderIdealMismatch(DomainError):
    code = "OrderIdealMismatch"


class InfiniteQuotient(DomainError):
    code = "InfiniteQuotient"


# Input language

class ProblemSyntaxError(ParseError):
    """Syntax error with a source position and the set of expected tokens"""

    code = "SyntaxError"

    def __init__(self, line: int, column: int, expected: Iterable[str], message: Optional[str] = None):
        expected_list = sorted(set(expected))
        super().__init__(
            message or f"line {line}, column {column}: expected {' or '.join(expected_list)}",
            line=line,
            column=column,
            expected=expected_list,
        )
        self.line = line
        self.column = column
        self.expected = expected_list


class UnknownVariable(ParseError):
    code = "UnknownVariable"


class CoefficientOutOfRing(ParseError):
    code = "CoefficientOutOfRing"


class MissingSection(ParseError):
    code = "MissingSection"
