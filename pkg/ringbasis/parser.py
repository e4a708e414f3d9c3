"""
Problem File Parser

Reads the plain-text problem format: header lines (``ring``, ``vars``,
``order``), one polynomial per line and the optional ``[order_ideal]``,
``[lattice_vectors]`` and ``[probe]`` sections. Expressions are tokenised
and parsed with funcparserlib; every error carries a line and column.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from funcparserlib.lexer import LexerError, Token, TokenSpec, make_tokenizer
from funcparserlib.parser import NoParseError, Parser, finished, forward_decl, many, maybe, some, tok

from ringbasis.coeffring import RingDescriptor, RingKind, integers, poly_over_field, prime_field, rationals
from ringbasis.errors import (
    CoefficientOutOfRing,
    MissingSection,
    ProblemSyntaxError,
    RingMismatch,
    UnknownVariable,
    UnsupportedRing,
)
from ringbasis.poly import Monomial, MonomialOrder, Polynomial, default_names

logger = logging.getLogger(__name__)

SECTIONS = ("generators", "order_ideal", "lattice_vectors", "probe")
ORDER_NAMES = ("lex", "grevlex")

_tokenize = make_tokenizer([
    TokenSpec("space", r"[ \t\r]+"),
    TokenSpec("number", r"[0-9]+"),
    TokenSpec("name", r"[A-Za-z_][A-Za-z_0-9]*"),
    TokenSpec("op", r"[-+*/^(),\[\]]"),
])


@dataclass(frozen=True)
class ParseContext:
    """Ring and variable names a polynomial is read against"""
    ring: RingDescriptor
    var_names: Tuple[str, ...]

    @property
    def nvars(self) -> int:
        return len(self.var_names)


@dataclass
class ProblemFile:
    """A parsed problem: header, generators and optional sections"""
    ring: RingDescriptor
    var_names: Tuple[str, ...]
    order: MonomialOrder
    generators: List[Polynomial] = field(default_factory=list)
    order_ideal: Optional[List[Monomial]] = None
    lattice_vectors: Optional[List[Tuple[int, ...]]] = None
    probes: List[Polynomial] = field(default_factory=list)
    sections: Tuple[str, ...] = ()

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    @property
    def context(self) -> ParseContext:
        return ParseContext(self.ring, self.var_names)

    def require(self, section: str):
        """
        Raises:
            MissingSection: if the file has no such section
        """
        if section not in self.sections:
            raise MissingSection(f"this command needs a [{section}] section", section=section)


# Tokens

def tokenize(src: str, line: int = 1) -> List[Token]:
    """
    Split one line into tokens, with positions on the given line.

    Raises:
        ProblemSyntaxError: for characters outside the language
    """
    try:
        tokens = [t for t in _tokenize(src) if t.type != "space"]
    except LexerError as e:
        column = e.place[1] if e.place else 1
        raise ProblemSyntaxError(line, column, ["number", "name", "operator"],
                                 f"line {line}, column {column}: unexpected character") from None
    return [Token(t.type, t.value, (line, t.start[1]), (line, t.end[1])) for t in tokens]


def _run(parser: Parser, tokens: List[Token], src: str, line: int) -> Any:
    try:
        return parser.parse(tokens)
    except NoParseError as e:
        index = getattr(e.state, "max", 0)
        if index < len(tokens):
            column = tokens[index].start[1]
            found = f"'{tokens[index].value}'"
        else:
            column = len(src.rstrip()) + 1
            found = "end of input"
        _, sep, tail = e.msg.partition("expected: ")
        expected = [s.strip() for s in tail.split(" or ")] if sep else ["end of input"]
        raise ProblemSyntaxError(
            line, column, expected,
            f"line {line}, column {column}: got {found}, expected {' or '.join(sorted(set(expected)))}",
        ) from None


def _op(s: str) -> Parser:
    return tok("op", s)


def _kind(name: str) -> Parser:
    # Keeps the token so positions survive to the semantic actions
    return some(lambda t: t.type == name).named(name)


# Ring headers

def _build_ring(values) -> RingDescriptor:
    base_token, modulus, theta = values
    name = base_token.value
    if name == "Z":
        base = integers()
    elif name == "Q":
        base = rationals()
    elif name == "GF":
        if modulus is None:
            raise ProblemSyntaxError(*base_token.end, ["'('"])
        try:
            base = prime_field(int(modulus.value))
        except UnsupportedRing as e:
            raise UnsupportedRing(f"GF({modulus.value}): modulus is not prime", p=int(modulus.value)) from e
    else:
        raise ProblemSyntaxError(*base_token.start, ["Z", "Q", "GF"])
    if theta is None:
        return base
    names, order = theta
    order_name = order.value if order is not None else "lex"
    if order_name not in ORDER_NAMES:
        raise ProblemSyntaxError(*order.start, list(ORDER_NAMES))
    return poly_over_field(base, [t.value for t in names], order_name)


_name = _kind("name")
_number = _kind("number")
_theta_list = (-_op("[") + _name + many(-_op(",") + _name) + -_op("]")) >> (lambda v: [v[0]] + v[1])
_ring_header = (
    _name
    + maybe(-_op("(") + _number + -_op(")"))
    + maybe(_theta_list + maybe(-tok("name", "order") + _name))
    + -finished
) >> _build_ring


def parse_ring_header(text: str, line: int = 1) -> RingDescriptor:
    """
    Parse a ring description such as ``Z``, ``GF(7)`` or ``Q[a,b] order grevlex``.

    Raises:
        ProblemSyntaxError: for malformed headers
        UnsupportedRing: for non-prime moduli and other invalid rings
    """
    return _run(_ring_header, tokenize(text, line), text, line)


# Polynomials

def _polynomial_parser(ctx: ParseContext) -> Parser:
    ring, n = ctx.ring, ctx.nvars
    theta = ring.theta_vars if ring.kind is RingKind.POLY_OVER_FIELD else ()

    def constant(value: Any, token: Token) -> Polynomial:
        try:
            return Polynomial.constant(ring, n, ring.canonical(value))
        except RingMismatch:
            raise CoefficientOutOfRing(
                f"line {token.start[0]}, column {token.start[1]}: {value} is not in {ring.to_header()}",
                line=token.start[0], column=token.start[1],
            ) from None

    def make_number(values) -> Polynomial:
        numerator, denominator = values
        if denominator is None:
            return constant(int(numerator.value), numerator)
        if int(denominator.value) == 0:
            raise CoefficientOutOfRing(
                f"line {denominator.start[0]}, column {denominator.start[1]}: division by zero",
                line=denominator.start[0], column=denominator.start[1],
            )
        return constant(Fraction(int(numerator.value), int(denominator.value)), numerator)

    def make_name(token: Token) -> Polynomial:
        if token.value in ctx.var_names:
            return Polynomial.variable(ring, n, ctx.var_names.index(token.value))
        if token.value in theta:
            coefficient = Polynomial.variable(ring.base, ring.theta_count, theta.index(token.value))
            return Polynomial.constant(ring, n, coefficient)
        raise UnknownVariable(
            f"line {token.start[0]}, column {token.start[1]}: unknown variable '{token.value}'",
            name=token.value, line=token.start[0], column=token.start[1],
        )

    def make_power(values) -> Polynomial:
        base, exponent = values
        return base if exponent is None else base ** int(exponent.value)

    def make_product(values) -> Polynomial:
        first, rest = values
        for factor in rest:
            first = first * factor
        return first

    def make_sum(values) -> Polynomial:
        sign, first, rest = values
        total = -first if sign == "-" else first
        for op, term in rest:
            total = total - term if op == "-" else total + term
        return total

    expr = forward_decl().named("expression")
    number = (_number + maybe(-_op("/") + _number)) >> make_number
    atom = (number | (_name >> make_name) | (-_op("(") + expr + -_op(")"))).named("term")
    power = (atom + maybe(-_op("^") + _number)) >> make_power
    product = (power + many(-_op("*") + power)) >> make_product
    sign = _op("+") | _op("-")
    expr.define((maybe(sign) + product + many(sign + product)) >> make_sum)
    return expr + -finished


def parse_polynomial(src: str, ctx: ParseContext, line: int = 1) -> Polynomial:
    """
    Parse one polynomial expression.

    Raises:
        ProblemSyntaxError: with line, column and the expected tokens
        UnknownVariable: for undeclared identifiers
        CoefficientOutOfRing: for literals outside the coefficient ring
    """
    return _run(_polynomial_parser(ctx), tokenize(src, line), src, line)


def parse_monomial(src: str, ctx: ParseContext, line: int = 1) -> Monomial:
    """Parse a monomial such as ``1`` or ``x1^2*x2``."""
    f = parse_polynomial(src, ctx, line)
    if len(f) != 1 or not ctx.ring.is_one(next(iter(f.terms.values()))):
        raise ProblemSyntaxError(line, 1, ["monomial"], f"line {line}: '{src.strip()}' is not a monomial")
    return next(iter(f.terms))


_integer = (maybe(_op("-")) + _number) >> (lambda v: -int(v[1].value) if v[0] else int(v[1].value))
_vector = (
    (-_op("(") + _integer + many(-maybe(_op(",")) + _integer) + -_op(")"))
    | (_integer + many(-maybe(_op(",")) + _integer))
) >> (lambda v: tuple([v[0]] + v[1]))


def parse_vector(src: str, line: int = 1) -> Tuple[int, ...]:
    """Parse an integer vector: ``1 -1``, ``1, -1`` or ``(1, -1)``."""
    return _run(_vector + -finished, tokenize(src, line), src, line)


# Problem files

def _split_items(text: str) -> List[str]:
    return [item for item in (part.strip() for part in text.split(",")) if item]


def _header_value(body: str, keyword: str) -> str:
    return body[len(keyword):].strip()


def parse_problem(text: str) -> ProblemFile:
    """
    Parse a complete problem file.

    Header lines come first; polynomial lines before any section header
    belong to ``[generators]``.

    Raises:
        ProblemSyntaxError, UnknownVariable, CoefficientOutOfRing: as the
            line-level parsers do
        MissingSection: when the ``ring`` or ``vars`` header is absent
    """
    ring: Optional[RingDescriptor] = None
    names: Optional[Tuple[str, ...]] = None
    order_name = "lex"
    section = None
    sections: List[str] = []
    pending: List[Tuple[str, int, str]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        column = raw.index(body[0]) + 1
        if body.startswith("["):
            name = body.strip("[] \t")
            if not body.endswith("]") or name not in SECTIONS:
                raise ProblemSyntaxError(number, column, [f"[{s}]" for s in SECTIONS])
            section = name
            if name not in sections:
                sections.append(name)
            continue
        keyword = body.split(None, 1)[0]
        if section is None and keyword in ("ring", "vars", "order"):
            if pending:
                raise ProblemSyntaxError(number, column, ["polynomial"],
                                         f"line {number}: header '{keyword}' after the first polynomial")
            value = _header_value(body, keyword)
            if keyword == "ring":
                ring = parse_ring_header(value, number)
            elif keyword == "vars":
                names = _parse_vars(value, number, column)
            else:
                if value not in ORDER_NAMES:
                    raise ProblemSyntaxError(number, column + len(keyword) + 1, list(ORDER_NAMES))
                order_name = value
            continue
        pending.append((section or "generators", number, body))

    if ring is None:
        raise MissingSection("the problem has no 'ring' header", section="ring")
    if names is None:
        raise MissingSection("the problem has no 'vars' header", section="vars")
    if ring.kind is RingKind.POLY_OVER_FIELD and set(names) & set(ring.theta_vars):
        raise ProblemSyntaxError(1, 1, ["variable names distinct from coefficient names"],
                                 f"variables {sorted(set(names) & set(ring.theta_vars))} are also coefficient names")

    problem = ProblemFile(ring, names, MonomialOrder.from_name(order_name))
    ctx = problem.context
    for kind, number, body in pending:
        if kind == "generators":
            problem.generators.append(parse_polynomial(body, ctx, number))
        elif kind == "probe":
            problem.probes.append(parse_polynomial(body, ctx, number))
        elif kind == "order_ideal":
            problem.order_ideal = (problem.order_ideal or []) + [
                parse_monomial(item, ctx, number) for item in _split_items(body)
            ]
        else:
            problem.lattice_vectors = (problem.lattice_vectors or []) + [parse_vector(body, number)]
    if pending and pending[0][0] == "generators" and "generators" not in sections:
        sections.insert(0, "generators")
    for kind in ("order_ideal", "lattice_vectors"):
        if kind in sections and getattr(problem, kind) is None:
            setattr(problem, kind, [])
    problem.sections = tuple(sections)
    logger.debug(f"Parsed problem over {ring.to_header()} in {len(names)} variables: "
                 f"{len(problem.generators)} generators, sections {list(sections)}")
    return problem


def _parse_vars(value: str, line: int, column: int) -> Tuple[str, ...]:
    items = [item for item in value.replace(",", " ").split() if item]
    if len(items) == 1 and items[0].isdigit():
        return default_names("x", int(items[0]))
    tokens = tokenize(" ".join(items), line)
    if not items or any(t.type != "name" for t in tokens):
        raise ProblemSyntaxError(line, column, ["variable count", "variable names"])
    if len(set(items)) != len(items):
        raise ProblemSyntaxError(line, column, ["distinct variable names"])
    return tuple(items)
