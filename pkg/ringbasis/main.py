"""
Command-Line Entry Point

Runs one command on a problem file and prints a JSON document (or a plain
text rendering). Exit codes: 0 on success, 1 for parse errors, 2 for
domain errors.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from dotenv import load_dotenv

from ringbasis.border import border_basis_of, is_border_basis, validate_order_ideal
from ringbasis.config import DEFAULT_CONFIG_PATH, load_config, validate_config
from ringbasis.coeffring import RingKind
from ringbasis.errors import ParseError, RingBasisError
from ringbasis.groebner import (
    GroebnerBasis,
    certify_groebner,
    groebner_basis,
    is_strong_gb,
    normal_form,
    pauer_short_reduce,
    verify_groebner,
    verify_strong_reduced,
)
from ringbasis.parser import ProblemFile, parse_problem
from ringbasis.poly import Polynomial, format_monomial
from ringbasis.quotient import (
    INFINITE,
    is_free,
    lattice_ideal_generators,
    module_basis,
    phi_coordinates,
    quotient_ring,
    torsion_witness,
)

logger = logging.getLogger(__name__)

COMMANDS = ("gb", "short-reduce", "is-free", "module-basis", "border-basis", "nf", "strong-check")

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_DOMAIN_ERROR = 2


@dataclass
class CommandResult:
    """Outcome of a command: exit code and the document to print"""
    success: bool
    exit_code: int = EXIT_OK
    document: Dict[str, Any] = field(default_factory=dict)


def configure_logging(config: Dict[str, Any]):
    """Log to stderr (stdout carries the documents) and optionally to a file."""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if config.get('log_file'):
        handlers.append(logging.FileHandler(config['log_file']))
    logging.basicConfig(
        level=getattr(logging, str(config.get('log_level', 'WARNING')).upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


class ProblemRunner:
    """Runs the commands on one parsed problem"""

    def __init__(self, problem: ProblemFile, config: Optional[Dict[str, Any]] = None):
        """
        Args:
            problem: Parsed problem file
            config: Settings (degree_cap, max_pairs, check)
        """
        self.problem = problem
        self.config = config or {}
        self.degree_cap = self.config.get('degree_cap')
        self.max_pairs = self.config.get('max_pairs', 0) or 0
        self.check = bool(self.config.get('check', False))
        self.names = problem.var_names
        self.order = problem.order

    # Helpers

    def generators(self) -> List[Polynomial]:
        gens = list(self.problem.generators)
        if self.problem.lattice_vectors:
            gens += lattice_ideal_generators(self.problem.lattice_vectors, self.problem.ring)
        return gens

    def groebner(self) -> GroebnerBasis:
        return groebner_basis(self.generators(), self.order, self.max_pairs,
                              ring=self.problem.ring, nvars=self.problem.nvars)

    def short_reduced(self) -> GroebnerBasis:
        return pauer_short_reduce(self.groebner())

    def fmt(self, f: Polynomial) -> str:
        return f.format(self.names, self.order)

    def fmt_basis(self, G) -> List[str]:
        return [self.fmt(g) for g in G]

    def header(self, command: str) -> Dict[str, Any]:
        return {
            "command": command,
            "ring": self.problem.ring.to_header(),
            "vars": list(self.names),
            "order": self.order.name,
        }

    # Commands

    def run(self, command: str) -> Dict[str, Any]:
        handler = {
            "gb": self._gb,
            "short-reduce": self._short_reduce,
            "is-free": self._is_free,
            "module-basis": self._module_basis,
            "border-basis": self._border_basis,
            "nf": self._nf,
            "strong-check": self._strong_check,
        }.get(command)
        if handler is None:
            raise ValueError(f"unknown command '{command}'")
        document = self.header(command)
        document.update(handler())
        return document

    def _gb(self) -> Dict[str, Any]:
        G = self.groebner()
        out = {"basis": self.fmt_basis(G), "certification": G.certification.value}
        if self.check:
            out["verified"] = verify_groebner(G, self.generators())
        return out

    def _short_reduce(self) -> Dict[str, Any]:
        S = self.short_reduced()
        out = {"short_reduced_basis": self.fmt_basis(S), "monic": S.is_monic()}
        if self.check:
            out["verified"] = verify_groebner(S, self.generators())
            if S.ring.kind is RingKind.POLY_OVER_FIELD:
                ok, condition = verify_strong_reduced(S)
                out["strong_reduced"] = ok
                out["failed_condition"] = condition
        return out

    def _is_free(self) -> Dict[str, Any]:
        S = self.short_reduced()
        free = is_free(S)
        out = {"free": free, "short_reduced_basis": self.fmt_basis(S)}
        if not free:
            witness = torsion_witness(S)
            if witness is not None:
                c, m = witness
                out["torsion_witness"] = {"coefficient": S.ring.format_element(c), "monomial": self.fmt(m)}
        return out

    def _module_basis(self) -> Dict[str, Any]:
        S = self.short_reduced()
        basis = module_basis(S, self.degree_cap)
        rank = len(basis) if basis.complete else INFINITE
        return {
            "free": True,
            "rank": rank,
            "basis": basis.format(self.names),
            "complete": basis.complete,
        }

    def _border_basis(self) -> Dict[str, Any]:
        self.problem.require("order_ideal")
        O = validate_order_ideal(self.problem.order_ideal, self.problem.nvars, self.order)
        gens = self.generators()
        B = border_basis_of(pauer_short_reduce(self.groebner()), O)
        out = O.format(self.names)
        out["basis"] = self.fmt_basis(B.elements)
        if self.check:
            out["verified"] = is_border_basis(B, gens)
        return out

    def _nf(self) -> Dict[str, Any]:
        self.problem.require("probe")
        G = self.groebner()
        S = pauer_short_reduce(G)
        Q = None
        if is_free(S):
            Q = quotient_ring(S, self.degree_cap)
        results = []
        for probe in self.problem.probes:
            remainder = normal_form(probe, G).remainder
            entry = {"probe": self.fmt(probe), "normal_form": self.fmt(remainder), "in_ideal": remainder.is_zero()}
            if Q is not None and Q.complete:
                entry["coordinates"] = [S.ring.format_element(c) for c in phi_coordinates(probe, Q)]
            results.append(entry)
        out: Dict[str, Any] = {"results": results}
        if Q is not None and Q.complete:
            out["module_basis"] = [format_monomial(m, self.names) for m in Q.monomials]
        return out

    def _strong_check(self) -> Dict[str, Any]:
        gens = self.generators()
        given = GroebnerBasis.from_polynomials(gens, self.order, ring=self.problem.ring, nvars=self.problem.nvars)
        given_is_groebner = verify_groebner(given)
        G = certify_groebner(given) if given_is_groebner else self.groebner()
        strong, counterexample = is_strong_gb(G, self.problem.probes)
        return {
            "strong": strong,
            "counterexample": self.fmt(counterexample) if counterexample is not None else None,
            "basis": self.fmt_basis(G),
            "given_is_groebner": given_is_groebner,
        }


def run(command: str, problem: ProblemFile, flags: Optional[Dict[str, Any]] = None) -> CommandResult:
    """
    Run a command on a parsed problem.

    Args:
        command: One of COMMANDS
        problem: Parsed problem file
        flags: degree_cap, max_pairs and check settings

    Returns:
        CommandResult with exit code 0, or 2 and an error document
    """
    try:
        document = ProblemRunner(problem, flags).run(command)
        return CommandResult(True, EXIT_OK, document)
    except ParseError as e:
        logger.error(f"{command}: {e.message}")
        return CommandResult(False, EXIT_PARSE_ERROR, e.to_dict())
    except RingBasisError as e:
        logger.error(f"{command}: {e.message}")
        return CommandResult(False, EXIT_DOMAIN_ERROR, e.to_dict())


def run_text(command: str, text: str, flags: Optional[Dict[str, Any]] = None) -> CommandResult:
    """Parse problem text and run a command on it; parse failures exit with 1."""
    try:
        problem = parse_problem(text)
    except ParseError as e:
        logger.error(f"Parse error: {e.message}")
        return CommandResult(False, EXIT_PARSE_ERROR, e.to_dict())
    except RingBasisError as e:
        logger.error(f"Invalid problem: {e.message}")
        return CommandResult(False, EXIT_DOMAIN_ERROR, e.to_dict())
    return run(command, problem, flags)


def render(document: Dict[str, Any], output_format: str = "json", indent: Optional[int] = None) -> str:
    """Serialise a document; JSON output is byte-stable for equal documents."""
    if output_format == "text":
        lines = []
        for key in sorted(document):
            value = document[key]
            if isinstance(value, list):
                lines.append(f"{key}:")
                lines.extend(f"  {json.dumps(item, sort_keys=True) if isinstance(item, dict) else item}"
                             for item in value)
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines)
    return json.dumps(document, sort_keys=True, indent=indent)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringbasis",
        description="Groebner bases, freeness and border bases over coefficient rings",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file", help="problem file, or - for stdin")
    parser.add_argument("--cap", type=int, default=None, help="degree cap for infinite-rank enumeration")
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", dest="output_format", action="store_const", const="json")
    output.add_argument("--text", dest="output_format", action="store_const", const="text")
    parser.add_argument("--check", action="store_true", default=None, help="re-verify certifications")
    parser.add_argument("--max-pairs", type=int, default=None, help="critical-pair budget (0 = unlimited)")
    parser.add_argument("--config", default=DEFAULT_CONFIG_PATH, help="JSON configuration file")
    parser.add_argument("--log-level", default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point; returns the exit code."""
    load_dotenv()
    args = build_arg_parser().parse_args(argv)

    config = load_config(args.config)
    overrides = {
        'degree_cap': args.cap,
        'output_format': args.output_format,
        'check': args.check,
        'max_pairs': args.max_pairs,
        'log_level': args.log_level,
    }
    config.update({key: value for key, value in overrides.items() if value is not None})
    validate_config(config)
    configure_logging(config)

    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, 'r', encoding='utf-8') as f:
                text = f.read()
    except OSError as e:
        logger.error(f"Cannot read {args.file}: {e}")
        result = CommandResult(False, EXIT_PARSE_ERROR, {"error": "FileError", "message": str(e)})
    else:
        result = run_text(args.command, text, config)

    print(render(result.document, config.get('output_format', 'json'), config.get('json_indent')))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
