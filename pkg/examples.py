"""
Example usage of ringbasis

This example walks through the library API: Groebner bases over the
integers, the freeness test, module bases, polynomial coefficient rings
and border bases.
"""

from ringbasis.border import border_basis_of, border_nf, validate_order_ideal
from ringbasis.coeffring import integers, poly_over_field, rationals
from ringbasis.groebner import (
    GroebnerBasis,
    certify_groebner,
    groebner_basis,
    is_strong_gb,
    normal_form,
    pauer_short_reduce,
    verify_strong_reduced,
)
from ringbasis.parser import ParseContext, parse_polynomial
from ringbasis.poly import LEX
from ringbasis.quotient import is_free, module_basis, phi_coordinates, quotient_ring, torsion_witness


def parse_all(ring, names, *texts):
    ctx = ParseContext(ring, tuple(names))
    return [parse_polynomial(text, ctx) for text in texts]


def example_free_quotient():
    """Example: a free quotient over Z"""
    print("=" * 80)
    print("EXAMPLE 1: Short Reduced Basis and Module Basis")
    print("=" * 80)

    names = ["x", "y"]
    gens = parse_all(integers(), names, "3*x^2", "5*x^2", "y")
    G = groebner_basis(gens, LEX)
    S = pauer_short_reduce(G)

    print(f"\nGenerators:          {[g.format(names) for g in gens]}")
    print(f"Groebner basis:      {G.format(names)} ({G.certification.value})")
    print(f"Short reduced basis: {S.format(names)}")
    print(f"Free quotient:       {is_free(S)}")

    basis = module_basis(S)
    print(f"Module basis:        {basis.format(names)}")

    Q = quotient_ring(S)
    f = parse_all(integers(), names, "7*x^2 + 4*x + 3")[0]
    print(f"Coordinates of {f.format(names)}: {phi_coordinates(f, Q)}")
    print()


def example_torsion():
    """Example: a quotient that is not free"""
    print("=" * 80)
    print("EXAMPLE 2: Torsion")
    print("=" * 80)

    names = ["x", "y"]
    S = pauer_short_reduce(groebner_basis(parse_all(integers(), names, "2*x", "3*y"), LEX))
    print(f"\nShort reduced basis: {S.format(names)}")
    print(f"Free quotient:       {is_free(S)}")

    witness = torsion_witness(S)
    if witness:
        c, m = witness
        print(f"Torsion witness:     {c} * ({m.format(names)}) lies in the ideal, {m.format(names)} does not")

    G = certify_groebner(GroebnerBasis.from_polynomials(parse_all(integers(), names, "2*x", "3*y"), LEX))
    strong, counterexample = is_strong_gb(G)
    print(f"Given basis strong:  {strong} (counterexample {counterexample.format(names)})")
    print()


def example_coefficient_variables():
    """Example: coefficients in Q[a]"""
    print("=" * 80)
    print("EXAMPLE 3: Polynomial Coefficient Rings")
    print("=" * 80)

    ring = poly_over_field(rationals(), ["a"])
    names = ["x"]
    for texts in (("a^2*x - a^2", "(a^3 - 1)*x - a^3 + 1"), ("a^2*x - a", "(a^3 - 1)*x - a^2 + 1")):
        gens = parse_all(ring, names, *texts)
        S = pauer_short_reduce(groebner_basis(gens, LEX))
        ok, condition = verify_strong_reduced(S)
        print(f"\nGenerators:          {list(texts)}")
        print(f"Short reduced basis: {S.format(names)}")
        print(f"Strong reduced:      {ok}")
        print(f"Free quotient:       {is_free(S)}")
    print()


def example_border_basis():
    """Example: border basis and border division"""
    print("=" * 80)
    print("EXAMPLE 4: Border Basis")
    print("=" * 80)

    z = integers()
    names = ["x", "y"]
    S = pauer_short_reduce(groebner_basis(parse_all(z, names, "x^2 - 1", "y - 1"), LEX))
    O = validate_order_ideal([(0, 0), (1, 0)], order=LEX)
    B = border_basis_of(S, O)

    print(f"\nOrder ideal:  {O.format(names)['order_ideal']}")
    print(f"Border:       {O.format(names)['border']}")
    print(f"Border basis: {[b.format(names) for b in B.elements]}")

    f = parse_all(z, names, "x^2*y")[0]
    print(f"Border normal form of {f.format(names)}: {border_nf(f, B).format(names)}")
    print(f"Groebner normal form:         {normal_form(f, S).remainder.format(names)}")
    print()


def main():
    """Run all examples"""
    print("\n")
    print("╔" + "=" * 78 + "╗")
    print("║" + " " * 28 + "RINGBASIS EXAMPLES" + " " * 32 + "║")
    print("╚" + "=" * 78 + "╝")
    print()

    example_free_quotient()
    example_torsion()
    example_coefficient_variables()
    example_border_basis()

    print("=" * 80)
    print("Examples completed.")
    print("=" * 80)


if __name__ == "__main__":
    main()
