"""
Hodge ideals of the cusp
========================

Walk through the ideals I_k(alpha*Z) for Z = {x^2 + y^3 = 0} and watch
where one step of first-order operators stops being enough.
"""

from fractions import Fraction

from qhodge import EQUAL, QDivisor, compare, VariableContext, hodge_ideal_direct, hodge_ideal_recursive, parse_polynomial, render
from qhodge.hodge import generating_level_empirical, generating_level_formula

ctx = VariableContext(["x", "y"])
f = parse_polynomial("x^2 + y^3", ctx)


def show(ideal):
    return "(" + ", ".join(render(g, ctx) for g in ideal.minimal_generators()) + ")"


# the cusp has weights (1/2, 1/3), so the minimal exponent is 5/6
for alpha in (Fraction(1, 10), Fraction(1, 2), Fraction(1)):
    d = QDivisor.weighted(f, alpha)
    chain = hodge_ideal_recursive(d, 2)
    print(f"alpha = {alpha}")
    for k, ideal in enumerate(chain.ideals):
        print(f"  I_{k} = {show(ideal)}")

    # the closed-form description must give the same ideals
    direct = hodge_ideal_direct(d, 2, chain.M)
    print("  direct description agrees:", all(compare(a, b) == EQUAL for a, b in zip(direct.ideals, chain.ideals)))

    level = generating_level_empirical(d, 3)
    print(f"  generating level: formula {generating_level_formula(d)}, observed {level.level}")
