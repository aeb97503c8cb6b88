"""
Microlocal ideals against Hodge ideals
======================================

For f = x^2 + y^5 at alpha = 19/20 the two chains split apart at level one,
yet they still agree modulo f.
"""

from fractions import Fraction

from qhodge import QDivisor, VariableContext, compare_chains, membership, parse_polynomial, render

ctx = VariableContext(["x", "y"])
f = parse_polynomial("x^2 + y^5", ctx)
alpha = Fraction(19, 20)


def show(ideal):
    return "(" + ", ".join(render(g, ctx) for g in ideal.minimal_generators()) + ")"


rep = compare_chains(QDivisor.weighted(f, alpha), 1)
for level in rep.levels:
    k = level.k
    print(f"k = {k}: I = {show(rep.hodge[k])}")
    print(f"       J = {show(rep.microlocal[k])}")
    print(f"       relation {level.relation}, equal mod f: {level.mod_f_equal}")

# one witness on each side of the incomparability
w = parse_polynomial(f"{1 - 2 * alpha}*x^2 + y^5", ctx)
x2 = parse_polynomial("x^2", ctx)
print("(1-2a)x^2+y^5 in I_1 only:", membership(w, rep.hodge[1]) and not membership(w, rep.microlocal[1]))
print("x^2 in J_1 only:", membership(x2, rep.microlocal[1]) and not membership(x2, rep.hodge[1]))

# for smaller alpha the chains coincide
for a in (Fraction(1, 20), Fraction(1, 5), Fraction(1, 2), Fraction(4, 5)):
    r = compare_chains(QDivisor.weighted(f, a), 1)
    print(f"alpha = {a}: I_1 = {show(r.hodge[1])}, relation {r.levels[1].relation}")
