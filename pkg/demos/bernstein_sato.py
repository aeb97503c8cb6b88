"""
Bernstein-Sato polynomials from jumping data
============================================

The b-function of a weighted homogeneous isolated singularity is read off
the Milnor algebra weights, and independently off the places where the
Hodge ideals jump.  Both routes are printed side by side.
"""

from qhodge import VariableContext, assemble_bs, bs_polynomial, detect_weights, jacobian_data, jump_data, parse_polynomial
from qhodge.bernstein import microlocal_assembly

for text, names in [("x^2+y^3", "xy"), ("x^2+y^4", "xy"), ("x^3+y^4", "xy"), ("x^2+y^3+z^5", "xyz")]:
    ctx = VariableContext(list(names))
    f = parse_polynomial(text, ctx)
    w = detect_weights(f)
    jac = jacobian_data(f, w)
    print(f"f = {text}  weights {tuple(str(x) for x in w.w)}  mu = {jac.milnor_number}")

    product = bs_polynomial(f, w)
    jd = jump_data(f, w)
    print("  from Milnor weights :", product.render())
    print("  from Hodge jumps    :", assemble_bs(jd).render())
    print("  from microlocal data:", microlocal_assembly(jd).render())
    print("  nonempty E_k:", {k: [str(x) for x in v] for k, v in jd.E_k.items() if v}, " N =", [str(r) for r in jd.N])
