"""
Newton polyhedra
================

Beyond weighted homogeneous f the filtration comes from the Newton
polyhedron.  We look at a convenient non-degenerate example and at one
whose boundary has a degenerate edge.
"""

from qhodge import VariableContext, build_polyhedron, is_nondegenerate, parse_polynomial
from qhodge.newton import report

ctx = VariableContext(["x", "y"])
f = parse_polynomial("x^2*y^2 + x^5 + y^5", ctx)
np_ = build_polyhedron(f)
print("f = x^2*y^2 + x^5 + y^5")
print("  convenient:", np_.convenient, " nondegenerate:", is_nondegenerate(np_, f))
for facet in np_.facets:
    print("  facet normal", tuple(str(c) for c in facet.normal), "through", np_.face_points(facet))

ctx3 = VariableContext(["x", "y", "z"])
g = parse_polynomial("(x+y)^2 + x*z + z^2", ctx3)
np_g = build_polyhedron(g)
rep = report(np_g, g)
print("g = (x+y)^2 + x*z + z^2")
print("  nondegenerate:", rep["nondegenerate"])
for face in rep["faces"]:
    if not face["nondegenerate"]:
        # the restriction to this edge is a perfect square
        print("  degenerate face through", [np_g.points[i] for i in face["support"]])
