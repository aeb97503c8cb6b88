"""
Sweeping the power-of-m criterion
=================================

Whenever I_k equals the microlocal ideal and is a power of the maximal
ideal, the next level is predicted to agree as well.  This sweep logs every
level where the prediction could have failed.
"""

import sys
from fractions import Fraction

from qhodge import VariableContext, conjecture_sweep, parse_polynomial
from qhodge.cli import farey_grid

grid = farey_grid(int(sys.argv[1]) if len(sys.argv) > 1 else 8)

for text, names in [("x^2+y^3", "xy"), ("x^2+y^5", "xy"), ("x^3+y^4", "xy"), ("x^2+y^3+z^5", "xyz")]:
    f = parse_polynomial(text, VariableContext(list(names)))
    reports = conjecture_sweep(f, grid, 2, workers=2)
    fired = sum(lv.criterion_fired for r in reports for lv in r.levels)
    bad = [r.alpha for r in reports if r.counterexamples]
    print(f"{text:14s} {len(grid)} alphas, criterion fired {fired} times, counterexamples at {bad or 'none'}")

print("largest alpha checked:", max(grid, default=Fraction(0)))
