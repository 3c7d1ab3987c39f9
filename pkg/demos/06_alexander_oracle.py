"""
An independent check with Alexander polynomials
===============================================

Fox calculus on the relator gives the Alexander matrix; specializing along
the slope's homomorphism and taking the gcd gives a one-variable polynomial.
Fibred classes have polynomials with unit leading and trailing coefficients.
"""

from kfk import BraidParams, Slope, relator, weight_for_slope
from kfk.alexander import alexander_specialized, fox_derivatives, fundamental_identity_defect, monic_check
from kfk.words import Word

dX, dY = fox_derivatives(Word("xyXY"))
print("commutator: dR/dx =", dX, " dR/dy =", dY)

params = BraidParams(7, 2, 4)
R = relator(params)
print("Fox identity defect for", R, "is", fundamental_identity_defect(R) or 0)

for slope in (Slope(3, 2), Slope(1, 0), Slope(2, 1), Slope(5, -3)):
    hom = weight_for_slope(params, slope)
    poly = alexander_specialized(R, hom)
    print(f"slope {slope}: phi = ({hom.wx}, {hom.wy}), degree {poly.degree_span()}, "
          f"monic {monic_check(poly)}")
