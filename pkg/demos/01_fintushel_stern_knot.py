"""
The Fintushel-Stern knot as a 1-bridge braid
============================================

Builds the braid (n, b, t) = (7, 2, 4), its permutation, the strand word and
the relator of the exterior, then checks that the exterior fibres over the
circle with boundary slope 2*mu + 3*lambda.
"""

from kfk import BraidParams, Slope, fibers_over_slope, permutation, relator, strand_word

params = BraidParams(n=7, b=2, t=4)

# the braid permutation is a single 7-cycle, so the closure is a knot
pi = permutation(params)
print("permutation:", pi.images, "cycles:", pi.cycles())

# strand word: y when the orbit of strand b lands left of b, x otherwise
print("w =", strand_word(params))

# relator y w x y^-1 w^-1 x^-1 (capital letters are inverses)
print("R =", relator(params))

# boundary curve 2*mu_1 + 3*lambda_1: winding number p = 3, coprime to n = 7
verdict = fibers_over_slope(params, Slope(3, 2))
print("phi(x), phi(y) =", verdict.weight.wx, verdict.weight.wy)
print("prefix values:", verdict.brown.prefix_values)
print("unique max at", verdict.brown.max_positions, "unique min at", verdict.brown.min_positions)
print("fibred:", verdict.fibred, "with", verdict.boundary_components, "boundary curves")
