"""
Slope distances and the amphichiral parity argument
===================================================

Slopes that pairwise meet at most once come in families of at most three.
An orientation-reversing involution moves p*mu + q*lambda a distance 2|pq|,
so only mu and lambda are fixed.
"""

from kfk.slope import (
    LONGITUDE, MERIDIAN, Sign, Slope, canonical_slopes, distance,
    involution_distance, involution_image, max_close_clique,
)

print("distance(3/2, mu) =", distance(Slope(3, 2), MERIDIAN))

for bound in (1, 2, 5, 10):
    size, witness = max_close_clique(bound)
    print(f"box {bound:2d}: largest close family has {size} slopes, e.g. {[str(r) for r in witness]}")

r = Slope(3, 2)
for eps in Sign:
    print(f"eps={eps.value:+d}: image of {r} is {involution_image(r, eps)}, "
          f"distance {involution_distance(r)}")

fixed = [s for s in canonical_slopes(50) if involution_distance(s) == 0]
print("fixed slopes in the 50-box:", [str(s) for s in fixed])
assert set(fixed) == {MERIDIAN, LONGITUDE}
