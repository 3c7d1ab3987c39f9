"""
Orbi-lens spaces and cosmetic surgery
=====================================

Quotients of S^3 by diagonal cyclic actions, the orbifold fundamental group
of L(p, q; b1, b2), when a knot in L(p, q; a) lifts to a knot, and the order
of the lens space obtained by cosmetic surgery on a Berge-Gabai knot.
"""

import math

from kfk.orbilens import (
    CyclicActionParams, OrbiLens, fundamental_group_order, quotient_data, unwrap_is_knot,
)
from kfk.surgery import BGSurgeryInput, cosmetic_surgery_lens, surgery_slope

for a1, a2 in [(2, 3), (4, 6), (9, 12)]:
    print(f"a=({a1},{a2}):", quotient_data(CyclicActionParams(a1, a2)))

lens = OrbiLens.with_isotropy(5, 2, 3)
print(lens, "has pi_1 of order", fundamental_group_order(lens))
for w in range(1, 8):
    print(f"  winding number {w}: lifts to a knot? {unwrap_is_knot(w, lens)}")

# L(5, 2) surgered along a winding-number-3 knot with slope mu_0 + lambda_0
data = BGSurgeryInput(p=5, q=2, w=3, m=1)
res = cosmetic_surgery_lens(data)
print("surgery slope", surgery_slope(data.m), "gives L(p', *) with p' =", res.p_prime,
      "coprime to p:", math.gcd(data.p, res.p_prime) == 1)
