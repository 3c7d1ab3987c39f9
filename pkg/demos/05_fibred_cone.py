"""
Approximating a class by fibre classes
======================================

For an n-strand 1-bridge braid exterior the classes n*q*xi_1 + p*xi_2 with
gcd(p, nq) = 1 are fibre classes.  Choosing p_m = n*m*u*v + 1, q_m = m*v^2
gives fibre classes whose ratio tends to v/u with error |v| / (|u| p_m).
"""

from kfk import BraidParams, H2Class, Slope, approximate_fibre_classes, fibers_over_slope

n = 7
seq = approximate_fibre_classes(H2Class(2, 3), n, 6)
for m, (cls, err) in enumerate(seq, start=1):
    print(f"m={m}: class ({cls.c1}, {cls.c2}), ratio {cls.c1 / cls.c2:.6f}, error {err}")

# each one really fibres on the Fintushel-Stern exterior
params = BraidParams(7, 2, 4)
for cls, _ in seq:
    r = Slope.canonical(cls.c2, cls.c1 // n)
    assert fibers_over_slope(params, r).fibred
print("all approximating classes fibre on (7, 2, 4)")
