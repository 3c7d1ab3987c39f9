"""Lens spaces produced by cosmetic surgery on Berge-Gabai knots.

A Berge-Gabai knot of winding number ``w`` sits in one Heegaard solid torus
``V_1`` of ``L(p, q)``, whose other solid torus has meridian
``q mu_1 + p lambda_1``.  A non-trivial cosmetic surgery slope has the form
``±(m mu_0 + lambda_0)`` with ``gcd(m, w) = 1`` and turns ``V_1`` into a solid
torus with meridian ``m mu_1 + w^2 lambda_1``; the result is ``L(p', q')`` with
``p' = |m p - q w^2|``.

The gcd conditions make ``p'`` coprime to ``p``.  They do not quite make it
nonzero: ``m p = q w^2`` is possible when ``p = w = 1`` and ``m = q`` (the knot is
then a core of ``V_1`` inside ``S^3``).  That input is rejected with
:class:`~kfk.errors.DegenerateSurgery`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateSurgery, FalsificationError, InvalidInput
from .slope import Slope


@dataclass(frozen=True)
class BGSurgeryInput:
    p: int
    q: int
    w: int
    m: int

    def __post_init__(self):
        if self.p < 1 or self.w < 1:
            raise InvalidInput("p and w must be positive")
        for name, a, b in (("p, q", self.p, self.q), ("p, w", self.p, self.w),
                           ("m, w", self.m, self.w)):
            if math.gcd(a, b) != 1:
                raise InvalidInput(f"gcd({name}) = gcd({a}, {b}) != 1")
        # the gcd conditions leave exactly one way for p' to vanish: p = w = 1, m = q
        if self.m * self.p == self.q * self.w * self.w:
            raise DegenerateSurgery(f"p' = 0 for {self}: winding number 1 knot in S^3")


@dataclass(frozen=True)
class SurgeryResult:
    p_prime: int
    meridian_image: tuple[int, int]  # (mu_1, lambda_1) coefficients


def cosmetic_surgery_lens(data: BGSurgeryInput) -> SurgeryResult:
    p, q, w, m = data.p, data.q, data.w, data.m
    p_prime = abs(m * p - q * w * w)
    if p_prime == 0 or math.gcd(p, p_prime) != 1:
        raise FalsificationError(f"p' = {p_prime} for {data}", certificate=data)
    return SurgeryResult(p_prime=p_prime, meridian_image=(m, w * w))


def surgery_slope(m: int) -> Slope:
    """The slope ``m mu_0 + lambda_0`` as a canonical :class:`Slope` (``p`` is the
    ``mu_0`` coefficient)."""
    return Slope.canonical(m, 1)
