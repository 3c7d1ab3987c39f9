"""Cyclic quotients of the 3-sphere and orbi-lens space descriptors."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInput


@dataclass(frozen=True)
class CyclicActionParams:
    """Rotation orders ``a1, a2`` and angles ``alpha1, alpha2`` of a diagonal
    action ``(z, w) -> (e^{2 pi i alpha1/a1} z, e^{2 pi i alpha2/a2} w)`` on S^3."""

    a1: int
    a2: int
    alpha1: int = 1
    alpha2: int = 1

    def __post_init__(self):
        if self.a1 < 1 or self.a2 < 1:
            raise InvalidInput("rotation orders must be positive")
        if math.gcd(self.alpha1, self.a1) != 1 or math.gcd(self.alpha2, self.a2) != 1:
            raise InvalidInput("rotation angles must be coprime to their orders")


@dataclass(frozen=True)
class QuotientData:
    n: int           # order of the cyclic group
    abar1: int       # ramification index along the image of the second core circle
    abar2: int       # ramification index along the image of the first core circle
    base_order: int  # order of pi_1 of the underlying lens space


@dataclass(frozen=True)
class OrbiLens:
    """Orbi-lens space L(p, q; b1, b2): underlying lens space L(p, q) with
    cone-point isotropy Z/b1 and Z/b2 along the two Heegaard cores.

    ``q`` is reduced into ``[0, p)`` on construction.
    """

    p: int
    q: int
    b1: int = 1
    b2: int = 1

    def __post_init__(self):
        if self.p < 1 or self.b1 < 1 or self.b2 < 1:
            raise InvalidInput("p, b1, b2 must be positive")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidInput(f"gcd(p, q) = gcd({self.p}, {self.q}) != 1")
        if math.gcd(self.b1, self.b2) != 1:
            raise InvalidInput(f"gcd(b1, b2) = gcd({self.b1}, {self.b2}) != 1")
        object.__setattr__(self, "q", self.q % self.p)

    @classmethod
    def with_isotropy(cls, p: int, q: int, a: int) -> OrbiLens:
        """L(p, q; a), shorthand for L(p, q; 1, a)."""
        return cls(p, q, 1, a)

    def __str__(self):
        return f"L({self.p},{self.q};{self.b1},{self.b2})"


def quotient_data(params: CyclicActionParams) -> QuotientData:
    g = math.gcd(params.a1, params.a2)
    return QuotientData(
        n=math.lcm(params.a1, params.a2),
        abar1=params.a1 // g,
        abar2=params.a2 // g,
        base_order=g,
    )


def fundamental_group_order(lens: OrbiLens) -> int:
    """Order of the (cyclic) orbifold fundamental group, ``b1 * b2 * p``."""
    return lens.b1 * lens.b2 * lens.p


def unwrap_is_knot(w: int, lens: OrbiLens) -> bool:
    """Whether a winding-number-``w`` knot in L(p, q; a) lifts to a knot in S^3."""
    if lens.b1 != 1:
        raise InvalidInput("unwrap_is_knot expects a descriptor of the form L(p, q; 1, a)")
    if w < 1:
        raise InvalidInput("winding number must be positive")
    return math.gcd(w, lens.b2 * lens.p) == 1
