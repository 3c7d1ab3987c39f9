"""1-bridge braids in a solid torus and the one-relator presentation of their
exteriors.

A 1-bridge braid is determined by its braid index ``n``, bridge index ``b`` and
twisting number ``t``; its braid word is ``sigma_{b-1} ... sigma_0 delta^t``
where ``delta = sigma_{n-2} ... sigma_0``.  The exterior in the solid torus has
fundamental group ``<x, y | y w x y^-1 w^-1 x^-1>`` with ``w`` read off from
the orbit of strand ``b`` under the braid permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput, NotAKnot
from .words import Word


@dataclass(frozen=True)
class BraidParams:
    n: int
    b: int
    t: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInput(f"braid index n={self.n} must be >= 2")
        if not 1 <= self.b <= self.n - 1:
            raise InvalidInput(f"bridge index b={self.b} must lie in [1, n-1]")
        # delta^n is central, so only t mod n matters
        object.__setattr__(self, "t", self.t % self.n)


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InvalidInput(f"{self.images} is not a permutation")

    def __call__(self, a: int) -> int:
        return self.images[a]

    def __len__(self):
        return len(self.images)

    def orbit(self, a: int) -> list[int]:
        """``[pi(a), pi^2(a), ...]`` up to and including the return to ``a``."""
        out = [self.images[a]]
        while out[-1] != a:
            out.append(self.images[out[-1]])
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for a in range(len(self.images)):
            if a in seen:
                continue
            cyc = [a] + self.orbit(a)[:-1]
            seen.update(cyc)
            out.append(tuple(cyc))
        return out

    def is_full_cycle(self) -> bool:
        return len(self.orbit(0)) == len(self.images)


def permutation(params: BraidParams) -> Perm:
    n, b, t = params.n, params.b, params.t
    images = []
    for a in range(n):
        if a < b:
            images.append((a + t + 1) % n)
        elif a == b:
            images.append(t)
        else:
            images.append((a + t) % n)
    return Perm(tuple(images))


def is_knot(params: BraidParams) -> bool:
    return permutation(params).is_full_cycle()


def knot_params(max_n: int, min_n: int = 2):
    """Yield every ``BraidParams`` with ``min_n <= n <= max_n`` whose closure is a
    knot, in lexicographic order of ``(n, b, t)``."""
    for n in range(max(min_n, 2), max_n + 1):
        for b in range(1, n):
            for t in range(n):
                params = BraidParams(n, b, t)
                if is_knot(params):
                    yield params


def _require_knot(params: BraidParams) -> Perm:
    pi = permutation(params)
    if not pi.is_full_cycle():
        raise NotAKnot(f"{params} closes to a link with cycles {pi.cycles()}")
    return pi


def strand_word(params: BraidParams) -> Word:
    """``w = w_1 ... w_{n-1}`` with ``w_j = y`` if ``pi^j(b) < b`` and ``x`` otherwise."""
    pi = _require_knot(params)
    orbit = pi.orbit(params.b)[:-1]
    return Word("".join("y" if a < params.b else "x" for a in orbit))


def relator(params: BraidParams) -> Word:
    """The relator ``y w x y^-1 w^-1 x^-1`` of the exterior's fundamental group."""
    w = strand_word(params)
    return Word("y") + w + Word("xY") + w.inverse() + Word("X")
