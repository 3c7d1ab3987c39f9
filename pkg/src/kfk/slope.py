"""Slopes on a torus and their intersection arithmetic.

A slope is a primitive class ``p*mu + q*lambda`` in the first homology of a
torus, taken up to sign.  We store the representative with ``p > 0``, or
``(0, 1)`` when ``p == 0``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import networkx as nx

from .errors import InvalidInput


class Sign(enum.IntEnum):
    PLUS = 1
    MINUS = -1


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if math.gcd(self.p, self.q) != 1:
            raise InvalidInput(f"slope ({self.p}, {self.q}) is not primitive")
        if not (self.p > 0 or (self.p == 0 and self.q == 1)):
            raise InvalidInput(f"slope ({self.p}, {self.q}) is not in canonical form")

    @classmethod
    def canonical(cls, p: int, q: int) -> Slope:
        """Canonical representative of the class ``±(p, q)``."""
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        return cls(p, q)

    def __str__(self):
        return f"({self.p},{self.q})"


MERIDIAN = Slope(1, 0)
LONGITUDE = Slope(0, 1)


def distance(r1: Slope, r2: Slope) -> int:
    """Geometric intersection number ``|p1*q2 - p2*q1|``."""
    return abs(r1.p * r2.q - r2.p * r1.q)


def involution_image(r: Slope, eps: Sign | int) -> Slope:
    """Image of ``r`` under a map sending mu to ``-eps*mu`` and lambda to ``eps*lambda``."""
    eps = Sign(eps)
    return Slope.canonical(-eps * r.p, eps * r.q)


def involution_distance(r: Slope) -> int:
    return 2 * abs(r.p * r.q)


def canonical_slopes(bound: int) -> list[Slope]:
    """All canonical slopes with ``|p|, |q| <= bound``."""
    out = [LONGITUDE] if bound >= 1 else []
    for p in range(1, bound + 1):
        out.extend(Slope(p, q) for q in range(-bound, bound + 1) if math.gcd(p, q) == 1)
    return out


def _simplicity(r: Slope):
    return (abs(r.p) + abs(r.q), r.p, -r.q)


def max_close_clique(bound: int) -> tuple[int, list[Slope]]:
    """Largest family of slopes in the box ``|p|, |q| <= bound`` that are pairwise
    at distance at most one.

    Returns the size and a witness.  Among maximum families the witness is the
    one whose members, listed simplest first, compare smallest.
    """
    if bound < 1:
        raise InvalidInput("bound must be >= 1")
    slopes = canonical_slopes(bound)
    graph = nx.Graph()
    graph.add_nodes_from(slopes)
    graph.add_edges_from(
        (r, s) for r, s in itertools.combinations(slopes, 2) if distance(r, s) <= 1
    )
    cliques = [sorted(c, key=_simplicity) for c in nx.find_cliques(graph)]
    size = max(len(c) for c in cliques)
    witness = min(
        (c for c in cliques if len(c) == size),
        key=lambda c: [_simplicity(r) for r in c],
    )
    return size, witness
