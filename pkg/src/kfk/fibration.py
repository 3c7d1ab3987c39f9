"""Fibrations of 1-bridge braid exteriors over the circle.

Given a 1-bridge braid ``(n, b, t)`` in a solid torus ``V`` and a boundary
curve ``C`` with ``[C] = q*mu_1 + p*lambda_1``, ``p >= 1`` and ``gcd(p, n) = 1``,
the homomorphism ``x -> pt - nq``, ``y -> pt - nq + p`` kills ``[C]``; Brown's
criterion on the exterior's relator then certifies that it is a fibration
whose fibre meets ``\\partial V`` in ``n`` curves parallel to ``C``.

Within this module a :class:`~kfk.slope.Slope` ``(p, q)`` stands for the curve
``q*mu_1 + p*lambda_1``: ``p`` is its winding number in ``V``.  With the
canonical sign ``p > 0``, the meridian is ``Slope(0, 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import braid as _braid
from .braid import BraidParams
from .brown import BrownVerdict, WeightHom, brown_criterion
from .errors import (
    FalsificationError,
    InvalidInput,
    MeridianSlope,
    NotAKnot,
    WindingNotCoprime,
    ZeroWeight,
)
from .slope import Slope


@dataclass(frozen=True)
class FibrationVerdict:
    fibred: bool
    boundary_components: int
    weight: WeightHom
    brown: BrownVerdict

    def to_dict(self) -> dict:
        return {
            "fibred": self.fibred,
            "boundary_components": self.boundary_components,
            "weight": {"wx": self.weight.wx, "wy": self.weight.wy},
            "brown": self.brown.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> FibrationVerdict:
        return cls(
            fibred=bool(d["fibred"]),
            boundary_components=d["boundary_components"],
            weight=WeightHom(**d["weight"]),
            brown=BrownVerdict.from_dict(d["brown"]),
        )


@dataclass(frozen=True)
class HomologyWeights:
    phi_mu1: int
    phi_lambda1: int
    phi_mu2: int
    phi_slope: int


@dataclass(frozen=True)
class H2Class:
    """``c1 * xi_1 + c2 * xi_2`` in H_2(M, dM), where
    ``d xi_1 = mu_1 - n mu_2`` and ``d xi_2 = n lambda_1 - lambda_2``."""

    c1: int
    c2: int


def _check(params: BraidParams, r: Slope) -> None:
    if not _braid.is_knot(params):
        raise NotAKnot(f"{params} does not close to a knot")
    if r.p == 0:
        raise MeridianSlope("the meridian of the solid torus is excluded")
    if math.gcd(r.p, params.n) != 1:
        raise WindingNotCoprime(f"gcd(p={r.p}, n={params.n}) != 1")


def weight_for_slope(params: BraidParams, r: Slope) -> WeightHom:
    _check(params, r)
    wx = r.p * params.t - params.n * r.q
    wy = wx + r.p
    if wx == 0 or wy == 0:
        raise ZeroWeight(f"phi = ({wx}, {wy}) for {params}, slope {r}")
    return WeightHom(wx, wy)


def homology_weights(params: BraidParams, r: Slope) -> HomologyWeights:
    """Values of the slope's homomorphism on the peripheral classes.

    Uses the relations ``[y x^-1] = mu_2``, ``lambda_1 + t mu_2 = [x]`` and
    ``mu_1 = n mu_2`` in H_1 of the exterior.
    """
    hom = weight_for_slope(params, r)
    phi_mu2 = hom.wy - hom.wx
    phi_lambda1 = hom.wx - params.t * phi_mu2
    phi_mu1 = params.n * phi_mu2
    return HomologyWeights(
        phi_mu1=phi_mu1,
        phi_lambda1=phi_lambda1,
        phi_mu2=phi_mu2,
        phi_slope=r.q * phi_mu1 + r.p * phi_lambda1,
    )


def fibers_over_slope(params: BraidParams, r: Slope) -> FibrationVerdict:
    """Run Brown's criterion for the fibration with boundary slope ``r``.

    Every admissible input is expected to fibre; a negative Brown verdict
    raises :class:`FalsificationError` carrying the verdict.
    """
    hom = weight_for_slope(params, r)
    verdict = brown_criterion(_braid.relator(params), hom)
    result = FibrationVerdict(
        fibred=verdict.kernel_fg,
        boundary_components=params.n,
        weight=hom,
        brown=verdict,
    )
    if not verdict.kernel_fg:
        raise FalsificationError(
            f"Brown's criterion fails for {params}, slope {r}", certificate=result
        )
    return result


def localization_violations(params: BraidParams, verdict: BrownVerdict) -> list[str]:
    """Check where the extrema sit when ``wx < 0 < wy``.

    The maxima must lie among positions ``1..n`` and the minima among
    ``n+2..2n+1``; within each of these blocks the values must be pairwise
    distinct mod ``n``.  Returns human-readable descriptions of any failures
    (empty when all hold).
    """
    n = params.n
    vals = verdict.prefix_values
    out = []
    if not set(verdict.max_positions) <= set(range(1, n + 1)):
        out.append(f"max positions {verdict.max_positions} outside 1..{n}")
    if not set(verdict.min_positions) <= set(range(n + 2, 2 * n + 2)):
        out.append(f"min positions {verdict.min_positions} outside {n + 2}..{2 * n + 1}")
    for lo, hi in ((1, n), (n + 2, 2 * n + 1)):
        residues = [vals[i - 1] % n for i in range(lo, hi + 1)]
        if len(set(residues)) != len(residues):
            out.append(f"values at {lo}..{hi} repeat mod {n}: {residues}")
    return out


def fibre_class(params: BraidParams, r: Slope) -> H2Class:
    _check(params, r)
    return H2Class(params.n * r.q, r.p)


def boundary_on_outer_torus(params: BraidParams, cls: H2Class) -> tuple[int, int]:
    """Image of ``cls`` in H_1 of the solid torus boundary, as
    ``(mu_1, lambda_1)`` coefficients: ``c1 mu_1 + n c2 lambda_1``."""
    return cls.c1, params.n * cls.c2


def approximate_fibre_classes(
    target: H2Class, n: int, m_max: int
) -> list[tuple[H2Class, Fraction]]:
    """Fibre classes ``(n q_m, p_m)`` with ``p_m = n m u v + 1``, ``q_m = m v^2``
    for ``m = 1..m_max``, where ``target = (u, v)``.

    The ratio ``n q_m / p_m`` tends to ``v / u``; each entry is paired with the
    exact error ``|n q_m / p_m - v / u|``, which equals ``|v| / (|u| |p_m|)``.
    Both ``gcd(p_m, q_m)`` and ``gcd(n, p_m)`` are 1, so each class comes from
    a fibration of any ``n``-strand 1-bridge braid exterior.
    """
    u, v = target.c1, target.c2
    if u == 0:
        raise InvalidInput("u = 0: the class is already a fibre class")
    if math.gcd(u, v) != 1:
        raise InvalidInput(f"target ({u}, {v}) is not primitive")
    if n < 2:
        raise InvalidInput("n must be >= 2")
    goal = Fraction(v, u)
    out = []
    for m in range(1, m_max + 1):
        p_m = n * m * v * u + 1
        q_m = m * v * v
        out.append((H2Class(n * q_m, p_m), abs(Fraction(n * q_m, p_m) - goal)))
    return out
