from fractions import Fraction
import math

import pytest

from kfk import braid as braid_mod
from kfk.braid import BraidParams, knot_params
from kfk.errors import (
    FalsificationError, InvalidInput, MeridianSlope, NotAKnot, WindingNotCoprime, ZeroWeight,
)
from kfk.fibration import (
    FibrationVerdict, H2Class, HomologyWeights, WeightHom, approximate_fibre_classes,
    boundary_on_outer_torus, fibers_over_slope, fibre_class, homology_weights,
    localization_violations, weight_for_slope,
)
from kfk.slope import Slope
from kfk.sweep import admissible_slopes
from kfk.words import Word

FS = BraidParams(7, 2, 4)


@pytest.mark.parametrize("r, expected", [
    (Slope(3, 2), WeightHom(-2, 1)),
    (Slope(1, 0), WeightHom(4, 5)),
    (Slope(2, 1), WeightHom(1, 3)),
])
def test_weight_examples(r, expected):
    assert weight_for_slope(FS, r) == expected


def test_weight_errors():
    with pytest.raises(MeridianSlope):
        weight_for_slope(FS, Slope(0, 1))
    with pytest.raises(WindingNotCoprime):
        weight_for_slope(FS, Slope(7, 1))
    with pytest.raises(NotAKnot):
        weight_for_slope(BraidParams(3, 1, 1), Slope(1, 0))
    with pytest.raises(ZeroWeight):
        weight_for_slope(BraidParams(3, 2, 0), Slope(1, 0))


def test_zero_weight_only_for_untwisted_full_bridge():
    # phi(x) = 0 forces p = 1, t = n q; phi(y) = 0 would need t = n - 1, which is never a knot
    hits = []
    for k in knot_params(12):
        for r in admissible_slopes(k.n, 15):
            try:
                weight_for_slope(k, r)
            except ZeroWeight:
                hits.append((k.n, k.b, k.t, r.p, r.q))
    assert hits == [(n, n - 1, 0, 1, 0) for n in range(2, 13)]


def test_homology_examples():
    assert homology_weights(FS, Slope(3, 2)) == HomologyWeights(21, -14, 3, 0)
    assert homology_weights(FS, Slope(1, 0)) == HomologyWeights(7, 0, 1, 0)


def test_homology_relations_all():
    for k in knot_params(9):
        for r in admissible_slopes(k.n, 6):
            try:
                h = homology_weights(k, r)
            except ZeroWeight:
                continue
            assert h.phi_mu2 == r.p
            assert h.phi_lambda1 == -k.n * r.q
            assert h.phi_mu1 == k.n * r.p
            assert h.phi_slope == 0
            # phi is surjective: gcd of generator weights is 1
            hom = weight_for_slope(k, r)
            assert math.gcd(hom.wx, hom.wy) == 1


def test_fibres_examples():
    v = fibers_over_slope(FS, Slope(3, 2))
    assert v.fibred and v.boundary_components == 7
    assert v.brown.max_positions == (1,) and v.brown.min_positions == (9,)
    v = fibers_over_slope(FS, Slope(1, 0))
    assert v.fibred and v.weight == WeightHom(4, 5)
    with pytest.raises(WindingNotCoprime):
        fibers_over_slope(FS, Slope(7, 1))


def test_verdict_roundtrip():
    v = fibers_over_slope(FS, Slope(3, 2))
    assert FibrationVerdict.from_dict(v.to_dict()) == v


def test_falsification_is_raised(monkeypatch):
    monkeypatch.setattr(braid_mod, "relator", lambda params: Word("xyXYxyXY"))
    with pytest.raises(FalsificationError) as info:
        fibers_over_slope(BraidParams(2, 1, 0), Slope(1, -1))
    assert info.value.certificate.brown.max_positions == (2, 6)


def test_localization_on_figure_1():
    v = fibers_over_slope(FS, Slope(3, 2))
    assert localization_violations(FS, v.brown) == []


def test_localization_detects_bad_sequence():
    good = fibers_over_slope(FS, Slope(3, 2)).brown
    from dataclasses import replace
    bad = replace(good, max_positions=(9,), min_positions=(1,))
    assert len(localization_violations(FS, bad)) == 2


@pytest.mark.parametrize("r, expected", [
    (Slope(3, 2), H2Class(14, 3)),
    (Slope(1, 0), H2Class(0, 1)),
    (Slope(2, 1), H2Class(7, 2)),
])
def test_fibre_class_examples(r, expected):
    assert fibre_class(FS, r) == expected


def test_fibre_class_boundary_consistency():
    for k in knot_params(8):
        for r in admissible_slopes(k.n, 5):
            try:
                h = homology_weights(k, r)
            except ZeroWeight:
                continue
            mu, lam = boundary_on_outer_torus(k, fibre_class(k, r))
            # the fibre meets the outer torus in n copies of q mu_1 + p lambda_1
            assert (mu, lam) == (k.n * r.q, k.n * r.p)
            assert mu * h.phi_mu1 + lam * h.phi_lambda1 == 0


def test_cone_examples():
    seq = approximate_fibre_classes(H2Class(1, 1), 7, 100)
    assert seq[0] == (H2Class(7, 8), Fraction(1, 8))
    assert seq[99][1] == Fraction(1, 701)
    (cls, err), = approximate_fibre_classes(H2Class(2, 3), 5, 1)
    assert cls == H2Class(45, 31) and err == Fraction(3, 62)


def test_cone_negative_ratio():
    seq = approximate_fibre_classes(H2Class(3, -2), 5, 20)
    errs = [e for _, e in seq]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    for m, (cls, err) in enumerate(seq, start=1):
        assert err == Fraction(2, 3 * abs(cls.c2))
        assert math.gcd(cls.c2, 5) == 1


def test_cone_errors():
    with pytest.raises(InvalidInput):
        approximate_fibre_classes(H2Class(0, 1), 5, 3)
    with pytest.raises(InvalidInput):
        approximate_fibre_classes(H2Class(2, 4), 5, 3)
    with pytest.raises(InvalidInput):
        approximate_fibre_classes(H2Class(1, 1), 1, 3)


def test_cone_classes_fibre_on_a_braid():
    # each emitted class comes from an admissible slope (p_m, q_m) on 5-strand braids
    params = BraidParams(5, 2, 1)
    assert braid_mod.is_knot(params)
    for cls, _ in approximate_fibre_classes(H2Class(2, 3), 5, 5):
        p_m, q_m = cls.c2, cls.c1 // 5
        r = Slope.canonical(p_m, q_m)
        assert fibre_class(params, r) == H2Class(5 * r.q, r.p)
        assert fibers_over_slope(params, r).fibred
