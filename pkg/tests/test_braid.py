import pytest

from kfk.braid import BraidParams, Perm, is_knot, knot_params, permutation, relator, strand_word
from kfk.errors import InvalidInput, NotAKnot
from kfk.words import Word

import oracles

FIGURE_1 = "yxyxxyxxYXYXXYXX"
ALL_PARAMS = [(n, b, t) for n in range(2, 13) for b in range(1, n) for t in range(n)]


def test_permutation_examples():
    assert permutation(BraidParams(7, 2, 4)).images == (5, 6, 4, 0, 1, 2, 3)
    assert permutation(BraidParams(2, 1, 1)).images == (0, 1)
    assert permutation(BraidParams(3, 1, 1)).images == (2, 1, 0)


def test_fintushel_stern_cycle():
    assert permutation(BraidParams(7, 2, 4)).cycles() == [(0, 5, 2, 4, 1, 6, 3)]


@pytest.mark.parametrize("n, b, t", ALL_PARAMS)
def test_permutation_matches_braid_word(n, b, t):
    assert list(permutation(BraidParams(n, b, t)).images) == oracles.braid_permutation(n, b, t)


def test_is_knot_examples():
    assert is_knot(BraidParams(7, 2, 4))
    assert not is_knot(BraidParams(2, 1, 1))
    assert not is_knot(BraidParams(3, 1, 1))


def test_is_knot_agrees_with_cycle_type():
    for n, b, t in ALL_PARAMS:
        expected = oracles.cycle_lengths(oracles.braid_permutation(n, b, t)) == [n]
        assert is_knot(BraidParams(n, b, t)) == expected


def test_knot_params_order():
    ks = [(k.n, k.b, k.t) for k in knot_params(12)]
    assert ks == sorted(ks)
    assert len(ks) == 177


def test_params_validation():
    assert BraidParams(7, 2, 11).t == 4
    assert BraidParams(7, 2, -3).t == 4
    for bad in [(1, 1, 0), (5, 0, 0), (5, 5, 0)]:
        with pytest.raises(InvalidInput):
            BraidParams(*bad)
    with pytest.raises(InvalidInput):
        Perm((0, 0, 1))


def test_strand_word_examples():
    assert str(strand_word(BraidParams(7, 2, 4))) == "xyxxyx"
    assert str(strand_word(BraidParams(3, 2, 1))) == "yy"
    for k in knot_params(12):
        if k.b == k.n - 1:
            assert set(str(strand_word(k))) == {"y"}


def test_strand_word_rejects_links():
    with pytest.raises(NotAKnot):
        strand_word(BraidParams(2, 1, 1))
    with pytest.raises(NotAKnot):
        relator(BraidParams(3, 1, 1))


def test_relator_figure_1():
    assert str(relator(BraidParams(7, 2, 4))) == FIGURE_1
    assert relator(BraidParams(7, 2, 4)) == Word.parse(
        "y x y x x y x x y^-1x^-1y^-1x^-1x^-1y^-1x^-1x^-1"
    )


def test_relator_properties_all_knots():
    for k in knot_params(12):
        w = strand_word(k)
        assert str(w) == oracles.strand_letters(k.n, k.b, k.t)
        r = relator(k)
        assert len(r) == 2 * k.n + 2
        assert r.is_cyclically_reduced()
        assert r.exponent_sums() == (0, 0)


def test_orbit_misses_only_b_exactly_for_knots():
    for n, b, t in ALL_PARAMS:
        pi = permutation(BraidParams(n, b, t))
        orbit = set()
        a = b
        for _ in range(n - 1):
            a = pi(a)
            orbit.add(a)
        assert (orbit == set(range(n)) - {b}) == is_knot(BraidParams(n, b, t))
