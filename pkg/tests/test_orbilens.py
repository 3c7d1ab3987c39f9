import math

import pytest

from kfk.errors import InvalidInput
from kfk.orbilens import (
    CyclicActionParams, OrbiLens, QuotientData, fundamental_group_order,
    quotient_data, unwrap_is_knot,
)


@pytest.mark.parametrize("a1, a2, expected", [
    (2, 3, QuotientData(6, 2, 3, 1)),
    (1, 1, QuotientData(1, 1, 1, 1)),
    (4, 6, QuotientData(12, 2, 3, 2)),
])
def test_quotient_examples(a1, a2, expected):
    assert quotient_data(CyclicActionParams(a1, a2)) == expected


def test_quotient_identities_grid():
    for a1 in range(1, 51):
        for a2 in range(1, 51):
            d = quotient_data(CyclicActionParams(a1, a2))
            assert d.abar1 * d.base_order == a1
            assert d.abar2 * d.base_order == a2
            assert math.gcd(d.abar1, d.abar2) == 1
            assert d.n == d.abar1 * d.abar2 * d.base_order
            # lcm by brute force
            assert d.n == min(k for k in range(1, a1 * a2 + 1) if k % a1 == 0 and k % a2 == 0)


def test_action_angle_validation():
    CyclicActionParams(5, 3, alpha1=2, alpha2=2)
    with pytest.raises(InvalidInput):
        CyclicActionParams(4, 3, alpha1=2)


@pytest.mark.parametrize("lens, order", [
    (OrbiLens(5, 2, 1, 1), 5),
    (OrbiLens(5, 2, 1, 3), 15),
    (OrbiLens(1, 0, 2, 3), 6),
])
def test_fundamental_group_order(lens, order):
    assert fundamental_group_order(lens) == order


def test_q_reduced_mod_p():
    assert OrbiLens(5, 7).q == 2
    assert OrbiLens(5, -3).q == 2
    assert OrbiLens(1, 4).q == 0
    assert OrbiLens(5, 7) == OrbiLens(5, 2)
    with pytest.raises(InvalidInput):
        OrbiLens(4, 2)
    with pytest.raises(InvalidInput):
        OrbiLens(5, 2, 2, 4)


def test_unwrap():
    lens = OrbiLens.with_isotropy(5, 2, 2)
    assert unwrap_is_knot(3, lens)
    assert not unwrap_is_knot(2, lens)
    assert not unwrap_is_knot(5, lens)
    assert unwrap_is_knot(1, OrbiLens(7, 3, 1, 11))
    with pytest.raises(InvalidInput):
        unwrap_is_knot(1, OrbiLens(5, 2, 2, 3))
