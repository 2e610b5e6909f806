from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from mealygrowth import (
    IntSequence,
    PowerSeries,
    SeriesError,
    a5_second_difference_series,
    a6_growth_series,
    a6_rational,
    a6_semigroup_rational,
    a6_semigroup_series,
    check_delta_gamma,
    expand_a5_gamma,
    expand_rational,
    partitions_pow2,
)

A6_GROWTH = [0, 3, 7, 13, 21, 32, 46, 65, 89, 121, 161, 214, 280, 367, 475, 617]


def test_truncation():
    s = PowerSeries([1, 2, 3], degree=5)
    assert s.coefficients == (1, 2, 3, 0, 0, 0)
    assert PowerSeries([1, 2, 3, 4], degree=1).coefficients == (1, 2)
    with pytest.raises(IndexError):
        s[6]
    with pytest.raises(SeriesError):
        PowerSeries([], degree=-1)


def test_arithmetic_truncates_to_smaller_degree():
    a = PowerSeries([1, 1, 1, 1])
    b = PowerSeries([1, -1])
    assert (a * b).coefficients == (1, 0)
    assert (a + b).degree == 1
    assert (a - 1).coefficients == (0, 1, 1, 1)
    assert (2 * a).coefficients == (2, 2, 2, 2)
    assert (a / 2)[0] == Fraction(1, 2)


def test_inverse():
    one_minus_x = PowerSeries([1, -1], degree=6)
    assert one_minus_x.inverse() == PowerSeries([1] * 7)
    assert (1 / one_minus_x) == PowerSeries([1] * 7)
    with pytest.raises(SeriesError):
        PowerSeries([0, 1]).inverse()
    with pytest.raises(SeriesError):
        PowerSeries([1, 1]) / 0


@given(coefficients=st.lists(st.integers(-5, 5), min_size=2, max_size=10), head=st.sampled_from([1, -1, 2]))
@settings(max_examples=80, deadline=None)
def test_inverse_is_a_right_inverse(coefficients, head):
    s = PowerSeries([head] + coefficients)
    assert s * s.inverse() == PowerSeries.one(s.degree)


def test_shift_cumulative_difference():
    s = PowerSeries([1, 2, 3])
    assert s.shift(1).coefficients == (0, 1, 2)
    assert s.cumulative().coefficients == (1, 3, 6)
    assert s.cumulative().difference() == s
    assert PowerSeries.monomial(2, 3, 5).coefficients == (0, 0, 5, 0)


RATIONALS = [
    ([1], [1, -1], 5, [1, 1, 1, 1, 1, 1]),
    ([1], [1, -1, -1], 6, [1, 1, 2, 3, 5, 8, 13]),
    ([0, 1], [1, -2], 4, [0, 1, 2, 4, 8]),
    ([1, 1], [1], 3, [1, 1, 0, 0]),
]


@pytest.mark.parametrize("numer, denom, N, expected", RATIONALS)
def test_expand_rational(numer, denom, N, expected):
    assert expand_rational(numer, denom, N).integer_coefficients() == tuple(expected)


def test_expand_rational_errors():
    with pytest.raises(SeriesError):
        expand_rational([1], [0, 1], 3)
    with pytest.raises(SeriesError):
        expand_rational([1], [1], -1)
    with pytest.raises(SeriesError):
        expand_rational([1], [2], 2).integer_coefficients()


def test_a5_series():
    assert expand_a5_gamma(4).integer_coefficients() == (1, 3, 6, 11, 18)
    assert a5_second_difference_series(7).integer_coefficients() == (1, 1, 1, 2, 2, 3, 3, 5)
    with pytest.raises(SeriesError):
        expand_a5_gamma(-1)


def test_partitions_match_second_difference():
    second = a5_second_difference_series(40)
    assert [partitions_pow2(n) for n in range(1, 8)] == [1, 1, 2, 2, 3, 3, 5]
    assert all(partitions_pow2(n) == second[n] for n in range(1, 41))
    assert partitions_pow2(0) == 1
    with pytest.raises(SeriesError):
        partitions_pow2(-1)


def test_a6_series():
    N = len(A6_GROWTH) - 1
    growth = a6_growth_series(N)
    assert growth.integer_coefficients() == tuple(A6_GROWTH)
    assert expand_rational(*a6_rational(), N) == growth
    semigroup = a6_semigroup_series(N)
    assert semigroup.integer_coefficients() == tuple(v + 1 for v in A6_GROWTH)
    assert expand_rational(*a6_semigroup_rational(), N) == semigroup


def test_check_delta_gamma():
    gamma = PowerSeries([1, 3, 6, 10])
    assert check_delta_gamma(gamma, IntSequence([1, 2, 3, 4], start=0))
    assert check_delta_gamma(gamma, IntSequence([2, 3], start=1))
    assert not check_delta_gamma(gamma, IntSequence([2, 4], start=1))
    assert not check_delta_gamma(gamma, IntSequence([5], start=9))


def test_to_sequence_and_csv():
    s = PowerSeries([1, 3, 6])
    assert s.to_sequence(1) == IntSequence([3, 6], start=1)
    assert s.to_csv() == "n,coefficient\n0,1\n1,3\n2,6\n"
    with pytest.raises(SeriesError):
        (s / 4).to_sequence()
