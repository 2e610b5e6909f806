from fractions import Fraction

from mealygrowth import (
    ExponentialFit,
    IntSequence,
    builtin_closed_form,
    detect_composite,
    fit_eventually_exponential,
    fit_eventually_polynomial,
    order_compare,
)


def _seq(f, start=1, stop=31):
    return IntSequence((f(n) for n in range(start, stop)), start=start)


def test_fit_polynomial():
    fit = fit_eventually_polynomial(_seq(lambda n: n * n + 1, stop=11), 3)
    assert fit.coefficients == (1, 0, 1)
    assert fit.degree == 2
    assert fit.threshold == 1
    assert fit(5) == 26


def test_fit_polynomial_with_irregular_head():
    fit = fit_eventually_polynomial(IntSequence([5, 0, 2, 4, 6, 8, 10]), 3)
    assert fit.coefficients == (-2, 2)
    assert fit.threshold == 1


def test_fit_polynomial_needs_enough_values():
    assert fit_eventually_polynomial(_seq(lambda n: n, stop=5), 3) is None
    assert fit_eventually_polynomial(_seq(lambda n: 2 ** n, stop=20), 3) is None


def test_fit_exponential():
    fit = fit_eventually_exponential(_seq(lambda n: 2 ** n - 1, stop=9))
    assert fit == ExponentialFit(Fraction(1), Fraction(2), -1, 1)
    assert fit(10) == 1023
    assert fit_eventually_exponential(_seq(lambda n: 3 * n)) is None


def test_composite_a3():
    verdict = detect_composite(builtin_closed_form("a3").sequence(1, 41))
    assert verdict
    assert verdict.k == 2
    assert verdict.witness == (0, 1)
    assert verdict.forms[0].coefficients == (0, 4)
    assert verdict.forms[1].coefficients == (1, 5)
    assert "k=2" in str(verdict)


def test_composite_a1_rebuilds_closed_form():
    data = builtin_closed_form("a1").sequence(1, 31)
    verdict = detect_composite(data)
    assert verdict.composite
    scales = [form.scale for form in verdict.forms]
    assert scales == [Fraction(23, 4), Fraction(8)]
    assert verdict.closed_form.sequence(1, 31) == data
    assert verdict.closed_form.exceptions() == {1: 3, 2: 8, 3: 14}


def test_not_composite():
    verdict = detect_composite(_seq(lambda n: n * n))
    assert not verdict
    assert verdict.reason.startswith("the whole sequence follows")
    assert not detect_composite(IntSequence([5] * 10))


def test_order_compare():
    linear = _seq(lambda n: n)
    assert order_compare(linear, _seq(lambda n: n * n), c2max=1).relation == "≼"
    assert order_compare(_seq(lambda n: n * n), linear, c2max=1).relation == "≽"
    verdict = order_compare(_seq(lambda n: 2 * n), linear)
    assert verdict.relation == "equivalent"
    assert verdict.below == (2, 1, 1)


def test_order_compare_incomparable():
    s1 = _seq(lambda n: 1 if n % 2 == 0 else 100)
    s2 = _seq(lambda n: 100 if n % 2 == 0 else 1)
    verdict = order_compare(s1, s2, c1max=1, c2max=1)
    assert verdict.relation == "incomparable-within-bounds"
    assert verdict.below is None and verdict.above is None
    assert verdict.bounds == (1, 1, 31)
