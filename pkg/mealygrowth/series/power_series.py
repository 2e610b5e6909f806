# -*- coding: utf-8 -*-
#
# Copyright (c) 2026 The mealygrowth developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#

"""
Truncated formal power series with exact rational coefficients.
"""

__all__ = [
    "PowerSeries",
    "expand_rational",
    "expand_a5_gamma",
    "a5_second_difference_series",
    "partitions_pow2",
    "check_delta_gamma",
    "a6_growth_series",
    "a6_semigroup_series",
    "a6_rational",
    "a6_semigroup_rational",
]

import logging
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

from ..exceptions import SeriesError
from .sequences import IntSequence

_log = logging.getLogger(__name__)

Coefficient = Union[int, Fraction]


class PowerSeries:
    """
    ``c_0 + c_1 X + ... + c_N X^N``, everything above ``X^N`` is unknown.

    Binary operations truncate to the smaller degree of their operands.
    """

    def __init__(self, coefficients: Iterable[Coefficient], degree: int = None):
        coefficients = [Fraction(c) for c in coefficients]
        if degree is None:
            degree = len(coefficients) - 1
        if degree < 0:
            raise SeriesError("a power series needs a non-negative truncation degree")
        coefficients = coefficients[: degree + 1]
        coefficients.extend(Fraction(0) for _ in range(degree + 1 - len(coefficients)))
        self._coefficients: Tuple[Fraction, ...] = tuple(coefficients)

    @classmethod
    def one(cls, degree: int) -> "PowerSeries":
        return cls([1], degree)

    @classmethod
    def monomial(cls, power: int, degree: int, coefficient: Coefficient = 1) -> "PowerSeries":
        coefficients = [0] * (degree + 1)
        if power <= degree:
            coefficients[power] = coefficient
        return cls(coefficients, degree)

    @property
    def degree(self) -> int:
        return len(self._coefficients) - 1

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.degree:
            raise IndexError(f"coefficient {n} is beyond the truncation degree {self.degree}")
        return self._coefficients[n]

    def __len__(self):
        return len(self._coefficients)

    def __iter__(self):
        return iter(self._coefficients)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Rational)):
            return PowerSeries([other], self.degree)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        degree = min(self.degree, other.degree)
        return PowerSeries((a + b for a, b in zip(self, other)), degree)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries((-c for c in self), self.degree)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return PowerSeries((c * other for c in self), self.degree)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        degree = min(self.degree, other.degree)
        coefficients = [Fraction(0)] * (degree + 1)
        for i, a in enumerate(self._coefficients[: degree + 1]):
            if a:
                for j, b in enumerate(other._coefficients[: degree + 1 - i]):
                    coefficients[i + j] += a * b
        return PowerSeries(coefficients, degree)

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries":
        if self._coefficients[0] == 0:
            raise SeriesError("a series with zero constant term has no inverse")
        head = self._coefficients[0]
        inverse = [1 / head]
        for n in range(1, self.degree + 1):
            total = sum(self._coefficients[i] * inverse[n - i] for i in range(1, n + 1))
            inverse.append(-total / head)
        return PowerSeries(inverse, self.degree)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise SeriesError("division by zero")
            return PowerSeries((c / other for c in self), self.degree)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def shift(self, k: int) -> "PowerSeries":
        """
        Multiply by ``X^k`` keeping the truncation degree
        """
        return PowerSeries([0] * k + list(self._coefficients), self.degree)

    def cumulative(self) -> "PowerSeries":
        """
        Multiply by ``1/(1 - X)``
        """
        total, coefficients = Fraction(0), []
        for c in self._coefficients:
            total += c
            coefficients.append(total)
        return PowerSeries(coefficients, self.degree)

    def difference(self) -> "PowerSeries":
        """
        Multiply by ``1 - X``
        """
        previous = (Fraction(0),) + self._coefficients[:-1]
        return PowerSeries((c - p for c, p in zip(self._coefficients, previous)), self.degree)

    def integer_coefficients(self) -> Tuple[int, ...]:
        if any(c.denominator != 1 for c in self._coefficients):
            raise SeriesError("the series has non-integer coefficients")
        return tuple(int(c) for c in self._coefficients)

    def to_sequence(self, start: int = 0) -> IntSequence:
        return IntSequence(self.integer_coefficients()[start:], start=start)

    def to_csv(self) -> str:
        lines = ["n,coefficient"]
        lines.extend(f"{n},{c}" for n, c in enumerate(self._coefficients))
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self._coefficients[:8])
        more = ", ..." if self.degree >= 8 else ""
        return f"{self.__class__.__name__}([{shown}{more}], degree={self.degree})"


def expand_rational(numer: Sequence[int], denom: Sequence[int], N: int) -> PowerSeries:
    """
    ``numer(X) / denom(X)`` up to ``X^N``, polynomials are given by their ascending coefficients
    """
    if N < 0:
        raise SeriesError(f"truncation degree must be non-negative, got {N}")
    if not denom or denom[0] == 0:
        raise SeriesError("the denominator has a zero constant term")
    head = Fraction(denom[0])
    coefficients: List[Fraction] = []
    for n in range(N + 1):
        total = Fraction(numer[n]) if n < len(numer) else Fraction(0)
        for i in range(1, min(n, len(denom) - 1) + 1):
            total -= denom[i] * coefficients[n - i]
        coefficients.append(total / head)
    return PowerSeries(coefficients, N)


def _geometric_tail(step: int, N: int) -> PowerSeries:
    """``X^step / (1 - X^step)``"""
    return PowerSeries([1 if n and n % step == 0 else 0 for n in range(N + 1)], N)


def a5_second_difference_series(N: int) -> PowerSeries:
    """
    ``1 + X/(1-X) (1 + X^2/(1-X^2) (1 + X^4/(1-X^4) (...)))`` up to ``X^N``.

    The nest is evaluated from the innermost level ``L`` with ``2^L > N``, every deeper level
    only changes coefficients above ``X^N``.
    """
    if N < 0:
        raise SeriesError(f"truncation degree must be non-negative, got {N}")
    depth = 0
    while 2 ** depth <= N:
        depth += 1
    inner = PowerSeries.one(N)
    for level in reversed(range(depth)):
        inner = 1 + _geometric_tail(2 ** level, N) * inner
    return inner


def expand_a5_gamma(N: int) -> PowerSeries:
    """
    Growth series of the monoid with the sequential binary partition second difference,
    the nest of :func:`a5_second_difference_series` times ``1/(1-X)^2``
    """
    return a5_second_difference_series(N).cumulative().cumulative()


@lru_cache(maxsize=None)
def partitions_pow2(n: int) -> int:
    """
    Number of ways to write ``n = p_0 + 2 p_1 + 4 p_2 + ... + 2^k p_k`` with ``k >= 0`` and
    every ``p_i >= 1``.  ``partitions_pow2(0)`` is 1.
    """
    if n < 0:
        raise SeriesError(f"partitions of a negative number: {n}")
    if n == 0:
        return 1
    total, k = 0, 0
    while 2 ** (k + 1) - 1 <= n:
        rest = n - (2 ** (k + 1) - 1)
        ways = [1] + [0] * rest
        for i in range(k + 1):
            part = 2 ** i
            for v in range(part, rest + 1):
                ways[v] += ways[v - part]
        total += ways[rest]
        k += 1
    return total


def check_delta_gamma(gamma_series: PowerSeries, delta: IntSequence) -> bool:
    """
    ``True`` if ``(1 - X) gamma_series`` has the coefficients of `delta` wherever both are known
    """
    word_series = gamma_series.difference()
    compared = 0
    for n, value in delta.items():
        if n > word_series.degree:
            break
        if word_series[n] != value:
            _log.debug("word series differs at %d: %s != %s", n, word_series[n], value)
            return False
        compared += 1
    return compared > 0


def _fibonacci_kernel(N: int) -> PowerSeries:
    """``(1 + X + X^3) / (1 - X^2 - X^4)``"""
    return PowerSeries([1, 1, 0, 1], N) / PowerSeries([1, 0, -1, 0, -1], N)


def a6_growth_series(N: int) -> PowerSeries:
    """
    Growth series of the three-state automaton with Fibonacci growth,
    ``(2X - 1 + (1 + X + X^3) / (1 - X^2 - X^4)) / (1 - X)^2``
    """
    return (PowerSeries([-1, 2], N) + _fibonacci_kernel(N)).cumulative().cumulative()


def a6_semigroup_series(N: int) -> PowerSeries:
    """
    Cumulative growth series of the monoid of the same automaton, the identity counted at length 0
    """
    return (PowerSeries.monomial(1, N) + _fibonacci_kernel(N)).cumulative().cumulative()


def a6_rational() -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Numerator and denominator of :func:`a6_growth_series` as one fraction of integer polynomials
    """
    return (0, 3, 1, -1, 1, -2), (1, -2, 0, 2, -2, 2, -1)


def a6_semigroup_rational() -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    return (1, 2, 0, 0, 0, -1), (1, -2, 0, 2, -2, 2, -1)
