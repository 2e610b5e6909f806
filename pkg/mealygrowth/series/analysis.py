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
Fitting eventual closed forms to sequences, composite detection and bounded growth order comparison.

Everything here works on finite data.  A fit means the data agrees with the form from some
index on, an order comparison means constants were found within the given bounds.
"""

__all__ = [
    "PolynomialFit",
    "ExponentialFit",
    "CompositeVerdict",
    "OrderVerdict",
    "fit_eventually_polynomial",
    "fit_eventually_exponential",
    "detect_composite",
    "order_compare",
]

import logging
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from ..const import EXPONENTIAL_OFFSETS, MIN_ORDER_POINTS
from .closed_forms import ClosedFormSpec, FormPart
from .sequences import IntSequence, finite_difference, split_residues

_log = logging.getLogger(__name__)


class PolynomialFit(NamedTuple):
    coefficients: Tuple[Fraction, ...]  #: ascending coefficients
    threshold: int  #: first index from which the sequence follows the polynomial

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def shape(self) -> tuple:
        return ("polynomial", self.coefficients)

    def __call__(self, x: int) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __str__(self):
        terms = [f"{c}*j^{i}" if i else f"{c}" for i, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) or "0"


class ExponentialFit(NamedTuple):
    scale: Fraction  #: leading constant
    ratio: Fraction  #: common ratio of consecutive terms
    offset: int  #: additive constant
    threshold: int  #: first index from which the sequence follows the form

    @property
    def shape(self) -> tuple:
        return ("exponential", self.scale, self.ratio, self.offset)

    def __call__(self, x: int) -> Fraction:
        return self.scale * self.ratio ** x + self.offset

    def __str__(self):
        return f"{self.scale}*{self.ratio}^j {'+' if self.offset >= 0 else '-'} {abs(self.offset)}"


Fit = Union[PolynomialFit, ExponentialFit]


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> Tuple[Fraction, ...]:
    coefficients = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denominator = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            shifted = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                shifted[t] -= c * xj
                shifted[t + 1] += c
            basis = shifted
            denominator *= xi - xj
        for t, c in enumerate(basis):
            coefficients[t] += yi * c / denominator
    return tuple(coefficients)


def _threshold(s: IntSequence, form) -> int:
    threshold = s.stop - 1
    while threshold - 1 >= s.start and form(threshold - 1) == s[threshold - 1]:
        threshold -= 1
    return threshold


def fit_eventually_polynomial(s: IntSequence, degmax: int) -> Optional[PolynomialFit]:
    """
    The polynomial of least degree ``d <= degmax`` the tail of `s` follows, with its
    ``(d+1)``-th difference zero on at least the last two indices, or ``None``
    """
    if len(s) < degmax + 4:
        _log.debug("%d values are too few to fit degree %d", len(s), degmax)
        return None
    for d in range(degmax + 1):
        diff = finite_difference(s, d + 1)
        trailing = 0
        for value in reversed(diff.values):
            if value:
                break
            trailing += 1
        if trailing < 2:
            continue
        xs = list(range(s.stop - d - 1, s.stop))
        fit = PolynomialFit(_interpolate(xs, [s[x] for x in xs]), 0)
        return fit._replace(threshold=_threshold(s, fit))
    return None


def fit_eventually_exponential(
    s: IntSequence, offsets: Sequence[int] = EXPONENTIAL_OFFSETS, min_ratios: int = 3
) -> Optional[ExponentialFit]:
    """
    ``scale * ratio ** j + offset`` followed by the tail of `s` for the first offset in
    `offsets` that gives at least `min_ratios` equal consecutive ratios.  A bounded heuristic,
    constant ratios of 0 and 1 are left to polynomial fits.
    """
    for offset in offsets:
        shifted = [v - offset for v in s.values]
        if len(shifted) < min_ratios + 1 or not shifted[-1] or not shifted[-2]:
            continue
        ratio = Fraction(shifted[-1], shifted[-2])
        if ratio in (0, 1):
            continue
        i = len(shifted) - 2
        while i > 0 and shifted[i - 1] and shifted[i - 1] * ratio == shifted[i]:
            i -= 1
        if len(shifted) - 1 - i < min_ratios:
            continue
        threshold = s.start + i
        scale = Fraction(shifted[i]) / ratio ** threshold
        return ExponentialFit(scale, ratio, offset, threshold)
    return None


def _fit(s: IntSequence, degmax: int) -> Optional[Fit]:
    return fit_eventually_polynomial(s, degmax) or fit_eventually_exponential(s)


class CompositeVerdict(NamedTuple):
    composite: bool  #: two residue classes follow different forms
    k: Optional[int] = None  #: modulus of the split
    forms: Tuple[Fit, ...] = ()  #: fitted form per residue
    witness: Optional[Tuple[int, int]] = None  #: two residues with different forms
    closed_form: Optional[ClosedFormSpec] = None  #: the fitted forms as a closed form
    reason: str = ""  #: why the sequence is not composite

    def __bool__(self):
        return self.composite

    def __str__(self):
        if not self.composite:
            return f"not composite: {self.reason}"
        parts = "; ".join(f"residue {i}: {form}" for i, form in enumerate(self.forms))
        return f"composite with k={self.k}: {parts}"


def _form_part(residue: int, k: int, form: Fit, s: IntSequence) -> FormPart:
    n0 = form.threshold * k + residue
    exceptions = {n: s[n] for n in range(s.start, min(n0, s.stop)) if n % k == residue}
    if isinstance(form, PolynomialFit):
        params = {"coefficients": list(form.coefficients)}
        return FormPart(residue, "polynomial", params, n0, exceptions)
    params = {"scale": form.scale, "ratio": form.ratio, "offset": form.offset}
    return FormPart(residue, "exponential", params, n0, exceptions)


def detect_composite(s: IntSequence, kmax: int = 4, degmax: int = 3) -> CompositeVerdict:
    """
    Smallest ``k`` in ``2..kmax`` whose residue parts each follow an eventual polynomial or
    exponential form, with at least two different forms, provided the whole sequence does not
    follow a single form
    """
    whole = _fit(s, degmax)
    if whole is not None:
        return CompositeVerdict(False, reason=f"the whole sequence follows {whole}")

    for k in range(2, kmax + 1):
        parts = split_residues(s, k)
        forms: List[Optional[Fit]] = [_fit(part, degmax) for part in parts]
        if any(form is None for form in forms):
            _log.debug("k=%d: some residue has no fit", k)
            continue
        witness = next(
            ((i, j) for i in range(k) for j in range(i + 1, k) if forms[i].shape != forms[j].shape), None
        )
        if witness is None:
            continue
        spec = ClosedFormSpec(k, [_form_part(i, k, form, s) for i, form in enumerate(forms)])
        return CompositeVerdict(True, k, tuple(forms), witness, spec)
    return CompositeVerdict(False, reason=f"no residue split up to k={kmax} fits")


class OrderVerdict(NamedTuple):
    relation: str  #: ``'≼'``, ``'≽'``, ``'equivalent'`` or ``'incomparable-within-bounds'``
    below: Optional[Tuple[int, int, int]]  #: ``(C1, C2, N0)`` with ``s1(n) <= C1 s2(C2 n)``
    above: Optional[Tuple[int, int, int]]  #: ``(C1, C2, N0)`` with ``s2(n) <= C1 s1(C2 n)``
    bounds: Tuple[int, int, int]  #: the ``(C1max, C2max, N0max)`` searched

    def __str__(self):
        return f"{self.relation} (below={self.below}, above={self.above}, bounds={self.bounds})"


def _dominated(a: IntSequence, b: IntSequence, c1max: int, c2max: int, n0max: int) -> Optional[Tuple[int, int, int]]:
    for c2 in range(1, c2max + 1):
        for c1 in range(1, c1max + 1):
            for n0 in range(max(a.start, 1), n0max + 1):
                points = [n for n in range(n0, a.stop) if c2 * n in b]
                if len(points) < MIN_ORDER_POINTS:
                    break
                if all(a[n] <= c1 * b[c2 * n] for n in points):
                    return c1, c2, n0
    return None


def order_compare(
    s1: IntSequence, s2: IntSequence, c1max: int = 8, c2max: int = 4, n0max: Optional[int] = None
) -> OrderVerdict:
    """
    Bounded search for constants with ``s1(n) <= C1 s2(C2 n)`` and the reverse on the
    available indices.  Never a statement about asymptotics.
    """
    if n0max is None:
        n0max = max(s1.stop, s2.stop)
    below = _dominated(s1, s2, c1max, c2max, n0max)
    above = _dominated(s2, s1, c1max, c2max, n0max)
    if below and above:
        relation = "equivalent"
    elif below:
        relation = "≼"
    elif above:
        relation = "≽"
    else:
        relation = "incomparable-within-bounds"
    return OrderVerdict(relation, below, above, (c1max, c2max, n0max))
