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
Closed-form growth functions, piecewise by residue class.

A :class:`ClosedFormSpec` with modulus ``k`` evaluates ``n`` through the part for ``n % k``,
parts are written in the part index ``j = n // k`` unless they say otherwise.
"""

__all__ = [
    "FormPart",
    "ClosedFormSpec",
    "fibonacci",
    "binomial",
    "bm_growth",
    "builtin_closed_form",
    "closed_form_eval",
    "CLOSED_FORM_NAMES",
]

import json
import logging
import re
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from ..exceptions import SeriesError
from .power_series import expand_a5_gamma
from .sequences import IntSequence

_log = logging.getLogger(__name__)

_KINDS = ("polynomial", "exponential", "binomial_sum", "fibonacci", "series")
_BM_RE = re.compile(r"b(?:m\()?(?P<m>\d+)\)?")

CLOSED_FORM_NAMES = ("a1", "a2", "a3", "a4", "a5", "a6", "b3", "bm", "fibonacci")


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """
    ``Φ_0 = Φ_1 = 1``, ``Φ_n = Φ_{n-1} + Φ_{n-2}``
    """
    if n < 0:
        raise SeriesError(f"no Fibonacci number at {n}")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def binomial(n: int, k: int, convention: str = "standard") -> int:
    """
    ``C(n, k)``.  The ``'standard'`` convention is zero for ``k > n``, ``k < 0`` or ``n < 0``,
    the ``'strict'`` convention is also zero when ``k == n``.
    """
    if convention not in ("standard", "strict"):
        raise SeriesError(f"unknown binomial convention {convention!r}")
    if n < 0 or k < 0 or k > n or (convention == "strict" and k >= n):
        return 0
    result = 1
    for i in range(1, min(k, n - k) + 1):
        result = result * (n - i + 1) // i
    return result


def bm_growth(m: int, n: int, convention: str = "standard") -> int:
    """
    Growth of the two-state automaton over `m` letters,
    ``sum_{i=0}^{m-2} C(n, i) + sum_{i >= 0} C(n - 2i - 1, m - 2)``
    """
    if m < 3:
        raise SeriesError(f"the binomial-sum family starts at m=3, got {m}")
    total = sum(binomial(n, i, convention) for i in range(m - 1))
    i = 0
    while n - 2 * i - 1 >= 0:
        total += binomial(n - 2 * i - 1, m - 2, convention)
        i += 1
    return total


def _fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _polynomial(coefficients: Sequence, x: int) -> Fraction:
    value = Fraction(0)
    for c in reversed(coefficients):
        value = value * x + _fraction(c)
    return value


@lru_cache(maxsize=8)
def _a5_coefficients(degree: int) -> Tuple[int, ...]:
    return expand_a5_gamma(degree).integer_coefficients()


class FormPart(NamedTuple):
    residue: int  #: residue class ``n % k`` this part covers
    kind: str  #: one of ``polynomial``, ``exponential``, ``binomial_sum``, ``fibonacci``, ``series``
    params: Mapping[str, Any]  #: parameters of the kind
    n0: int = 0  #: first ``n`` the expression is valid for
    exceptions: Optional[Mapping[int, int]] = None  #: values at ``n`` the expression does not cover

    def value(self, n: int, k: int) -> Fraction:
        j = n // k
        params = self.params
        if self.kind == "polynomial":
            return _polynomial(params["coefficients"], n if params.get("variable", "j") == "n" else j)
        if self.kind == "exponential":
            return _fraction(params["scale"]) * _fraction(params["ratio"]) ** j + _fraction(params.get("offset", 0))
        if self.kind == "binomial_sum":
            return Fraction(bm_growth(params["m"], n, params.get("convention", "standard")))
        if self.kind == "fibonacci":
            total = sum(_fraction(coef) * fibonacci(j + shift) for coef, shift in params["terms"])
            return total + _polynomial(params.get("polynomial", ()), n)
        if params.get("series") != "a5":
            raise SeriesError(f"unknown series {params.get('series')!r}")
        return Fraction(_a5_coefficients(max(64, 2 * n))[n])

    def to_dict(self) -> dict:
        def plain(value):
            if isinstance(value, Fraction):
                return int(value) if value.denominator == 1 else str(value)
            if isinstance(value, (list, tuple)):
                return [plain(v) for v in value]
            return value

        return {
            "residue": self.residue,
            "kind": self.kind,
            "params": {key: plain(value) for key, value in self.params.items()},
            "n0": self.n0,
            "exceptions": {str(n): v for n, v in sorted((self.exceptions or {}).items())},
        }


class ClosedFormSpec:
    """
    Piecewise closed form with one :class:`FormPart` per residue modulo ``k``
    """

    def __init__(self, k: int, parts: Sequence[FormPart], name: Optional[str] = None):
        if k < 1:
            raise SeriesError(f"modulus must be at least 1, got {k}")
        residues = sorted(part.residue for part in parts)
        if residues != list(range(k)):
            raise SeriesError(f"a closed form with modulus {k} needs one part per residue, got {residues}")
        for part in parts:
            if part.kind not in _KINDS:
                raise SeriesError(f"unknown closed form kind {part.kind!r}")
        self.k = k
        self.parts: Tuple[FormPart, ...] = tuple(sorted(parts, key=lambda part: part.residue))
        self.name = name

    def exceptions(self) -> Dict[int, int]:
        values = {}
        for part in self.parts:
            values.update(part.exceptions or {})
        return values

    @property
    def n0(self) -> int:
        """smallest ``n`` with a value"""
        candidates = [part.n0 for part in self.parts] + list(self.exceptions())
        return min(candidates)

    def evaluate(self, n: int) -> int:
        part = self.parts[n % self.k]
        if part.exceptions and n in part.exceptions:
            return part.exceptions[n]
        if n < part.n0:
            raise SeriesError(f"{self.name or 'closed form'} is not defined at n={n}, residue {part.residue} starts at {part.n0}")
        value = part.value(n, self.k)
        if value.denominator != 1:
            raise SeriesError(f"{self.name or 'closed form'} is not an integer at n={n}: {value}")
        return int(value)

    def sequence(self, start: int, stop: int) -> IntSequence:
        """values at ``start <= n < stop``"""
        return IntSequence((self.evaluate(n) for n in range(start, stop)), start=start)

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "k": self.k, "parts": [part.to_dict() for part in self.parts]}, indent=2)

    @classmethod
    def from_json(cls, text: Union[str, Mapping]) -> "ClosedFormSpec":
        try:
            data = json.loads(text) if isinstance(text, str) else text
            parts = [
                FormPart(
                    residue=int(part["residue"]),
                    kind=part["kind"],
                    params=_read_params(part.get("params", {})),
                    n0=int(part.get("n0", 0)),
                    exceptions={int(n): int(v) for n, v in (part.get("exceptions") or {}).items()},
                )
                for part in data["parts"]
            ]
            return cls(int(data["k"]), parts, name=data.get("name"))
        except SeriesError:
            raise
        except Exception as err:
            raise SeriesError(f"invalid closed form description: {err}") from err

    def __repr__(self):
        return f"{self.__class__.__name__}(name={self.name!r}, k={self.k}, kinds={[p.kind for p in self.parts]})"


def _read_params(params: Mapping) -> dict:
    def read(value):
        if isinstance(value, str) and re.fullmatch(r"-?\d+(/\d+)?", value):
            return Fraction(value)
        if isinstance(value, list):
            return [read(v) for v in value]
        return value

    return {key: read(value) for key, value in params.items()}


def _exponential(residue, scale, n0, exceptions=None) -> FormPart:
    return FormPart(residue, "exponential", {"scale": Fraction(scale), "ratio": Fraction(2), "offset": -1}, n0, exceptions)


def _builtin(name: str) -> ClosedFormSpec:
    if name == "a1":
        parts = (
            _exponential(0, Fraction(23, 4), 4, {2: 8}),
            _exponential(1, 8, 5, {1: 3, 3: 14}),
        )
        return ClosedFormSpec(2, parts, name)
    if name == "a2":
        parts = (
            FormPart(0, "polynomial", {"coefficients": [8]}, 4, {2: 4}),
            FormPart(1, "polynomial", {"coefficients": [9]}, 5, {1: 2, 3: 7}),
        )
        return ClosedFormSpec(2, parts, name)
    if name == "a3":
        parts = (
            FormPart(0, "polynomial", {"coefficients": [0, 4]}, 2),
            FormPart(1, "polynomial", {"coefficients": [1, 5]}, 3, {1: 2}),
        )
        return ClosedFormSpec(2, parts, name)
    if name == "a4":
        parts = (
            FormPart(0, "polynomial", {"coefficients": [6, -5, 4]}, 4, {2: 4}),
            FormPart(1, "polynomial", {"coefficients": [2, Fraction(3, 2), Fraction(7, 2)]}, 1),
        )
        return ClosedFormSpec(2, parts, name)
    if name == "a5":
        return ClosedFormSpec(1, [FormPart(0, "series", {"series": "a5"}, 0)], name)
    if name == "a6":
        linear = [-18, -2]
        parts = (
            FormPart(0, "fibonacci", {"terms": [[1, 6], [1, 4]], "polynomial": linear}, 2),
            FormPart(1, "fibonacci", {"terms": [[1, 6], [2, 4]], "polynomial": linear}, 1),
        )
        return ClosedFormSpec(2, parts, name)
    if name == "b3":
        quarter = Fraction(1, 4)
        parts = (
            FormPart(0, "polynomial", {"coefficients": [1, 1, quarter], "variable": "n"}, 2),
            FormPart(1, "polynomial", {"coefficients": [Fraction(3, 4), 1, quarter], "variable": "n"}, 1),
        )
        return ClosedFormSpec(2, parts, name)
    if name == "fibonacci":
        return ClosedFormSpec(1, [FormPart(0, "fibonacci", {"terms": [[1, 0]]}, 0)], name)
    raise SeriesError(f"unknown closed form {name!r}")


def builtin_closed_form(name: str, m: Optional[int] = None, convention: str = "standard") -> ClosedFormSpec:
    """
    A built-in closed form by name.  The binomial-sum family is named ``bm`` (with `m`),
    ``bm(4)`` or ``b4``, ``b3`` is the piecewise quadratic form of its first member.
    """
    if name == "bm" or (name != "b3" and _BM_RE.fullmatch(name)):
        if name != "bm":
            m = int(_BM_RE.fullmatch(name).group("m"))
        if m is None:
            raise SeriesError("the bm closed form needs the alphabet size m")
        part = FormPart(0, "binomial_sum", {"m": m, "convention": convention}, 1)
        return ClosedFormSpec(1, [part], name=f"bm({m})")
    return _builtin(name)


def closed_form_eval(spec: Union[ClosedFormSpec, str], n: int, m: Optional[int] = None) -> int:
    """
    Evaluate a closed form, or a built-in one given by name, at `n`
    """
    if isinstance(spec, str):
        spec = builtin_closed_form(spec, m=m)
    return spec.evaluate(n)
