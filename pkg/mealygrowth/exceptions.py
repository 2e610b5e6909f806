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

__all__ = [
    "GrowthError",
    "AutomatonError",
    "ParseError",
    "CapacityError",
    "HorizonError",
    "RelationError",
    "SeriesError",
    "CorpusError",
]


class GrowthError(Exception):
    """
    Base exception for all exceptions raised by mealygrowth
    """


class AutomatonError(GrowthError):
    """
    For malformed tables, out-of-range states or letters and alphabet mismatches
    """


class ParseError(AutomatonError):
    """
    Raised when automaton text or JSON cannot be read, `line` and `column` are 1-based
    and ``0`` when the position is unknown
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class CapacityError(GrowthError):
    """
    Raised when a state cap, element cap or search budget is exceeded
    """

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)


class HorizonError(GrowthError):
    """
    Raised when a word is longer than the enumerated horizon of a registry
    """


class RelationError(GrowthError):
    """
    For malformed relation templates and invalid parameter ranges
    """


class SeriesError(GrowthError):
    """
    For invalid series or sequence input: zero constant terms, differences that are too deep,
    indices below the range of a closed form
    """


class CorpusError(GrowthError):
    """
    Raised for unknown corpus entries or damaged corpus data files
    """
