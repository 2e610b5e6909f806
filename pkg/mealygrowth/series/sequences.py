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
Integer sequences indexed from an arbitrary start, with finite differences and residue splits.
"""

__all__ = [
    "IntSequence",
    "finite_difference",
    "cumulative_sum",
    "first_descent",
    "split_residues",
    "interleave",
]

import csv
import io
import operator
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..exceptions import SeriesError


class IntSequence:
    """
    Exact integers ``values`` at the contiguous indices ``start, start + 1, ...``.

    Indexing uses the sequence index, ``s[n]`` is the value at ``n``, not at position ``n``.
    """

    def __init__(self, values: Iterable[int], start: int = 0):
        try:
            self.values: Tuple[int, ...] = tuple(_as_int(v) for v in values)
        except TypeError as err:
            raise SeriesError(f"sequence values must be integers: {err}") from err
        if start < 0:
            raise SeriesError(f"sequence start must be non-negative, got {start}")
        self.start = start

    @property
    def stop(self) -> int:
        """one past the last index"""
        return self.start + len(self.values)

    def indices(self) -> range:
        return range(self.start, self.stop)

    def items(self) -> Iterator[Tuple[int, int]]:
        return zip(self.indices(), self.values)

    def window(self, start: Optional[int] = None, stop: Optional[int] = None) -> "IntSequence":
        start = self.start if start is None else max(start, self.start)
        stop = self.stop if stop is None else min(stop, self.stop)
        return IntSequence(self.values[start - self.start: max(stop, start) - self.start], start=start)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, n: int) -> int:
        if not self.start <= n < self.stop:
            raise IndexError(f"index {n} outside [{self.start}, {self.stop})")
        return self.values[n - self.start]

    def __contains__(self, n: int) -> bool:
        return self.start <= n < self.stop

    def __eq__(self, other):
        if not isinstance(other, IntSequence):
            return NotImplemented
        return self.start == other.start and self.values == other.values

    def __hash__(self):
        return hash((self.start, self.values))

    def __repr__(self):
        return f"{self.__class__.__name__}({list(self.values)!r}, start={self.start})"

    def to_csv(self, header: Sequence[str] = ("n", "value")) -> str:
        lines = [",".join(header)]
        lines.extend(f"{n},{v}" for n, v in self.items())
        return "\n".join(lines) + "\n"

    def to_tsv(self) -> str:
        return "".join(f"{n}\t{v}\n" for n, v in self.items())

    @classmethod
    def from_csv(cls, text: str, column: Optional[Union[str, int]] = None) -> "IntSequence":
        """
        Read a CSV whose first column is the index.  `column` picks the value column by name or
        position, by default the second column (or the only column, indexed from 1).
        """
        rows = [row for row in csv.reader(io.StringIO(text)) if row and any(cell.strip() for cell in row)]
        if not rows:
            raise SeriesError("empty sequence file")
        header = None
        if not _is_int(rows[0][0]):
            header, rows = [cell.strip() for cell in rows[0]], rows[1:]

        if isinstance(column, str):
            if header is None or column not in header:
                raise SeriesError(f"no column named {column!r}")
            position = header.index(column)
        elif column is not None:
            position = column
        else:
            position = 1 if rows and len(rows[0]) > 1 else 0

        try:
            if position == 0:
                values = [int(row[0]) for row in rows]
                return cls(values, start=1)
            indices = [int(row[0]) for row in rows]
            values = [int(row[position]) for row in rows]
        except (ValueError, IndexError) as err:
            raise SeriesError(f"bad sequence row: {err}") from err

        if indices and indices != list(range(indices[0], indices[0] + len(indices))):
            raise SeriesError("sequence indices must be contiguous and increasing")
        return cls(values, start=indices[0] if indices else 0)


def _is_int(text: str) -> bool:
    try:
        int(text)
    except ValueError:
        return False
    return True


def _as_int(value) -> int:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return operator.index(value)


def finite_difference(s: IntSequence, order: int = 1) -> IntSequence:
    """
    ``order``-th backward difference, the result starts ``order`` indices later
    """
    if order < 1:
        raise SeriesError(f"difference order must be at least 1, got {order}")
    if order >= len(s):
        raise SeriesError(f"difference of order {order} needs more than {len(s)} values")
    values = list(s.values)
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return IntSequence(values, start=s.start + order)


def cumulative_sum(s: IntSequence, initial: int = 0) -> IntSequence:
    """
    Running sums of `s` on top of `initial`, undoes a first difference
    """
    values, total = [], initial
    for v in s.values:
        total += v
        values.append(total)
    return IntSequence(values, start=s.start)


def first_descent(s: IntSequence) -> Optional[int]:
    """
    The least index ``n`` with ``s[n] < s[n - 1]``, or ``None`` when `s` never decreases
    """
    for n in range(s.start + 1, s.stop):
        if s[n] < s[n - 1]:
            return n
    return None


def split_residues(s: IntSequence, k: int) -> List[IntSequence]:
    """
    Part ``i`` holds ``s[k * j + i]`` at index ``j``
    """
    if k < 2:
        raise SeriesError(f"residue split needs k >= 2, got {k}")
    parts = []
    for i in range(k):
        first = s.start + (i - s.start) % k
        parts.append(IntSequence(s.values[first - s.start:: k], start=first // k))
    return parts


def interleave(parts: Sequence[IntSequence]) -> IntSequence:
    """
    Inverse of :func:`split_residues`
    """
    k = len(parts)
    available = {}
    for i, part in enumerate(parts):
        for j, v in part.items():
            available[k * j + i] = v
    if not available:
        return IntSequence([])
    start = min(available)
    values = []
    n = start
    while n in available:
        values.append(available[n])
        n += 1
    return IntSequence(values, start=start)
