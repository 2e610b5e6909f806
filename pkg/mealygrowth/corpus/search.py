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
Brute-force search of the automata with a few states and letters for a prescribed growth.

A table is encoded as ``n * m`` cells, cell ``q * m + x`` holds ``next * m + output`` for
state ``q`` reading letter ``x``.  Tables are visited in lexicographic cell order, every
candidate is enumerated level by level and dropped at the first level whose spherical growth
differs from the required prefix.
"""

__all__ = ["SearchQuery", "SearchResult", "search_automata", "automaton_cells", "canonical_cells"]

import logging
from itertools import permutations, product as _cartesian
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Set, Tuple

from ..automaton import MealyAutomaton, identity_states
from ..const import DEFAULT_SEARCH_BUDGET, SEARCH_ELEMENT_CAP
from ..exceptions import CapacityError, CorpusError
from ..semigroup import SemigroupEnumerator
from ..series.sequences import IntSequence

_log = logging.getLogger(__name__)

Cells = Tuple[int, ...]

_PROGRESS_EVERY = 10_000


class SearchQuery(NamedTuple):
    n_states: int  #: states of the automata searched
    m_letters: int  #: alphabet size
    prefix: IntSequence  #: required spherical growth, indexed from 1
    canonical: bool = False  #: visit one table per state relabelling class
    relabel_letters: bool = False  #: with `canonical`, letter relabellings are identified too
    require_identity: bool = False  #: one state must be the identity transformation
    fixed: Optional[Dict[int, Tuple[Sequence[int], Sequence[int]]]] = None  #: state -> (pi row, lambda row) kept fixed
    budget: int = DEFAULT_SEARCH_BUDGET  #: most tables visited
    element_cap: int = SEARCH_ELEMENT_CAP  #: registry cap for a single candidate
    name: str = "hit"  #: prefix of the names given to the hits

    def space(self) -> int:
        """number of tables in the searched space"""
        free = (self.n_states - len(self.fixed or {})) * self.m_letters
        return (self.n_states * self.m_letters) ** free


class SearchResult(NamedTuple):
    hits: Tuple[MealyAutomaton, ...]  #: matching automata in table order
    visited: int  #: tables visited
    tested: int  #: tables whose growth was enumerated
    truncated: bool  #: the budget ran out before the space was exhausted

    def __bool__(self):
        return bool(self.hits)


def automaton_cells(aut: MealyAutomaton) -> Cells:
    return tuple(aut.pi[q][x] * aut.m + aut.lam[q][x] for q in range(aut.n) for x in range(aut.m))


def _from_cells(cells: Cells, n: int, m: int, name: Optional[str] = None) -> MealyAutomaton:
    pi = [[cells[q * m + x] // m for x in range(m)] for q in range(n)]
    lam = [[cells[q * m + x] % m for x in range(m)] for q in range(n)]
    return MealyAutomaton(pi, lam, name=name)


def _relabellings(n: int, m: int, letters: bool) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    letter_perms = list(permutations(range(m))) if letters else [tuple(range(m))]
    return [(states, tau) for states in permutations(range(n)) for tau in letter_perms]


def _relabel(cells: Cells, n: int, m: int, states: Sequence[int], tau: Sequence[int]) -> Cells:
    out = [0] * (n * m)
    for q in range(n):
        for x in range(m):
            c = cells[q * m + x]
            out[states[q] * m + tau[x]] = states[c // m] * m + tau[c % m]
    return tuple(out)


def canonical_cells(cells: Cells, n: int, m: int, relabel_letters: bool = False) -> Cells:
    """
    Lexicographically smallest table over the state (and optionally letter) relabellings
    """
    return min(_relabel(cells, n, m, states, tau) for states, tau in _relabellings(n, m, relabel_letters))


def _fixed_cells(query: SearchQuery) -> Dict[int, int]:
    n, m = query.n_states, query.m_letters
    fixed = {}
    for q, (pi_row, lam_row) in (query.fixed or {}).items():
        if not 0 <= q < n or len(pi_row) != m or len(lam_row) != m:
            raise CorpusError(f"fixed row for state {q} does not fit {n} states and {m} letters")
        for x in range(m):
            if not (0 <= pi_row[x] < n and 0 <= lam_row[x] < m):
                raise CorpusError(f"fixed row for state {q} is out of range")
            fixed[q * m + x] = pi_row[x] * m + lam_row[x]
    return fixed


def _tables(query: SearchQuery):
    n, m = query.n_states, query.m_letters
    fixed = _fixed_cells(query)
    free = [i for i in range(n * m) if i not in fixed]
    for values in _cartesian(range(n * m), repeat=len(free)):
        cells = [0] * (n * m)
        for i, c in fixed.items():
            cells[i] = c
        for i, c in zip(free, values):
            cells[i] = c
        yield tuple(cells)


def _matches(aut: MealyAutomaton, prefix: IntSequence, element_cap: int) -> bool:
    enumerator = SemigroupEnumerator(aut, element_cap=element_cap)
    try:
        for expected in prefix:
            if enumerator.step() != expected:
                return False
    except CapacityError:
        return False
    return True


def search_automata(
    query: SearchQuery,
    on_hit: Optional[Callable[[MealyAutomaton], None]] = None,
) -> SearchResult:
    """
    All automata of the query's shape whose spherical growth starts with ``query.prefix``.

    With ``canonical`` one table per relabelling class is tested and the hits are reported
    in their canonical form.  `on_hit` is called with every hit as soon as it is found, the
    result lists them again sorted by table.  Running out of budget is not an error, the
    result is flagged ``truncated``.
    """
    n, m = query.n_states, query.m_letters
    if n < 1 or m < 1:
        raise CorpusError(f"cannot search automata with {n} states and {m} letters")
    if query.prefix.start != 1 or not len(query.prefix):
        raise CorpusError("the growth prefix must be non-empty and start at n=1")
    if query.space() > query.budget:
        _log.warning("the space holds %d tables, only %d will be visited", query.space(), query.budget)

    dedup_by_set = query.canonical and bool(query.fixed)
    seen: Set[Cells] = set()
    hits: List[Cells] = []
    visited = tested = 0
    truncated = False
    for cells in _tables(query):
        if visited >= query.budget:
            truncated = True
            break
        visited += 1
        if visited % _PROGRESS_EVERY == 0:
            _log.verbose("visited %d tables, tested %d, %d hits", visited, tested, len(hits))
        if query.canonical:
            canonical = canonical_cells(cells, n, m, query.relabel_letters)
            if dedup_by_set:
                if canonical in seen:
                    continue
                seen.add(canonical)
            elif canonical != cells:
                continue
            cells = canonical
        aut = _from_cells(cells, n, m, name=query.name)
        if query.require_identity and not identity_states(aut):
            continue
        tested += 1
        if _matches(aut, query.prefix, query.element_cap):
            hits.append(cells)
            _log.debug("hit %s", cells)
            if on_hit is not None:
                on_hit(aut)

    hits.sort()
    result = SearchResult(
        tuple(_from_cells(cells, n, m, name=f"{query.name}{i}") for i, cells in enumerate(hits, 1)),
        visited,
        tested,
        truncated,
    )
    _log.info(
        "searched %d of %d tables (%d tested): %d hits%s",
        visited,
        query.space(),
        tested,
        len(hits),
        ", truncated" if truncated else "",
    )
    return result
