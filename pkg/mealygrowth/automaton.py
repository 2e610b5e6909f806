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
Non-initial Mealy automata over a finite alphabet.

States and letters are plain integers.  ``pi[q][x]`` is the state entered after reading
letter ``x`` in state ``q`` and ``lam[q][x]`` is the letter written.  Composition reads
right to left, the state ``(qa, qb)`` of ``product(a, b)`` realizes ``f_qa ∘ f_qb`` so
``qb`` sees the raw input first.
"""

__all__ = [
    "MealyAutomaton",
    "StatePartition",
    "Violation",
    "validate",
    "apply",
    "product",
    "power",
    "refine_partition",
    "minimize",
    "growth_by_minimization",
    "identity_automaton",
    "disjoint_union",
    "identity_states",
    "word_automaton",
]

import logging
from itertools import product as _cartesian
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .const import DEFAULT_STATE_CAP
from .exceptions import AutomatonError, CapacityError, GrowthError

_log = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


class MealyAutomaton:
    """
    Transition table ``pi`` and output table ``lam``, both indexed ``[state][letter]``.

    The constructor only checks that the tables are rectangular and non-empty,
    range problems are reported by :func:`validate`.
    """

    def __init__(self, pi: Iterable[Iterable[int]], lam: Iterable[Iterable[int]], name: Optional[str] = None):
        self._pi: Table = tuple(tuple(int(v) for v in row) for row in pi)
        self._lam: Table = tuple(tuple(int(v) for v in row) for row in lam)
        self.name = name

        if not self._pi:
            raise AutomatonError("an automaton needs at least one state")
        m = len(self._pi[0])
        if m < 1:
            raise AutomatonError("an automaton needs at least one letter")
        if len(self._lam) != len(self._pi):
            raise AutomatonError(f"pi has {len(self._pi)} rows but lambda has {len(self._lam)}")
        if any(len(row) != m for row in self._pi + self._lam):
            raise AutomatonError(f"tables are not total, every row needs {m} entries")

    @property
    def m(self) -> int:
        """alphabet size"""
        return len(self._pi[0])

    @property
    def n(self) -> int:
        """state count"""
        return len(self._pi)

    @property
    def pi(self) -> Table:
        return self._pi

    @property
    def lam(self) -> Table:
        return self._lam

    def sigma(self, q: int) -> Tuple[int, ...]:
        """
        The letter transformation of state `q` (its row of the output table)
        """
        return self._lam[q]

    def sections(self, q: int) -> Tuple[int, ...]:
        return self._pi[q]

    def rename(self, name: Optional[str]) -> "MealyAutomaton":
        return MealyAutomaton(self._pi, self._lam, name=name)

    def relabel_states(self, perm: Sequence[int]) -> "MealyAutomaton":
        """
        Returns the same automaton with state ``q`` renamed to ``perm[q]``
        """
        if sorted(perm) != list(range(self.n)):
            raise AutomatonError(f"{list(perm)} is not a permutation of the {self.n} states")
        inverse = [0] * self.n
        for old, new in enumerate(perm):
            inverse[new] = old
        pi = [[perm[self._pi[inverse[q]][x]] for x in range(self.m)] for q in range(self.n)]
        lam = [self._lam[inverse[q]] for q in range(self.n)]
        return MealyAutomaton(pi, lam, name=self.name)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "m": self.m,
            "n": self.n,
            "pi": [list(row) for row in self._pi],
            "lambda": [list(row) for row in self._lam],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MealyAutomaton":
        try:
            aut = cls(data["pi"], data["lambda"], name=data.get("name"))
        except GrowthError:
            raise
        except Exception as err:
            raise AutomatonError(f"invalid automaton description: {err}") from err

        for key, value in (("m", aut.m), ("n", aut.n)):
            if key in data and data[key] != value:
                raise AutomatonError(f"declared {key}={data[key]} but the tables give {value}")
        return aut

    def __eq__(self, other):
        if not isinstance(other, MealyAutomaton):
            return NotImplemented
        return self._pi == other._pi and self._lam == other._lam

    def __hash__(self):
        return hash((self._pi, self._lam))

    def __repr__(self):
        return f"{self.__class__.__name__}(name={self.name!r}, m={self.m}, n={self.n})"


class Violation(NamedTuple):
    table: str  #: ``'pi'`` or ``'lambda'``
    state: int  #: row of the offending entry
    letter: int  #: column of the offending entry
    value: int  #: the out-of-range value

    def __str__(self):
        return f"{self.table}[q{self.state}][x{self.letter}] = {self.value} is out of range"


class StatePartition(NamedTuple):
    class_of: Tuple[int, ...]  #: class index of every state, dense and in first-occurrence order
    class_count: int  #: number of classes

    def classes(self) -> List[List[int]]:
        groups = [[] for _ in range(self.class_count)]
        for state, cls in enumerate(self.class_of):
            groups[cls].append(state)
        return groups

    def same(self, p: int, q: int) -> bool:
        return self.class_of[p] == self.class_of[q]


def validate(aut: MealyAutomaton) -> List[Violation]:
    """
    Every table entry that is out of range, an empty list means the automaton is valid
    """
    violations = []
    for q in range(aut.n):
        for x in range(aut.m):
            if not 0 <= aut.pi[q][x] < aut.n:
                violations.append(Violation("pi", q, x, aut.pi[q][x]))
            if not 0 <= aut.lam[q][x] < aut.m:
                violations.append(Violation("lambda", q, x, aut.lam[q][x]))
    return violations


def _check_valid(aut: MealyAutomaton):
    violations = validate(aut)
    if violations:
        raise AutomatonError(f"{aut!r} is invalid: {', '.join(map(str, violations))}")


def apply(aut: MealyAutomaton, q: int, word: Iterable[int]) -> Tuple[int, ...]:
    """
    Run the automaton from state `q` over `word` and return the output word
    """
    if not 0 <= q < aut.n:
        raise AutomatonError(f"state q{q} is out of range for {aut.n} states")
    output = []
    for x in word:
        if not 0 <= x < aut.m:
            raise AutomatonError(f"letter x{x} is out of range for an alphabet of {aut.m}")
        output.append(aut.lam[q][x])
        q = aut.pi[q][x]
    return tuple(output)


def product(a: MealyAutomaton, b: MealyAutomaton, state_cap: int = DEFAULT_STATE_CAP) -> MealyAutomaton:
    """
    The product automaton, state ``qa * b.n + qb`` realizes ``f_qa ∘ f_qb``
    """
    if a.m != b.m:
        raise AutomatonError(f"alphabet mismatch: {a.m} letters vs {b.m} letters")
    if a.n * b.n > state_cap:
        raise CapacityError(f"product needs {a.n * b.n} states, the cap is {state_cap}")

    pi, lam = [], []
    for qa, qb in _cartesian(range(a.n), range(b.n)):
        pi_row, lam_row = [], []
        for x in range(a.m):
            y = b.lam[qb][x]
            pi_row.append(a.pi[qa][y] * b.n + b.pi[qb][x])
            lam_row.append(a.lam[qa][y])
        pi.append(pi_row)
        lam.append(lam_row)
    return MealyAutomaton(pi, lam, name=f"{a.name}*{b.name}" if a.name and b.name else None)


def power(a: MealyAutomaton, k: int, state_cap: int = DEFAULT_STATE_CAP) -> MealyAutomaton:
    """
    ``a`` multiplied by itself `k` times, folded from the left.  The state numbered by the
    base-``a.n`` digits ``q1 q2 ... qk`` realizes ``f_q1 ∘ f_q2 ∘ ... ∘ f_qk``.
    """
    if k < 1:
        raise AutomatonError(f"power needs k >= 1, got {k}")
    if a.n ** k > state_cap:
        raise CapacityError(f"power {k} needs {a.n ** k} states, the cap is {state_cap}")
    result = a
    for _ in range(k - 1):
        result = product(result, a, state_cap=state_cap)
    return result.rename(f"{a.name}^{k}" if a.name else None)


def _dense_labels(keys: Sequence) -> List[int]:
    labels = {}
    return [labels.setdefault(key, len(labels)) for key in keys]


def _refine(outputs: Sequence, transitions: Sequence[Sequence[int]]) -> Tuple[List[int], int]:
    """
    Moore refinement.  Starts from the classes of `outputs` and splits by the classes of the
    successors until the class count stops changing.
    """
    class_of = _dense_labels(outputs)
    count = max(class_of, default=-1) + 1
    rounds = 0
    while True:
        rounds += 1
        signatures = [(class_of[s], *(class_of[t] for t in succ)) for s, succ in enumerate(transitions)]
        refined = _dense_labels(signatures)
        refined_count = max(refined, default=-1) + 1
        if refined_count == count:
            _log.verbose("%d states settled into %d classes after %d rounds", len(outputs), count, rounds)
            return refined, refined_count
        class_of, count = refined, refined_count


def refine_partition(aut: MealyAutomaton) -> StatePartition:
    """
    The coarsest partition of the states into classes realizing the same transformation
    """
    _check_valid(aut)
    class_of, count = _refine(aut.lam, aut.pi)
    return StatePartition(tuple(class_of), count)


def minimize(aut: MealyAutomaton) -> Tuple[MealyAutomaton, StatePartition]:
    """
    Merge equivalent states.  No reachability pruning, every state of a non-initial
    automaton is kept up to equivalence.
    """
    partition = refine_partition(aut)
    representative = [None] * partition.class_count
    for state, cls in enumerate(partition.class_of):
        if representative[cls] is None:
            representative[cls] = state

    pi = [[partition.class_of[aut.pi[q][x]] for x in range(aut.m)] for q in representative]
    lam = [aut.lam[q] for q in representative]

    for state, cls in enumerate(partition.class_of):
        if aut.lam[state] != lam[cls] or any(
            partition.class_of[aut.pi[state][x]] != pi[cls][x] for x in range(aut.m)
        ):
            raise AutomatonError(f"state q{state} does not agree with its class {cls}")

    return MealyAutomaton(pi, lam, name=aut.name), partition


def growth_by_minimization(a: MealyAutomaton, nmax: int, state_cap: int = DEFAULT_STATE_CAP) -> List[int]:
    """
    ``[γ_A(1), ..., γ_A(nmax)]``, the state counts of the minimal automata of the powers of `a`.

    The minimal automaton of ``a^k`` is found from the minimal automaton of ``a^(k-1)``
    multiplied by ``a``, both realize the same set of transformations.
    """
    _check_valid(a)
    growth = []
    current, _ = minimize(a)
    growth.append(current.n)
    for k in range(2, nmax + 1):
        current, _ = minimize(product(current, a, state_cap=state_cap))
        growth.append(current.n)
        _log.debug("power %d of %r minimizes to %d states", k, a, current.n)
    return growth


def identity_automaton(m: int) -> MealyAutomaton:
    """
    The 1-state automaton realizing the identity over `m` letters
    """
    return MealyAutomaton([[0] * m], [list(range(m))], name=f"identity{m}")


def disjoint_union(a: MealyAutomaton, b: MealyAutomaton) -> MealyAutomaton:
    """
    States of `a` followed by the states of `b` shifted by ``a.n``
    """
    if a.m != b.m:
        raise AutomatonError(f"alphabet mismatch: {a.m} letters vs {b.m} letters")
    pi = [list(row) for row in a.pi] + [[q + a.n for q in row] for row in b.pi]
    return MealyAutomaton(pi, a.lam + b.lam)


def identity_states(aut: MealyAutomaton) -> Tuple[int, ...]:
    """
    States realizing the identity transformation
    """
    letters = tuple(range(aut.m))
    candidates = {q for q in range(aut.n) if aut.lam[q] == letters}
    changed = True
    while changed:
        changed = False
        for q in sorted(candidates):
            if any(t not in candidates for t in aut.pi[q]):
                candidates.discard(q)
                changed = True
    return tuple(sorted(candidates))


def word_automaton(aut: MealyAutomaton, word: Sequence[int], state_cap: int = DEFAULT_STATE_CAP) -> MealyAutomaton:
    """
    The reachable part of the product automaton of the generator `word`, started in state 0.

    States are tuples of states of `aut`, factors realizing the identity are dropped and
    every state is replaced by the smallest state of its class, so equal sections collapse.
    """
    _check_valid(aut)
    for q in word:
        if not 0 <= q < aut.n:
            raise AutomatonError(f"generator q{q} is out of range for {aut.n} states")

    partition = refine_partition(aut)
    smallest: Dict[int, int] = {}
    for state, cls in enumerate(partition.class_of):
        smallest.setdefault(cls, state)
    canonical = [smallest[partition.class_of[q]] for q in range(aut.n)]
    identities = set(identity_states(aut))

    def normal(states):
        return tuple(canonical[q] for q in states if q not in identities)

    start = normal(word)
    index = {start: 0}
    order = [start]
    pi, lam = [], []
    i = 0
    while i < len(order):
        states = order[i]
        pi_row, lam_row = [], []
        for x in range(aut.m):
            y = x
            successor = [0] * len(states)
            for j in reversed(range(len(states))):
                q = states[j]
                successor[j] = aut.pi[q][y]
                y = aut.lam[q][y]
            key = normal(successor)
            if key not in index:
                if len(order) >= state_cap:
                    raise CapacityError(f"word automaton exceeds the cap of {state_cap} states")
                index[key] = len(order)
                order.append(key)
            pi_row.append(index[key])
            lam_row.append(y)
        pi.append(pi_row)
        lam.append(lam_row)
        i += 1

    _log.verbose("word of length %d reaches %d product states", len(word), len(order))
    return MealyAutomaton(pi, lam)
