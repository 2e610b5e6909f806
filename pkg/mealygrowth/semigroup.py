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
Level-by-level enumeration of the semigroup generated by the states of an automaton.

Every element is stored once in an :class:`ElementRegistry` as its letter transformation
``sigma`` together with the ids of its sections, so the registry is itself a Mealy
automaton whose states are pairwise inequivalent.  Level ``n`` holds the elements that are
products of exactly ``n`` generators.
"""

__all__ = [
    "Element",
    "ElementRegistry",
    "GrowthTables",
    "SemigroupEnumerator",
    "RelationCheck",
    "RelationReport",
    "enumerate_growth",
    "resolve_word",
    "words_equal",
    "check_relations",
]

import json
import logging
from collections import defaultdict
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .automaton import MealyAutomaton, _refine, disjoint_union, refine_partition, validate, word_automaton
from .const import DEFAULT_ELEMENT_CAP, DEFAULT_PBOUND, DEFAULT_STATE_CAP, FINGERPRINT_DEPTH
from .exceptions import AutomatonError, CapacityError, HorizonError
from .series.sequences import IntSequence
from .words import GeneratorWord, RelationSet, RelationTemplate, WordTemplate, format_word

_log = logging.getLogger(__name__)


class Element(NamedTuple):
    id: int  #: dense id, assigned in enumeration order
    min_length: int  #: length of the shortest generator word for the element
    sigma: Tuple[int, ...]  #: letter transformation
    sections: Tuple[int, ...]  #: element id of the section at every letter


def _components(succ: Sequence[Sequence[int]]) -> List[List[int]]:
    """
    Strongly connected components of a transition system, every component listed after all
    the components it reaches
    """
    size = len(succ)
    index, low = [-1] * size, [0] * size
    on_stack = [False] * size
    stack: List[int] = []
    components: List[List[int]] = []
    counter = 0
    for root in range(size):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        while work:
            node, i = work.pop()
            if i == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            edges = succ[node]
            descended = False
            while i < len(edges):
                t = edges[i]
                i += 1
                if index[t] < 0:
                    work.append((node, i))
                    work.append((t, 0))
                    descended = True
                    break
                if on_stack[t]:
                    low[node] = min(low[node], index[t])
            if descended:
                continue
            if low[node] == index[node]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == node:
                        break
                components.append(component)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return components


class ElementRegistry:
    """
    Canonical store of the distinct transformations found so far.

    ``levels[n]`` are the ids of the products of exactly ``n`` generators,
    ``generators[q]`` the id of state ``q`` and ``identity`` the id of the identity once
    it is realized by a generator or a non-empty word.
    """

    def __init__(self, m: int, fingerprint_depth: int = FINGERPRINT_DEPTH):
        self.m = m
        self.fingerprint_depth = fingerprint_depth
        self.generators: Tuple[int, ...] = ()
        self.identity: Optional[int] = None
        self.levels: List[Tuple[int, ...]] = [()]
        self._sigma: List[Tuple[int, ...]] = []
        self._sections: List[Tuple[int, ...]] = []
        self._min_length: List[int] = []
        self._words: List[GeneratorWord] = []
        self._buckets: Dict[int, List[int]] = defaultdict(list)
        self._intern: Dict[tuple, int] = {}
        self._keys: Dict[tuple, int] = {}
        self._products: Dict[Tuple[int, Optional[int]], int] = {}

    def __len__(self):
        return len(self._sigma)

    def __iter__(self) -> Iterator[Element]:
        return (self.element(i) for i in range(len(self)))

    @property
    def horizon(self) -> int:
        """longest word length enumerated"""
        return len(self.levels) - 1

    def element(self, element_id: int) -> Element:
        return Element(element_id, self._min_length[element_id], self._sigma[element_id], self._sections[element_id])

    def sigma(self, element_id: int) -> Tuple[int, ...]:
        return self._sigma[element_id]

    def sections(self, element_id: int) -> Tuple[int, ...]:
        return self._sections[element_id]

    def min_length(self, element_id: int) -> int:
        return self._min_length[element_id]

    def word_of(self, element_id: int) -> GeneratorWord:
        """
        A shortest generator word for the element, smallest in (generator, parent id) order
        """
        return self._words[element_id]

    def to_json(self) -> str:
        return json.dumps(
            [
                {"id": el.id, "min_length": el.min_length, "sigma": list(el.sigma), "sections": list(el.sections)}
                for el in self
            ]
        )

    def _fingerprints(self, sigma: Sequence[Tuple[int, ...]], succ: Sequence[Tuple[int, ...]]) -> List[int]:
        """
        Interned unfolding of depth ``fingerprint_depth``, equal for bisimilar states of any
        system that shares the intern table
        """
        intern = self._intern
        current = [intern.setdefault((0, row), len(intern)) for row in sigma]
        for depth in range(1, self.fingerprint_depth + 1):
            current = [
                intern.setdefault((depth, sigma[c], *(current[t] for t in succ[c])), len(intern))
                for c in range(len(sigma))
            ]
        return current

    def _bisimilar(self, sigma, succ, c: int, r: int, inside: set, match) -> Optional[set]:
        """
        Pairs (candidate class, element id) reached from ``(c, r)`` inside one component if they
        are all bisimilar, else ``None``.  Successors outside the component are compared by the
        ids already in `match`.
        """
        seen = {(c, r)}
        stack = [(c, r)]
        while stack:
            a, b = stack.pop()
            if sigma[a] != self._sigma[b]:
                return None
            for t, s in zip(succ[a], self._sections[b]):
                if t not in inside:
                    if match[t] != s:
                        return None
                elif (t, s) not in seen:
                    seen.add((t, s))
                    stack.append((t, s))
        return seen

    def _match(self, sigma, succ, fingerprints) -> List[Optional[int]]:
        """
        Registry id of every class of a minimized candidate system, ``None`` for new elements.

        Components are resolved sinks first.  A class on no cycle is looked up by its exact
        ``(sigma, sections)`` key, a cycle is matched as a whole or not at all.
        """
        match: List[Optional[int]] = [None] * len(sigma)
        for component in _components(succ):
            head = component[0]
            if len(component) == 1 and head not in succ[head]:
                sections = tuple(match[t] for t in succ[head])
                if None not in sections:
                    match[head] = self._keys.get((sigma[head], sections))
                continue
            inside = set(component)
            if any(match[t] is None for c in component for t in succ[c] if t not in inside):
                continue
            for element_id in self._buckets.get(fingerprints[head], ()):
                pairs = self._bisimilar(sigma, succ, head, element_id, inside, match)
                if pairs is not None:
                    for c, r in pairs:
                        match[c] = r
                    break
        return match

    def _register(self, sigma, sections, length, fingerprint, word) -> int:
        element_id = len(self._sigma)
        self._sigma.append(sigma)
        self._sections.append(sections)
        self._min_length.append(length)
        self._words.append(word)
        self._buckets[fingerprint].append(element_id)
        self._keys[(sigma, sections)] = element_id
        return element_id


class GrowthTables:
    """
    Word growth ``delta``, spherical growth ``spherical`` and cumulative growth ``cumulative``
    indexed by word length ``0..nmax``.  Level 0 holds the empty word.
    """

    def __init__(
        self,
        delta: Sequence[int],
        spherical: Sequence[int],
        cumulative: Sequence[int],
        truncated: bool = False,
        identity_length: Optional[int] = None,
    ):
        self.delta = list(delta)
        self.spherical = list(spherical)
        self.cumulative = list(cumulative)
        self.truncated = truncated
        self.identity_length = identity_length

    @property
    def nmax(self) -> int:
        return len(self.spherical) - 1

    def rows(self) -> Iterator[Tuple[int, int, int, int]]:
        for n in range(1, self.nmax + 1):
            yield n, self.delta[n], self.spherical[n], self.cumulative[n]

    def sequence(self, column: str = "spherical", start: int = 1) -> IntSequence:
        values = getattr(self, column)
        return IntSequence(values[start:], start=start)

    def with_identity(self) -> "GrowthTables":
        """
        The monoid tables: the identity counts at length 0 and is removed from the level
        where a word first realized it
        """
        if self.identity_length == 0:
            return self
        delta, cumulative = list(self.delta), list(self.cumulative)
        spherical = list(self.spherical)
        delta[0] = spherical[0] = 1
        late = self.identity_length
        for n in range(len(cumulative)):
            if late is None or n < late:
                cumulative[n] += 1
        if late is not None:
            delta[late] -= 1
        return GrowthTables(delta, spherical, cumulative, self.truncated, identity_length=0)

    def to_csv(self) -> str:
        lines = ["n,delta,spherical,cumulative"]
        lines.extend(",".join(map(str, row)) for row in self.rows())
        return "\n".join(lines) + "\n"

    def to_tsv(self, column: str = "spherical") -> str:
        values = getattr(self, column)
        return "".join(f"{n}\t{values[n]}\n" for n in range(1, self.nmax + 1))

    def __repr__(self):
        return f"{self.__class__.__name__}(nmax={self.nmax}, truncated={self.truncated})"


class SemigroupEnumerator:
    """
    Grows an :class:`ElementRegistry` one word length at a time.

    Level ``n`` is built from the candidates ``(g, h)``, ``g`` a generator and ``h`` an element
    of level ``n - 1``.  The candidate ``(g, h)`` writes ``sigma_g(sigma_h(x))`` and its
    section at ``x`` is the candidate ``(pi[g][sigma_h(x)], section of h at x)``.  The
    candidates are minimized as an automaton and matched against the registry one strongly
    connected component at a time, sinks first.  A class on no cycle is found by its exact
    (sigma, section ids) key.  A cycle is tried against its fingerprint bucket with a
    bisimulation walk that stops at the component boundary.
    """

    __log = logging.getLogger(f"{__module__}.{__qualname__}")

    def __init__(
        self,
        automaton: MealyAutomaton,
        element_cap: int = DEFAULT_ELEMENT_CAP,
        fingerprint_depth: int = FINGERPRINT_DEPTH,
    ):
        violations = validate(automaton)
        if violations:
            raise AutomatonError(f"{automaton!r} is invalid: {', '.join(map(str, violations))}")
        self.automaton = automaton
        self.element_cap = element_cap
        self.registry = ElementRegistry(automaton.m, fingerprint_depth)
        self.delta = [0]
        self.spherical = [1]
        self.cumulative = [0]
        self.truncated = False
        self._previous: Tuple[Optional[int], ...] = (None,)

    @property
    def level(self) -> int:
        return len(self.spherical) - 1

    def step(self) -> int:
        """
        Enumerate the next level and return its spherical growth
        """
        aut, reg = self.automaton, self.registry
        n = self.level + 1
        letters = tuple(range(aut.m))

        keys = [(g, h) for g in range(aut.n) for h in self._previous]
        index = {key: i for i, key in enumerate(keys)}
        outputs, transitions = [], []
        for g, h in keys:
            h_sigma = letters if h is None else reg._sigma[h]
            out, succ = [], []
            for x in letters:
                y = h_sigma[x]
                out.append(aut.lam[g][y])
                succ.append(index[(aut.pi[g][y], None if h is None else reg._sections[h][x])])
            outputs.append(tuple(out))
            transitions.append(tuple(succ))

        class_of, count = _refine(outputs, transitions)
        representative = [-1] * count
        for node, cls in enumerate(class_of):
            if representative[cls] < 0:
                representative[cls] = node
        sigma = [outputs[node] for node in representative]
        succ = [tuple(class_of[t] for t in transitions[node]) for node in representative]

        fingerprints = reg._fingerprints(sigma, succ)
        match = reg._match(sigma, succ, fingerprints)

        new = [cls for cls in range(count) if match[cls] is None]
        if len(reg) + len(new) > self.element_cap:
            self.truncated = True
            raise CapacityError(
                f"level {n} would grow the registry to {len(reg) + len(new)} elements, the cap is {self.element_cap}",
                partial=self.tables(),
            )

        next_id = len(reg)
        for cls in new:
            match[cls] = next_id
            next_id += 1
        for cls in new:
            g, h = keys[representative[cls]]
            word = (g,) if h is None else (g,) + reg._words[h]
            reg._register(sigma[cls], tuple(match[t] for t in succ[cls]), n, fingerprints[cls], word)
            if reg.identity is None and self._is_identity(cls, sigma, succ, letters):
                reg.identity = match[cls]
                self.__log.debug("identity realized at length %d as element %d", n, match[cls])

        for node, key in enumerate(keys):
            reg._products[key] = match[class_of[node]]
        if n == 1:
            reg.generators = tuple(reg._products[(g, None)] for g in range(aut.n))

        level_ids = tuple(sorted(set(match)))
        self._previous = level_ids
        reg.levels.append(level_ids)
        self.spherical.append(count)
        self.delta.append(len(new))
        self.cumulative.append(len(reg))
        self.__log.verbose(
            "level %d: %d candidates, %d classes, %d new, %d total", n, len(keys), count, len(new), len(reg)
        )
        return count

    @staticmethod
    def _is_identity(cls, sigma, succ, letters) -> bool:
        seen = {cls}
        stack = [cls]
        while stack:
            c = stack.pop()
            if sigma[c] != letters:
                return False
            for t in succ[c]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return True

    def tables(self) -> GrowthTables:
        identity = self.registry.identity
        return GrowthTables(
            self.delta,
            self.spherical,
            self.cumulative,
            truncated=self.truncated,
            identity_length=None if identity is None else self.registry.min_length(identity),
        )


def enumerate_growth(
    a: MealyAutomaton,
    nmax: int,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> Tuple[GrowthTables, ElementRegistry]:
    """
    Growth tables of the semigroup of `a` up to word length `nmax`.

    Hitting `element_cap` does not raise, the tables returned stop at the last complete
    level and are marked ``truncated``.
    """
    if nmax < 1:
        raise AutomatonError(f"nmax must be at least 1, got {nmax}")
    enumerator = SemigroupEnumerator(a, element_cap=element_cap)
    try:
        for _ in range(nmax):
            enumerator.step()
    except CapacityError as err:
        _log.warning("enumeration of %r stopped at level %d: %s", a, enumerator.level, err)
    _log.debug("enumerated %r to level %d, %d elements", a, enumerator.level, len(enumerator.registry))
    return enumerator.tables(), enumerator.registry


def resolve_word(registry: ElementRegistry, a: MealyAutomaton, word: Sequence[int]) -> int:
    """
    The id of the element the generator word composes to, the rightmost generator acts first
    """
    if not word:
        if registry.identity is None:
            raise HorizonError("the identity is not realized within the enumerated horizon")
        return registry.identity
    if len(word) > registry.horizon:
        raise HorizonError(f"word of length {len(word)} is beyond the enumerated horizon {registry.horizon}")
    element = None
    for g in reversed(word):
        if not 0 <= g < a.n:
            raise AutomatonError(f"generator q{g} is out of range for {a.n} states")
        element = registry._products[(g, element)]
    return element


def words_equal(
    a: MealyAutomaton,
    w1: Sequence[int],
    w2: Sequence[int],
    monoid: bool = False,
    state_cap: int = DEFAULT_STATE_CAP,
) -> bool:
    """
    ``True`` if both generator words compose to the same transformation.

    Decided on the disjoint union of the two word automata, no enumeration horizon is involved.
    """
    if not monoid and (not w1 or not w2):
        raise AutomatonError("the empty word only exists in monoid mode")
    first = word_automaton(a, w1, state_cap=state_cap)
    second = word_automaton(a, w2, state_cap=state_cap)
    partition = refine_partition(disjoint_union(first, second))
    return partition.same(0, first.n)


class RelationCheck(NamedTuple):
    relation: str  #: relation as written
    params: Dict[str, int]  #: parameter values of this instance
    lhs: GeneratorWord  #: instantiated left side
    rhs: GeneratorWord  #: instantiated right side
    holds: bool  #: both sides compose to the same transformation
    anchor: str = ""  #: description of the claim

    def __bool__(self):
        return self.holds

    def __str__(self):
        values = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        status = "holds" if self.holds else "FAILS"
        return f"{status}: {self.relation}" + (f" [{values}]" if values else "")


class RelationReport(NamedTuple):
    checks: Tuple[RelationCheck, ...]  #: every checked instance in order

    @property
    def failures(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check]

    def __bool__(self):
        return not self.failures

    def to_text(self) -> str:
        lines = [f"{len(self.checks)} instances, {len(self.failures)} failures"]
        for check in self.failures:
            lines.append(f"{check}: {format_word(check.lhs)} != {format_word(check.rhs)}")
        return "\n".join(lines) + "\n"


def check_relations(
    a: MealyAutomaton,
    rels: Sequence[RelationTemplate],
    pbound: int = DEFAULT_PBOUND,
    monoid: bool = False,
    labels: Optional[Dict[str, int]] = None,
) -> RelationReport:
    """
    Check every instance of every relation with parameters capped at `pbound`
    """
    if isinstance(rels, RelationSet):
        monoid = monoid or rels.monoid
        labels = labels or rels.labels
        rels = rels.relations

    checks = []
    for rel in rels:
        lhs, rhs = WordTemplate(rel.lhs), WordTemplate(rel.rhs)
        for env in rel.instances(pbound):
            w1, w2 = lhs.instantiate(env, labels), rhs.instantiate(env, labels)
            params = {k: v for k, v in env.items() if k in (rel.params or {})}
            checks.append(RelationCheck(str(rel), params, w1, w2, words_equal(a, w1, w2, monoid=monoid), rel.anchor))
    report = RelationReport(tuple(checks))
    _log.info("checked %d relation instances on %r, %d failures", len(report.checks), a, len(report.failures))
    return report
