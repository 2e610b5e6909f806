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
The automata of the corpus with their expected growth, relations and normal forms
"""

__all__ = [
    "CorpusEntry",
    "BUILTIN_NAMES",
    "get_builtin",
    "build_bm",
    "bm_automaton",
    "a5_query",
    "label_search_hit",
    "corpus_path",
]

import logging
from functools import lru_cache
from itertools import permutations
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional

from ..automaton import MealyAutomaton, identity_states
from ..exceptions import CorpusError, GrowthError
from ..series.closed_forms import ClosedFormSpec, builtin_closed_form
from ..series.power_series import expand_a5_gamma
from ..series.sequences import IntSequence
from ..words import RelationSet, RelationTemplate
from .normal_forms import NormalFormGrammar
from .search import SearchQuery
from .textformat import load_automaton

_log = logging.getLogger(__name__)

CORPUS_DIR = Path(__file__).parent
BUILTIN_NAMES = ("a1", "a2", "a3", "a4", "a5", "a6", "b3", "b4", "b5")

#: spherical growth of the a5 monoid is matched on this many lengths
A5_PREFIX_LENGTH = 10


class CorpusEntry(NamedTuple):
    name: str
    automaton: MealyAutomaton
    closed_form: ClosedFormSpec  #: expected spherical growth
    relations: Optional[RelationSet] = None
    grammar: Optional[NormalFormGrammar] = None
    search: Optional[SearchQuery] = None  #: query recovering the automaton from its growth
    expected: Optional[IntSequence] = None  #: golden growth values, from ``n = 1``

    def __str__(self):
        return f"{self.name} ({self.automaton.n} states, {self.automaton.m} letters)"


def corpus_path(filename: str) -> Path:
    return CORPUS_DIR / filename


def _read(filename: str) -> Optional[str]:
    path = corpus_path(filename)
    if not path.exists():
        return None
    try:
        return path.read_text(encoding="utf-8")
    except OSError as err:
        raise CorpusError(f"cannot read corpus file {path}: {err.strerror}") from err


def _load(name: str, grammar_name: Optional[str] = None) -> dict:
    try:
        parts = {}
        if corpus_path(f"{name}.mealy").exists():
            parts["automaton"] = load_automaton(corpus_path(f"{name}.mealy"), name)
        text = _read(f"{name}.relations.json")
        if text is not None:
            parts["relations"] = RelationSet.from_json(text)
        text = _read(f"{grammar_name or name}.normal_forms.json")
        if text is not None:
            parts["grammar"] = NormalFormGrammar.from_json(text)
        text = _read(f"{name}.expected.csv")
        if text is not None:
            parts["expected"] = IntSequence.from_csv(text, column="gamma")
        return parts
    except GrowthError as err:
        raise CorpusError(f"corpus entry {name!r} is damaged: {err}") from err


def a5_query(require_identity: bool = False, prefix_length: int = A5_PREFIX_LENGTH) -> SearchQuery:
    """
    3-state, 2-letter automata whose spherical growth follows the a5 series
    """
    coefficients = expand_a5_gamma(prefix_length).to_sequence()
    return SearchQuery(
        n_states=3,
        m_letters=2,
        prefix=coefficients.window(1),
        canonical=True,
        require_identity=require_identity,
        name="a5-",
    )


def label_search_hit(aut: MealyAutomaton) -> List[Dict[str, int]]:
    """
    Ways to name the states of a 3-state hit ``e``, ``f0`` and ``f1``.

    An identity state is named ``e``, the others are tried as ``f0``/``f1`` in both orders.
    Without an identity state every state is tried as ``e``.
    """
    identities = identity_states(aut) or tuple(range(aut.n))
    labels = []
    for e in identities:
        others = [q for q in range(aut.n) if q != e]
        for f0, f1 in permutations(others, 2):
            labels.append({"e": e, "f0": f0, "f1": f1})
    return labels


def bm_automaton(m: int) -> MealyAutomaton:
    """
    f0 swaps x0 and x1 with section f1 at x2, f1 shifts x_i to x_{i+1} and fixes x_{m-1}
    with section f0 at x0
    """
    if m < 3:
        raise CorpusError(f"the bm family starts at m=3, got {m}")
    pi = [[1 if x == 2 else 0 for x in range(m)], [0 if x == 0 else 1 for x in range(m)]]
    lam = [[1, 0] + list(range(2, m)), [min(x + 1, m - 1) for x in range(m)]]
    return MealyAutomaton(pi, lam, name=f"b{m}")


def _bm_relations(m: int) -> RelationSet:
    if m == 3:
        relations = (
            RelationTemplate("f1^3", "f0 f1^2", anchor="b3 presentation"),
            RelationTemplate("f1 f0 f1", "f0^2 f1", anchor="b3 presentation"),
        )
    else:
        outer = {f"p{i}": (0, None) for i in range(1, m - 3)}
        inner = {f"p{i}": (0, None) for i in range(1, m - 2)}
        prefix = "[i=1..m-4: f1 f0^{p[i]}]"
        relations = (
            RelationTemplate(f"{prefix} f1^4", f"{prefix} f1 f0 f1^2", outer or None, {"m": m}, "bm presentation"),
            RelationTemplate(
                "[i=1..m-3: f1 f0^{p[i]}] f1 f0 f1",
                "[i=1..m-3: f1 f0^{p[i]}] f0^2 f1",
                inner,
                {"m": m},
                "bm presentation",
            ),
        )
    return RelationSet(relations, automaton=f"b{m}")


def build_bm(m: int) -> CorpusEntry:
    automaton = bm_automaton(m)
    parts = _load(f"b{m}", grammar_name="bm")
    grammar = parts["grammar"]
    grammar = grammar._replace(name=f"b{m}", constants={**(grammar.constants or {}), "m": m})
    return CorpusEntry(
        name=f"b{m}",
        automaton=automaton,
        closed_form=builtin_closed_form("bm", m=m),
        relations=_bm_relations(m),
        grammar=grammar,
        expected=parts.get("expected"),
    )


@lru_cache(maxsize=None)
def get_builtin(name: str) -> CorpusEntry:
    """
    A corpus entry by name: ``a1`` .. ``a6`` or a member ``b<m>`` (also ``bm(<m>)``) of the bm family
    """
    key = name.strip().lower()
    if key.startswith("b"):
        digits = key[len("bm("):-1] if key.startswith("bm(") and key.endswith(")") else key[1:]
        if not digits.isdigit():
            raise CorpusError(f"unknown corpus entry {name!r}")
        return build_bm(int(digits))
    if key not in BUILTIN_NAMES:
        raise CorpusError(f"unknown corpus entry {name!r}, choose one of {', '.join(BUILTIN_NAMES)} or b<m>")

    parts = _load(key)
    if "automaton" not in parts:
        raise CorpusError(f"corpus entry {key!r} has no automaton file")
    entry = CorpusEntry(
        name=key,
        automaton=parts["automaton"],
        closed_form=builtin_closed_form(key),
        relations=parts.get("relations"),
        grammar=parts.get("grammar"),
        search=a5_query() if key == "a5" else None,
        expected=parts.get("expected"),
    )
    _log.debug("loaded corpus entry %s", entry)
    return entry
