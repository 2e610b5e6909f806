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
Normal-form grammars and the exact counting of the words they generate.

A grammar is a list of word families.  Each family is a :class:`~mealygrowth.words.WordTemplate`
whose parameters range over integer intervals (scalars), over runs of indexed parameters whose
extent depends on the scalars (vectors, ``p1 .. p{2k}``), and over finite lists of words spliced
in with ``$name`` (choices).  Side conditions that exclude single parameter combinations are
listed as data under ``exclude``.

Word length is monotone in every parameter, so enumeration walks each parameter upwards from
its minimum and stops as soon as the shortest completion of the partial assignment is longer
than the horizon.
"""

__all__ = ["VectorSlot", "WordFamily", "NormalFormGrammar", "generate_normal_forms", "enumerate_normal_forms"]

import json
import logging
from itertools import product as _cartesian
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Set, Tuple, Union

from ..exceptions import CorpusError, GrowthError
from ..series.sequences import IntSequence
from ..words import GeneratorWord, WordTemplate, evaluate_expression, parse_word

_log = logging.getLogger(__name__)

Bound = Union[int, str, None]


class VectorSlot(NamedTuple):
    name: str  #: prefix of the component names, ``p`` gives ``p1, p2, ...``
    first: Union[int, str]  #: index of the first component, may be an expression of the scalars
    last: Union[int, str]  #: index of the last component
    minimum: int = 0  #: lower bound of every component
    overrides: Optional[Dict[str, int]] = None  #: index expression -> lower bound for that component

    def components(self, env: Mapping[str, int]) -> List[Tuple[str, int]]:
        first, last = evaluate_expression(self.first, env), evaluate_expression(self.last, env)
        lows = {evaluate_expression(index, env): low for index, low in (self.overrides or {}).items()}
        return [(f"{self.name}{i}", lows.get(i, self.minimum)) for i in range(first, last + 1)]


class WordFamily(NamedTuple):
    template: str  #: word template, see :mod:`mealygrowth.words`
    scalars: Tuple[Tuple[str, int, Bound], ...] = ()  #: ``(name, lower, upper)``, ``None`` upper is unbounded
    vectors: Tuple[VectorSlot, ...] = ()
    choices: Optional[Dict[str, Tuple[str, ...]]] = None  #: splice name -> candidate words
    exclude: Tuple[Dict[str, Union[int, str]], ...] = ()  #: parameter combinations that are not normal forms

    @classmethod
    def from_dict(cls, data: Mapping) -> "WordFamily":
        return cls(
            template=str(data["template"]),
            scalars=tuple((str(name), int(low), high) for name, low, high in data.get("scalars", ())),
            vectors=tuple(
                VectorSlot(
                    name=str(vec["name"]),
                    first=vec["first"],
                    last=vec["last"],
                    minimum=int(vec.get("min", 0)),
                    overrides={str(k): int(v) for k, v in (vec.get("overrides") or {}).items()} or None,
                )
                for vec in data.get("vectors", ())
            ),
            choices={name: tuple(words) for name, words in (data.get("choices") or {}).items()} or None,
            exclude=tuple(dict(combo) for combo in data.get("exclude", ())),
        )

    def to_dict(self) -> dict:
        data = {"template": self.template}
        if self.scalars:
            data["scalars"] = [list(scalar) for scalar in self.scalars]
        if self.vectors:
            data["vectors"] = [
                {"name": v.name, "first": v.first, "last": v.last, "min": v.minimum, "overrides": v.overrides or {}}
                for v in self.vectors
            ]
        if self.choices:
            data["choices"] = {name: list(words) for name, words in self.choices.items()}
        if self.exclude:
            data["exclude"] = [dict(combo) for combo in self.exclude]
        return data


class NormalFormGrammar(NamedTuple):
    name: str  #: corpus entry the grammar belongs to
    families: Tuple[WordFamily, ...]
    constants: Optional[Dict[str, int]] = None  #: fixed values visible to every family, e.g. ``m``
    min_length: int = 1  #: shorter words are not counted, 0 admits the empty word of a monoid
    exact: bool = False  #: counts are claimed to equal the word growth, otherwise they are diagnostics
    anchor: str = ""

    @classmethod
    def from_json(cls, text: Union[str, Mapping]) -> "NormalFormGrammar":
        try:
            data = json.loads(text) if isinstance(text, str) else text
            return cls(
                name=str(data["name"]),
                families=tuple(WordFamily.from_dict(family) for family in data["families"]),
                constants={str(k): int(v) for k, v in (data.get("constants") or {}).items()} or None,
                min_length=int(data.get("min_length", 1)),
                exact=bool(data.get("exact", False)),
                anchor=str(data.get("anchor", "")),
            )
        except GrowthError:
            raise
        except Exception as err:
            raise CorpusError(f"invalid normal form grammar: {err}") from err

    def to_json(self) -> str:
        data = {
            "name": self.name,
            "anchor": self.anchor,
            "exact": self.exact,
            "min_length": self.min_length,
            "constants": self.constants or {},
            "families": [family.to_dict() for family in self.families],
        }
        return json.dumps(data, indent=2) + "\n"


def _assign(slots, env, nmax, lower_bound) -> Iterator[dict]:
    if not slots:
        yield env
        return
    (name, low, high), rest = slots[0], slots[1:]
    value = low
    while (high is None or value <= high) and value <= low + nmax:
        scope = dict(env)
        scope[name] = value
        if lower_bound(scope) > nmax:
            break
        yield from _assign(rest, scope, nmax, lower_bound)
        value += 1


def _excluded(family: WordFamily, env: Mapping, chosen: Mapping[str, str]) -> bool:
    for combo in family.exclude:
        if all(chosen.get(key, env.get(key)) == value for key, value in combo.items()):
            return True
    return False


def _family_words(family: WordFamily, constants: Mapping[str, int], nmax: int) -> Iterator[GeneratorWord]:
    template = WordTemplate(family.template)
    choices = {name: [(text, parse_word(text)) for text in texts] for name, texts in (family.choices or {}).items()}
    shortest = {name: min((word for _, word in options), key=len) for name, options in choices.items()}

    def lower_bound(env):
        full = dict(env)
        for name, low, _ in family.scalars:
            full.setdefault(name, low)
        for vector in family.vectors:
            for component, low in vector.components(full):
                full.setdefault(component, low)
        for name, word in shortest.items():
            full.setdefault(name, word)
        return template.length(full)

    scalar_slots = [
        (name, low, None if high is None else evaluate_expression(high, constants)) for name, low, high in family.scalars
    ]
    names = sorted(choices)
    for scalar_env in _assign(scalar_slots, dict(constants), nmax, lower_bound):
        vector_slots = [
            (component, low, None) for vector in family.vectors for component, low in vector.components(scalar_env)
        ]
        for env in _assign(vector_slots, scalar_env, nmax, lower_bound):
            for picked in _cartesian(*(choices[name] for name in names)):
                chosen = {name: text for name, (text, _) in zip(names, picked)}
                scope = dict(env)
                scope.update((name, word) for name, (_, word) in zip(names, picked))
                if template.length(scope) > nmax or _excluded(family, env, chosen):
                    continue
                yield template.instantiate(scope)


def generate_normal_forms(grammar: NormalFormGrammar, nmax: int) -> Iterator[GeneratorWord]:
    """
    Every word of length ``min_length .. nmax`` the grammar generates, duplicates included
    """
    constants = dict(grammar.constants or {})
    for family in grammar.families:
        for word in _family_words(family, constants, nmax):
            if len(word) >= grammar.min_length:
                yield word


def enumerate_normal_forms(grammar: NormalFormGrammar, nmax: int, include_empty: bool = False) -> IntSequence:
    """
    Number of distinct words of each length ``1 .. nmax`` (``0 .. nmax`` with `include_empty`)
    """
    if nmax < 1:
        raise CorpusError(f"nmax must be at least 1, got {nmax}")
    words: Dict[int, Set[GeneratorWord]] = {}
    for word in generate_normal_forms(grammar, nmax):
        words.setdefault(len(word), set()).add(word)
    start = 0 if include_empty else 1
    counts = IntSequence((len(words.get(n, ())) for n in range(start, nmax + 1)), start=start)
    _log.debug("normal forms of %s up to length %d: %s", grammar.name, nmax, list(counts))
    return counts
