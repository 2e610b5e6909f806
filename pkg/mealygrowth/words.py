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
Generator words and the small template language used to write relations and normal forms.

A word is a sequence of generator names separated by whitespace, ``f0 f1 f0``.  Besides
plain names a template may use

* ``1``, the empty word (only meaningful for monoids)
* ``atom^exp`` where ``exp`` is an integer, a parameter name or ``{expression}``
* ``(word)^exp`` for powers of a subword
* ``[i=a..b: word]`` for the product of ``word`` over ``i = a, ..., b`` and
  ``[i=a..b rev: word]`` for the same product taken from ``b`` down to ``a``
* ``$name`` to splice in a word bound to ``name``

Expressions support ``+ - * ^``, parentheses and indexed parameters, ``p[2*i-1]`` reads the
parameter named ``p`` followed by the value of the index, e.g. ``p3``.
"""

__all__ = [
    "GeneratorWord",
    "WordTemplate",
    "RelationTemplate",
    "RelationSet",
    "parse_word",
    "format_word",
    "evaluate_expression",
]

import json
import re
from itertools import product as _cartesian
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from .const import DEFAULT_PBOUND
from .exceptions import GrowthError, RelationError

GeneratorWord = Tuple[int, ...]
Env = Mapping[str, Union[int, GeneratorWord]]

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>\$?[A-Za-z_][A-Za-z_0-9]*)|(?P<range>\.\.)|(?P<op>[()\[\]{}^*+\-:=]))"
)
_GENERATOR_RE = re.compile(r"[fq](?P<index>\d+)")


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise RelationError(f"unexpected character {text[pos:].lstrip()[0]!r} in {text!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, offset: int = 0) -> Tuple[Optional[str], Optional[str]]:
        if self.pos + offset < len(self.tokens):
            return self.tokens[self.pos + offset]
        return None, None

    def take(self, value: Optional[str] = None) -> Tuple[str, str]:
        kind, token = self.peek()
        if kind is None or (value is not None and token != value):
            raise RelationError(f"expected {value or 'a token'!r} in {self.text!r}, found {token!r}")
        self.pos += 1
        return kind, token

    def parse(self):
        tree = self.word()
        if self.pos != len(self.tokens):
            raise RelationError(f"unexpected {self.peek()[1]!r} in {self.text!r}")
        return tree

    def word(self):
        items = []
        while True:
            kind, token = self.peek()
            if kind is None or token in (")", "]"):
                return ("seq", items)
            items.append(self.item())

    def item(self):
        atom = self.atom()
        if self.peek()[1] == "^":
            self.take("^")
            atom = ("pow", atom, self.exponent())
        return atom

    def atom(self):
        kind, token = self.take()
        if kind == "name":
            if token.startswith("$"):
                return ("splice", token[1:])
            return ("gen", token)
        if kind == "int":
            if token != "1":
                raise RelationError(f"{token!r} is not a word, only 1 stands for the empty word ({self.text!r})")
            return ("seq", [])
        if token == "(":
            inner = self.word()
            self.take(")")
            return inner
        if token == "[":
            _, var = self.take()
            self.take("=")
            low = self.expr()
            self.take("..")
            high = self.expr()
            reverse = False
            if self.peek() == ("name", "rev"):
                self.take()
                reverse = True
            self.take(":")
            body = self.word()
            self.take("]")
            return ("prod", var, low, high, reverse, body)
        raise RelationError(f"unexpected {token!r} in {self.text!r}")

    def exponent(self):
        kind, token = self.take()
        if kind == "int":
            return ("int", int(token))
        if kind == "name" and not token.startswith("$"):
            return ("var", token)
        if token == "{":
            value = self.expr()
            self.take("}")
            return value
        raise RelationError(f"bad exponent {token!r} in {self.text!r}")

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            _, op = self.take()
            node = ("bin", op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] == "*":
            self.take()
            node = ("bin", "*", node, self.factor())
        return node

    def factor(self):
        node = self.unary()
        if self.peek()[1] == "^":
            self.take()
            node = ("bin", "^", node, self.factor())
        return node

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return ("neg", self.unary())
        kind, token = self.take()
        if kind == "int":
            return ("int", int(token))
        if kind == "name" and not token.startswith("$"):
            if self.peek()[1] == "[":
                self.take("[")
                index = self.expr()
                self.take("]")
                return ("index", token, index)
            return ("var", token)
        if token == "(":
            node = self.expr()
            self.take(")")
            return node
        raise RelationError(f"unexpected {token!r} in an expression of {self.text!r}")


def _lookup(env: Env, name: str):
    try:
        return env[name]
    except KeyError:
        raise RelationError(f"unbound parameter {name!r}") from None


def _evaluate(node, env: Env) -> int:
    kind = node[0]
    if kind == "int":
        return node[1]
    if kind == "var":
        value = _lookup(env, node[1])
    elif kind == "index":
        value = _lookup(env, f"{node[1]}{_evaluate(node[2], env)}")
    elif kind == "neg":
        return -_evaluate(node[1], env)
    else:
        _, op, left, right = node
        a, b = _evaluate(left, env), _evaluate(right, env)
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a * b
        if b < 0:
            raise RelationError(f"negative power {a}^{b}")
        return a ** b
    if not isinstance(value, int):
        raise RelationError(f"{node[1]!r} is bound to a word, not a number")
    return value


def _resolve(name: str, labels: Optional[Mapping[str, int]]) -> int:
    if labels and name in labels:
        return labels[name]
    match = _GENERATOR_RE.fullmatch(name)
    if match is None:
        raise RelationError(f"unknown generator {name!r}")
    return int(match.group("index"))


class WordTemplate:
    """
    A parsed word template, instantiated with parameter values by :meth:`instantiate`
    """

    def __init__(self, text: str):
        self.text = text
        self._tree = _Parser(text).parse()

    def instantiate(self, env: Optional[Env] = None, labels: Optional[Mapping[str, int]] = None) -> GeneratorWord:
        out: List[int] = []
        self._build(self._tree, env or {}, labels, out)
        return tuple(out)

    def length(self, env: Optional[Env] = None) -> int:
        """
        Length of the instantiated word, computed from the exponents alone
        """
        return self._length(self._tree, env or {})

    def _build(self, node, env, labels, out):
        kind = node[0]
        if kind == "gen":
            out.append(_resolve(node[1], labels))
        elif kind == "splice":
            value = _lookup(env, node[1])
            if isinstance(value, int):
                raise RelationError(f"${node[1]} is bound to a number, not a word")
            out.extend(value)
        elif kind == "seq":
            for child in node[1]:
                self._build(child, env, labels, out)
        elif kind == "pow":
            piece: List[int] = []
            self._build(node[1], env, labels, piece)
            out.extend(piece * self._exponent(node[2], env))
        else:
            for scope in self._product_scopes(node, env):
                self._build(node[5], scope, labels, out)

    def _length(self, node, env) -> int:
        kind = node[0]
        if kind == "gen":
            return 1
        if kind == "splice":
            return len(_lookup(env, node[1]))
        if kind == "seq":
            return sum(self._length(child, env) for child in node[1])
        if kind == "pow":
            return self._length(node[1], env) * self._exponent(node[2], env)
        return sum(self._length(node[5], scope) for scope in self._product_scopes(node, env))

    def _exponent(self, node, env) -> int:
        value = _evaluate(node, env)
        if value < 0:
            raise RelationError(f"negative exponent {value} in {self.text!r}")
        return value

    @staticmethod
    def _product_scopes(node, env) -> Iterator[dict]:
        _, var, low, high, reverse, _ = node
        indices = range(_evaluate(low, env), _evaluate(high, env) + 1)
        for i in reversed(indices) if reverse else indices:
            scope = dict(env)
            scope[var] = i
            yield scope

    def __repr__(self):
        return f"{self.__class__.__name__}({self.text!r})"


def parse_word(text: str, labels: Optional[Mapping[str, int]] = None) -> GeneratorWord:
    """
    Parse a plain generator word like ``"q0 q1 q0"`` or ``"f0 f1^3"``
    """
    return WordTemplate(text).instantiate({}, labels)


def format_word(word: Sequence[int], prefix: str = "f") -> str:
    return " ".join(f"{prefix}{g}" for g in word) if word else "1"


def evaluate_expression(text: Union[str, int], env: Optional[Env] = None) -> int:
    """
    Value of an integer expression such as ``"2*k - 1"``, integers pass through unchanged
    """
    if isinstance(text, int):
        return text
    parser = _Parser(text)
    node = parser.expr()
    if parser.pos != len(parser.tokens):
        raise RelationError(f"unexpected {parser.peek()[1]!r} in {text!r}")
    return _evaluate(node, env or {})


class RelationTemplate(NamedTuple):
    lhs: str  #: left-hand word template
    rhs: str  #: right-hand word template
    params: Optional[Dict[str, Tuple[int, Optional[int]]]] = None  #: inclusive range per parameter, ``None`` upper bound means pbound
    constants: Optional[Dict[str, int]] = None  #: fixed values visible to both sides
    anchor: str = ""  #: short description of the claim the relation belongs to

    def instances(self, pbound: int = DEFAULT_PBOUND) -> Iterator[Dict[str, int]]:
        """
        Every parameter assignment with the ranges capped at `pbound`
        """
        names = sorted(self.params or {})
        ranges = []
        for name in names:
            low, high = self.params[name]
            if not isinstance(low, int) or (high is not None and not isinstance(high, int)):
                raise RelationError(f"range of {name!r} must be integers, got {self.params[name]!r}")
            high = pbound if high is None else min(high, pbound)
            if high < low:
                high = low
            ranges.append(range(low, high + 1))
        for values in _cartesian(*ranges):
            env = dict(self.constants or {})
            env.update(zip(names, values))
            yield env

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"

    def to_dict(self) -> dict:
        data = {"lhs": self.lhs, "rhs": self.rhs}
        if self.params:
            data["params"] = {name: list(rng) for name, rng in self.params.items()}
        if self.constants:
            data["constants"] = dict(self.constants)
        if self.anchor:
            data["anchor"] = self.anchor
        return data

    @classmethod
    def from_dict(cls, data: Mapping) -> "RelationTemplate":
        try:
            params = {name: (rng[0], rng[1]) for name, rng in (data.get("params") or {}).items()}
            return cls(
                lhs=str(data["lhs"]),
                rhs=str(data["rhs"]),
                params=params or None,
                constants=dict(data.get("constants") or {}) or None,
                anchor=str(data.get("anchor", "")),
            )
        except Exception as err:
            raise RelationError(f"invalid relation {data!r}") from err


class RelationSet(NamedTuple):
    relations: Tuple[RelationTemplate, ...]  #: the relations to check
    monoid: bool = False  #: the empty word ``1`` is allowed
    labels: Optional[Dict[str, int]] = None  #: generator names other than ``f<i>``/``q<i>``
    automaton: Optional[str] = None  #: name of the automaton the relations were written for

    def to_json(self) -> str:
        data = {
            "automaton": self.automaton,
            "monoid": self.monoid,
            "labels": self.labels or {},
            "relations": [rel.to_dict() for rel in self.relations],
        }
        return json.dumps(data, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RelationSet":
        try:
            data = json.loads(text)
            relations = tuple(RelationTemplate.from_dict(rel) for rel in data["relations"])
            return cls(
                relations=relations,
                monoid=bool(data.get("monoid", False)),
                labels={str(k): int(v) for k, v in (data.get("labels") or {}).items()} or None,
                automaton=data.get("automaton"),
            )
        except GrowthError:
            raise
        except Exception as err:
            raise RelationError(f"invalid relation file: {err}") from err
