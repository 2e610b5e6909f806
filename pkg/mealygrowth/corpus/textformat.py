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
Reading and writing automata as text and JSON.

Text format::

    automaton a6
    alphabet 2
    states 3
    q0: (q0,x1) (q0,x0)     # one pair (next state, output) per letter
    q1: (q1,x0) (q2,x1)
    q2: (q1,x0) (q2,x0)
"""

__all__ = [
    "parse_automaton",
    "serialize",
    "automaton_to_json",
    "automaton_from_json",
    "load_automaton",
]

import json
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..automaton import MealyAutomaton, validate
from ..exceptions import GrowthError, ParseError

HEADER_RE = re.compile(r"(?P<key>automaton|alphabet|states)\s+(?P<value>\S+)\s*$")
STATE_RE = re.compile(r"q(?P<state>\d+)\s*:")
PAIR_RE = re.compile(r"\(\s*q(?P<state>\d+)\s*,\s*x(?P<letter>\d+)\s*\)")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_automaton(text: str) -> MealyAutomaton:
    """
    Parse the text format, errors carry the 1-based line and column
    """
    header: Dict[str, str] = {}
    rows: Dict[int, Tuple[List[int], List[int]]] = {}
    m = n = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        body = line.strip()
        if not body:
            continue
        column = len(line) - len(line.lstrip()) + 1

        if len(header) < 3:
            expected = ("automaton", "alphabet", "states")[len(header)]
            match = HEADER_RE.match(body)
            if match is None or match.group("key") != expected:
                raise ParseError(f"expected '{expected} <value>'", line_no, column)
            header[expected] = match.group("value")
            if expected != "automaton":
                try:
                    value = int(header[expected])
                except ValueError:
                    raise ParseError(f"{expected} needs a positive integer", line_no, column + len(expected) + 1) from None
                if value < 1:
                    raise ParseError(f"{expected} needs a positive integer", line_no, column + len(expected) + 1)
                if expected == "alphabet":
                    m = value
                else:
                    n = value
            continue

        match = STATE_RE.match(body)
        if match is None:
            raise ParseError("expected a state line 'q<i>: (q<j>,x<k>) ...'", line_no, column)
        state = int(match.group("state"))
        if state >= n:
            raise ParseError(f"state q{state} is out of range for {n} states", line_no, column)
        if state in rows:
            raise ParseError(f"state q{state} is defined twice", line_no, column)

        pi_row, lam_row = [], []
        pos = match.end()
        offset = column - 1
        while True:
            while pos < len(body) and body[pos].isspace():
                pos += 1
            if pos == len(body):
                break
            pair = PAIR_RE.match(body, pos)
            if pair is None:
                raise ParseError("expected a pair '(q<j>,x<k>)'", line_no, offset + pos + 1)
            target, letter = int(pair.group("state")), int(pair.group("letter"))
            if target >= n:
                raise ParseError(f"state q{target} is out of range for {n} states", line_no, offset + pos + 1)
            if letter >= m:
                raise ParseError(f"letter x{letter} is out of range for an alphabet of {m}", line_no, offset + pos + 1)
            pi_row.append(target)
            lam_row.append(letter)
            pos = pair.end()
        if len(pi_row) != m:
            raise ParseError(f"q{state} needs {m} pairs, found {len(pi_row)}", line_no, column)
        rows[state] = pi_row, lam_row

    if len(header) < 3:
        missing = ("automaton", "alphabet", "states")[len(header)]
        raise ParseError(f"missing '{missing}' header")
    if len(rows) != n:
        missing = sorted(set(range(n)) - set(rows))
        raise ParseError(f"no line for states {', '.join(f'q{q}' for q in missing)}")

    return MealyAutomaton(
        [rows[q][0] for q in range(n)], [rows[q][1] for q in range(n)], name=header["automaton"]
    )


def serialize(aut: MealyAutomaton) -> str:
    lines = [f"automaton {aut.name or 'unnamed'}", f"alphabet {aut.m}", f"states {aut.n}"]
    for q in range(aut.n):
        pairs = " ".join(f"(q{aut.pi[q][x]},x{aut.lam[q][x]})" for x in range(aut.m))
        lines.append(f"q{q}: {pairs}")
    return "\n".join(lines) + "\n"


def automaton_to_json(aut: MealyAutomaton) -> str:
    return json.dumps(aut.to_dict())


def automaton_from_json(text: str) -> MealyAutomaton:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", err.lineno, err.colno) from err
    try:
        aut = MealyAutomaton.from_dict(data)
    except GrowthError as err:
        raise ParseError(str(err)) from err
    except Exception as err:
        raise ParseError(f"invalid automaton description: {err}") from err
    violations = validate(aut)
    if violations:
        raise ParseError(", ".join(map(str, violations)))
    return aut


def load_automaton(path: Union[str, Path], name: Optional[str] = None) -> MealyAutomaton:
    """
    Read an automaton file, ``.json`` files use the JSON form and everything else the text form
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err.strerror}") from err
    aut = automaton_from_json(text) if path.suffix == ".json" else parse_automaton(text)
    if name is not None or aut.name is None:
        aut = aut.rename(name or path.stem)
    return aut
