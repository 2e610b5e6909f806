import pytest

from mealygrowth import (
    MealyAutomaton,
    ParseError,
    automaton_from_json,
    automaton_to_json,
    get_builtin,
    load_automaton,
    parse_automaton,
    serialize,
)

A6_TEXT = """\
# growth given by Fibonacci numbers
automaton a6
alphabet 2
states 3
q0: (q0,x1) (q0,x0)
q1: (q1,x0) (q2,x1)   # trailing comment
q2: (q1,x0) (q2,x0)
"""


def test_parse():
    aut = parse_automaton(A6_TEXT)
    assert aut.name == "a6"
    assert aut.pi == ((0, 0), (1, 2), (1, 2))
    assert aut.lam == ((1, 0), (0, 1), (0, 0))


def test_state_lines_in_any_order():
    text = "automaton t\nalphabet 1\nstates 2\nq1: (q0,x0)\n\nq0: (q1,x0)\n"
    assert parse_automaton(text).pi == ((1,), (0,))


def test_serialize_round_trip():
    for name in ("a1", "a2", "a3", "a4", "a6"):
        aut = get_builtin(name).automaton
        again = parse_automaton(serialize(aut))
        assert again == aut
        assert again.name == name
    assert serialize(MealyAutomaton([[0]], [[0]])).startswith("automaton unnamed\n")


PARSE_ERRORS = [
    ("alphabet 2\n", 1, 1),
    ("  automaton a\nstates 2\n", 2, 1),
    ("automaton a\nalphabet x\n", 2, 10),
    ("automaton a\nalphabet 0\n", 2, 10),
    ("automaton a\nalphabet 2\nstates 1\nq0: (q0,x0) (q1,x1)\n", 4, 13),
    ("automaton a\nalphabet 2\nstates 1\nq0: (q0,x0) (q0,x2)\n", 4, 13),
    ("automaton a\nalphabet 2\nstates 1\nq0: (q0,x0) q0,x1\n", 4, 13),
    ("automaton a\nalphabet 2\nstates 1\nq0: (q0,x0)\n", 4, 1),
    ("automaton a\nalphabet 1\nstates 1\nq0: (q0,x0)\nq0: (q0,x0)\n", 5, 1),
    ("automaton a\nalphabet 1\nstates 1\n  q3: (q0,x0)\n", 4, 3),
    ("automaton a\nalphabet 1\nstates 1\nstate 0\n", 4, 1),
    ("automaton a\nalphabet 1\nstates 2\nq0: (q0,x0)\n", 0, 0),
    ("automaton a\nalphabet 1\n", 0, 0),
]


@pytest.mark.parametrize("text, line, column", PARSE_ERRORS)
def test_parse_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_automaton(text)
    assert (info.value.line, info.value.column) == (line, column)
    if line:
        assert str(info.value).startswith(f"line {line}, column {column}")


def test_json_round_trip():
    aut = get_builtin("a6").automaton
    assert automaton_from_json(automaton_to_json(aut)) == aut


JSON_ERRORS = [
    '{"pi": [[0]],',
    '{"pi": [[0]]}',
    '{"pi": [[1]], "lambda": [[0]]}',
    '{"pi": [[0]], "lambda": [[0]], "m": 2}',
    "[]",
]


@pytest.mark.parametrize("text", JSON_ERRORS)
def test_json_errors(text):
    with pytest.raises(ParseError):
        automaton_from_json(text)


def test_load_automaton(tmp_path):
    text_file = tmp_path / "fib.mealy"
    text_file.write_text(A6_TEXT)
    assert load_automaton(text_file).name == "a6"
    assert load_automaton(text_file, name="other").name == "other"

    json_file = tmp_path / "plain.json"
    json_file.write_text('{"pi": [[0, 0]], "lambda": [[1, 0]]}')
    aut = load_automaton(json_file)
    assert aut.name == "plain"
    assert aut.m == 2

    with pytest.raises(ParseError):
        load_automaton(tmp_path / "missing.mealy")
