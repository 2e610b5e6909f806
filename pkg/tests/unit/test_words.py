import json

import pytest

from mealygrowth import (
    RelationError,
    RelationSet,
    RelationTemplate,
    WordTemplate,
    evaluate_expression,
    format_word,
    parse_word,
)


PLAIN_WORDS = [
    ("f0 f1 f0", (0, 1, 0)),
    ("q1 q0", (1, 0)),
    ("1", ()),
    ("", ()),
    ("f2^3", (2, 2, 2)),
    ("(f0 f1)^2 f2", (0, 1, 0, 1, 2)),
    ("f0^0 f1", (1,)),
    ("f10", (10,)),
]


@pytest.mark.parametrize("text, expected", PLAIN_WORDS)
def test_parse_word(text, expected):
    assert parse_word(text) == expected


def test_parse_word_labels():
    assert parse_word("e f0 e", {"e": 2}) == (2, 0, 2)


TEMPLATES = [
    ("f0 f1^{2*p+1} f0", {"p": 1}, (0, 1, 1, 1, 0)),
    ("f0 f1^p", {"p": 0}, (0,)),
    ("[i=1..3: f0^i]", {}, (0,) * 6),
    ("[i=1..2: f1^i f0]", {}, (1, 0, 1, 1, 0)),
    ("[i=1..2 rev: f1^i f0]", {}, (1, 1, 0, 1, 0)),
    ("[i=1..0: f1]", {}, ()),
    ("[i=1..k: f0^{p[i]} f1]", {"k": 2, "p1": 2, "p2": 0}, (0, 0, 1, 1)),
    ("[i=1..2: f0^{p[2*i-1]} f1^{p[2*i]}]", {"p1": 1, "p2": 0, "p3": 2, "p4": 1}, (0, 0, 0, 1)),
    ("f1^{2^i*3 + 2^i - 1}", {"i": 1}, (1,) * 7),
    ("$a f1 $b", {"a": (0, 0), "b": ()}, (0, 0, 1)),
]


@pytest.mark.parametrize("text, env, expected", TEMPLATES)
def test_instantiate(text, env, expected):
    template = WordTemplate(text)
    assert template.instantiate(env) == expected
    assert template.length(env) == len(expected)


BAD_TEMPLATES = [
    ("f0 2", {}),
    ("x0 f1", {}),
    ("f0^p", {}),
    ("f0^{p-3}", {"p": 1}),
    ("(f0 f1", {}),
    ("f0 f1)", {}),
    ("$s f0", {"s": 3}),
    ("f0^s", {"s": (0, 1)}),
    ("f0 @", {}),
]


@pytest.mark.parametrize("text, env", BAD_TEMPLATES)
def test_bad_templates(text, env):
    with pytest.raises(RelationError):
        WordTemplate(text).instantiate(env)


EXPRESSIONS = [
    ("2*k - 1", {"k": 3}, 5),
    ("2^3", {}, 8),
    ("-2 + 5", {}, 3),
    ("2^i*p[k-i] + 2^i - 1", {"i": 1, "k": 2, "p1": 4}, 9),
    ("(m - 1) * 2", {"m": 4}, 6),
    (7, {}, 7),
]


@pytest.mark.parametrize("text, env, expected", EXPRESSIONS)
def test_evaluate_expression(text, env, expected):
    assert evaluate_expression(text, env) == expected


def test_evaluate_expression_errors():
    with pytest.raises(RelationError):
        evaluate_expression("2 3")
    with pytest.raises(RelationError):
        evaluate_expression("k + 1")
    with pytest.raises(RelationError):
        evaluate_expression("2^(0-1)")


def test_format_word():
    assert format_word((0, 1, 1)) == "f0 f1 f1"
    assert format_word((2,), prefix="q") == "q2"
    assert format_word(()) == "1"


INSTANCE_RANGES = [
    ({"p": (0, None)}, 3, [0, 1, 2, 3]),
    ({"p": (2, 5)}, 3, [2, 3]),
    ({"p": (1, 2)}, 8, [1, 2]),
    ({"p": (5, None)}, 3, [5]),
]


@pytest.mark.parametrize("params, pbound, expected", INSTANCE_RANGES)
def test_relation_instances(params, pbound, expected):
    rel = RelationTemplate("f0 f1^p", "f1", params=params)
    assert [env["p"] for env in rel.instances(pbound)] == expected


def test_relation_instances_with_constants():
    rel = RelationTemplate("f0^p", "f0^q", params={"p": (0, 1), "q": (0, 1)}, constants={"m": 4})
    envs = list(rel.instances(5))
    assert len(envs) == 4
    assert all(env["m"] == 4 for env in envs)
    assert list(RelationTemplate("f0", "f1").instances()) == [{}]


def test_relation_instances_bad_range():
    with pytest.raises(RelationError):
        list(RelationTemplate("f0^p", "f1", params={"p": ("a", 2)}).instances())


def test_relation_set_json():
    rels = RelationSet(
        (
            RelationTemplate("f0^2", "1", anchor="involution"),
            RelationTemplate("f0 f1^p", "f1", params={"p": (1, None)}, constants={"m": 3}),
        ),
        monoid=True,
        labels={"e": 2},
        automaton="toy",
    )
    data = json.loads(rels.to_json())
    assert data["monoid"] is True
    assert data["relations"][1]["params"] == {"p": [1, None]}
    again = RelationSet.from_json(rels.to_json())
    assert again == rels


INVALID_RELATION_FILES = [
    "not json",
    '{"monoid": true}',
    '{"relations": [{"lhs": "f0"}]}',
    '{"relations": [{"lhs": "f0", "rhs": "f1", "params": {"p": 3}}]}',
]


@pytest.mark.parametrize("text", INVALID_RELATION_FILES)
def test_relation_set_invalid(text):
    with pytest.raises(RelationError):
        RelationSet.from_json(text)
