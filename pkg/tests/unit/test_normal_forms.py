import pytest

from mealygrowth import (
    CorpusError,
    IntSequence,
    NormalFormGrammar,
    VectorSlot,
    WordFamily,
    enumerate_normal_forms,
    generate_normal_forms,
    get_builtin,
)


def _grammar(*families, **kwargs):
    return NormalFormGrammar("toy", tuple(families), **kwargs)


def test_scalar_family():
    grammar = _grammar(WordFamily("f0^a f1^b", scalars=(("a", 0, None), ("b", 1, None))))
    assert list(enumerate_normal_forms(grammar, 4)) == [1, 2, 3, 4]


def test_bounded_scalar():
    grammar = _grammar(WordFamily("f0^a f1^b", scalars=(("a", 0, 1), ("b", 1, "m - 2"))), constants={"m": 4})
    assert list(enumerate_normal_forms(grammar, 4)) == [1, 2, 1, 0]


def test_vector_family():
    family = WordFamily(
        "[i=1..k: f0^{p[i]} f1]", scalars=(("k", 1, 2),), vectors=(VectorSlot("p", 1, "k"),)
    )
    assert list(enumerate_normal_forms(_grammar(family), 4)) == [1, 2, 3, 4]


def test_vector_overrides():
    family = WordFamily(
        "[i=1..k: f0^{p[i]} f1]",
        scalars=(("k", 1, 2),),
        vectors=(VectorSlot("p", 1, "k", overrides={"k": 1}),),
    )
    assert list(enumerate_normal_forms(_grammar(family), 4)) == [0, 1, 2, 3]


def test_vector_components():
    slot = VectorSlot("p", 1, "2*k", minimum=1, overrides={"1": 0, "2*k": 0})
    assert slot.components({"k": 2}) == [("p1", 0), ("p2", 1), ("p3", 1), ("p4", 0)]


def test_choices_and_exclusions():
    family = WordFamily(
        "f0^a $s", scalars=(("a", 0, None),), choices={"s": ("f1", "f1^2")}, exclude=({"a": 0, "s": "f1"},)
    )
    assert list(enumerate_normal_forms(_grammar(family), 3)) == [0, 2, 2]


def test_duplicates_are_counted_once():
    family = WordFamily("f0^a", scalars=(("a", 1, None),))
    grammar = _grammar(family, family)
    assert len(list(generate_normal_forms(grammar, 3))) == 6
    assert list(enumerate_normal_forms(grammar, 3)) == [1, 1, 1]


def test_empty_word():
    grammar = _grammar(WordFamily("f1^a", scalars=(("a", 0, None),)), min_length=0)
    assert enumerate_normal_forms(grammar, 3, include_empty=True) == IntSequence([1, 1, 1, 1], start=0)
    assert enumerate_normal_forms(grammar, 3) == IntSequence([1, 1, 1], start=1)
    assert () not in generate_normal_forms(grammar._replace(min_length=1), 3)


def test_a4_first_lengths():
    grammar = get_builtin("a4").grammar
    assert grammar.exact
    assert list(enumerate_normal_forms(grammar, 3)) == [2, 4, 6]
    assert set(w for w in generate_normal_forms(grammar, 2) if len(w) == 2) == {
        (1, 1), (1, 0), (0, 0), (0, 1)
    }


def test_json_round_trip():
    grammar = get_builtin("a4").grammar
    assert NormalFormGrammar.from_json(grammar.to_json()) == grammar
    vector = _grammar(
        WordFamily("[i=1..k: f0^{p[i]} f1]", scalars=(("k", 1, 2),), vectors=(VectorSlot("p", 1, "k", 1),))
    )
    assert NormalFormGrammar.from_json(vector.to_json()) == vector


INVALID_GRAMMARS = [
    "{}",
    '{"name": "x", "families": [{"scalars": []}]}',
    '{"name": "x", "families": [{"template": "f0", "scalars": [["a"]]}]}',
    "not json",
]


@pytest.mark.parametrize("text", INVALID_GRAMMARS)
def test_invalid_grammar(text):
    with pytest.raises(CorpusError):
        NormalFormGrammar.from_json(text)


def test_nmax_must_be_positive():
    with pytest.raises(CorpusError):
        enumerate_normal_forms(get_builtin("a4").grammar, 0)
