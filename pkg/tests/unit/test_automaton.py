from itertools import product as cartesian

import pytest
from hypothesis import HealthCheck, given, settings
import hypothesis.strategies as st

from mealygrowth import (
    AutomatonError,
    CapacityError,
    MealyAutomaton,
    apply,
    disjoint_union,
    growth_by_minimization,
    identity_automaton,
    identity_states,
    minimize,
    power,
    product,
    refine_partition,
    validate,
    word_automaton,
)
from tests import automata, words

BASE_SETTINGS = {"max_examples": 100, "deadline": None, "suppress_health_check": [HealthCheck.too_slow]}

A2 = MealyAutomaton([[0, 0, 0, 0], [0, 1, 1, 1]], [[1, 1, 0, 0], [0, 2, 0, 1]], name="a2")
A6 = MealyAutomaton([[0, 0], [1, 2], [1, 2]], [[1, 0], [0, 1], [0, 0]], name="a6")


BAD_TABLES = [
    ([], []),
    ([[]], [[]]),
    ([[0, 0]], [[0, 1], [1, 0]]),
    ([[0, 0], [0]], [[0, 1], [1, 0]]),
]


@pytest.mark.parametrize("pi, lam", BAD_TABLES)
def test_rejects_malformed_tables(pi, lam):
    with pytest.raises(AutomatonError):
        MealyAutomaton(pi, lam)


def test_validate_reports_every_entry():
    aut = MealyAutomaton([[0, 2], [1, 0]], [[0, 1], [3, 1]])
    violations = validate(aut)
    assert [(v.table, v.state, v.letter, v.value) for v in violations] == [("pi", 0, 1, 2), ("lambda", 1, 0, 3)]
    assert validate(A6) == []


APPLY_TESTS = [
    (A6, 0, [0, 1], (1, 0)),
    (A6, 0, [], ()),
    (A6, 1, [1, 1, 0], (1, 0, 0)),
    (A6, 2, [1, 1, 1], (0, 0, 0)),
    (A2, 1, [1, 3], (2, 1)),
]


@pytest.mark.parametrize("aut, state, word, expected", APPLY_TESTS)
def test_apply(aut, state, word, expected):
    assert apply(aut, state, word) == expected


def test_apply_out_of_range():
    with pytest.raises(AutomatonError):
        apply(A6, 3, [0])
    with pytest.raises(AutomatonError):
        apply(A6, 0, [2])


@given(data=st.data())
@settings(**BASE_SETTINGS)
def test_product_composes_right_to_left(data):
    a = data.draw(automata())
    b = data.draw(automata(max_letters=a.m).filter(lambda aut: aut.m == a.m))
    ab = product(a, b)
    qa = data.draw(st.integers(0, a.n - 1))
    qb = data.draw(st.integers(0, b.n - 1))
    word = data.draw(words(a.m))
    assert ab.n == a.n * b.n
    assert apply(ab, qa * b.n + qb, word) == apply(a, qa, apply(b, qb, word))


def test_product_alphabet_mismatch():
    with pytest.raises(AutomatonError):
        product(A2, A6)


def test_power_state_numbering():
    cube = power(A6, 3)
    assert cube.n == 27
    assert cube.name == "a6^3"
    word = [0, 1, 1, 0]
    for q1, q2, q3 in ((0, 1, 2), (2, 2, 0), (1, 0, 1)):
        state = (q1 * 3 + q2) * 3 + q3
        assert apply(cube, state, word) == apply(A6, q1, apply(A6, q2, apply(A6, q3, word)))


def test_power_caps():
    with pytest.raises(CapacityError):
        power(A6, 5, state_cap=100)
    with pytest.raises(AutomatonError):
        power(A6, 0)


def test_refine_partition():
    aut = MealyAutomaton([[0, 0], [1, 1], [2, 2]], [[0, 1], [0, 1], [1, 0]])
    partition = refine_partition(aut)
    assert partition.class_count == 2
    assert partition.same(0, 1)
    assert not partition.same(0, 2)
    assert partition.classes() == [[0, 1], [2]]


@given(aut=automata())
@settings(**BASE_SETTINGS)
def test_minimize_is_idempotent(aut):
    minimal, partition = minimize(aut)
    assert minimal.n == partition.class_count
    again, _ = minimize(minimal)
    assert again.n == minimal.n
    for q in range(aut.n):
        word = [x % aut.m for x in range(q, q + 4)]
        assert apply(aut, q, word) == apply(minimal, partition.class_of[q], word)


def test_growth_by_minimization_a2():
    assert growth_by_minimization(A2, 7) == [2, 4, 7, 8, 9, 8, 9]


@given(aut=automata(), perm_seed=st.randoms(use_true_random=False))
@settings(**BASE_SETTINGS)
def test_growth_ignores_state_names(aut, perm_seed):
    perm = list(range(aut.n))
    perm_seed.shuffle(perm)
    assert growth_by_minimization(aut.relabel_states(perm), 3) == growth_by_minimization(aut, 3)


def test_relabel_states_rejects_non_permutation():
    with pytest.raises(AutomatonError):
        A6.relabel_states([0, 0, 1])


def test_identity_states():
    assert identity_states(identity_automaton(3)) == (0,)
    assert identity_states(A6) == ()
    aut = MealyAutomaton([[0, 1], [1, 1]], [[1, 0], [0, 1]])
    assert identity_states(aut) == (1,)


def test_disjoint_union():
    union = disjoint_union(A6, identity_automaton(2))
    assert union.n == 4
    assert union.pi[3] == (3, 3)
    assert identity_states(union) == (3,)


@given(data=st.data())
@settings(**BASE_SETTINGS)
def test_word_automaton_realizes_the_word(data):
    aut = data.draw(automata())
    gens = data.draw(st.lists(st.integers(0, aut.n - 1), min_size=1, max_size=4))
    word = data.draw(words(aut.m))
    expected = list(word)
    for g in reversed(gens):
        expected = list(apply(aut, g, expected))
    assert list(apply(word_automaton(aut, gens), 0, word)) == expected


def test_dict_round_trip_keeps_name():
    data = A6.to_dict()
    assert data["m"] == 2 and data["n"] == 3
    assert MealyAutomaton.from_dict(data) == A6
    assert MealyAutomaton.from_dict(data).name == "a6"


def test_from_dict_checks_declared_sizes():
    data = A6.to_dict()
    data["n"] = 4
    with pytest.raises(AutomatonError):
        MealyAutomaton.from_dict(data)
    with pytest.raises(AutomatonError):
        MealyAutomaton.from_dict({"pi": [[0]]})


@given(data=st.data())
@settings(**BASE_SETTINGS)
def test_product_is_associative(data):
    a = data.draw(automata(max_states=2))
    b = data.draw(automata(max_states=2, max_letters=a.m).filter(lambda aut: aut.m == a.m))
    c = data.draw(automata(max_states=2, max_letters=a.m).filter(lambda aut: aut.m == a.m))
    left, right = product(product(a, b), c), product(a, product(b, c))
    partition = refine_partition(disjoint_union(left, right))
    for state in range(left.n):
        assert partition.same(state, left.n + state)


def _all_words(m, length):
    for size in range(length + 1):
        yield from cartesian(range(m), repeat=size)


@given(aut=automata())
@settings(**BASE_SETTINGS)
def test_partition_classes_agree_on_words(aut):
    partition = refine_partition(aut)
    for p in range(aut.n):
        for q in range(p + 1, aut.n):
            agree = all(apply(aut, p, word) == apply(aut, q, word) for word in _all_words(aut.m, 6))
            assert agree == partition.same(p, q)
