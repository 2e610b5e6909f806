import pytest

from mealygrowth import (
    BUILTIN_NAMES,
    CorpusError,
    IntSequence,
    MealyAutomaton,
    a5_query,
    automaton_cells,
    bm_automaton,
    build_bm,
    check_relations,
    identity_states,
    get_builtin,
    label_search_hit,
    parse_word,
    words_equal,
)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_entries_have_tables(name):
    entry = get_builtin(name)
    assert entry.name == name
    assert entry.automaton is not None
    assert entry.relations is not None
    assert entry.expected.start == 1
    assert list(entry.closed_form.sequence(1, 9)) == list(entry.expected.window(1, 9))


def test_a5_entry():
    entry = get_builtin("a5")
    assert automaton_cells(entry.automaton) == (0, 1, 0, 2, 1, 4)
    assert identity_states(entry.automaton) == (0,)
    assert entry.relations.labels == {"e": 0, "f0": 1, "f1": 2}
    assert entry.search == a5_query()
    assert entry.grammar.min_length == 0
    assert entry.relations.monoid
    assert str(entry) == "a5 (3 states, 2 letters)"
    report = check_relations(entry.automaton, entry.relations, pbound=4)
    assert report, report.to_text()


def test_a5_query():
    query = a5_query()
    assert (query.n_states, query.m_letters) == (3, 2)
    assert query.canonical and not query.require_identity
    assert query.prefix == IntSequence([3, 6, 11, 18, 28, 41, 59, 82, 112, 149], start=1)
    assert a5_query(require_identity=True, prefix_length=4).prefix == IntSequence([3, 6, 11, 18], start=1)


def test_bm_automaton():
    b3 = bm_automaton(3)
    assert b3.pi == ((0, 0, 1), (0, 1, 1))
    assert b3.lam == ((1, 0, 2), (1, 2, 2))
    assert bm_automaton(5).lam[1] == (1, 2, 3, 4, 4)
    with pytest.raises(CorpusError):
        bm_automaton(2)


BM_NAMES = [("b4", 4), ("bm(4)", 4), ("B5", 5), ("b6", 6)]


@pytest.mark.parametrize("name, m", BM_NAMES)
def test_bm_entries(name, m):
    entry = get_builtin(name)
    assert entry.name == f"b{m}"
    assert entry.automaton == bm_automaton(m)
    assert entry.grammar.constants["m"] == m
    assert entry.closed_form.evaluate(5) == {4: 23, 5: 30, 6: 32}[m]


@pytest.mark.parametrize("name", ["b3", "b4", "b5"])
def test_bm_relations_hold(name):
    entry = get_builtin(name)
    report = check_relations(entry.automaton, entry.relations, pbound=2)
    assert report
    assert len(report.checks) >= 2


UNKNOWN_NAMES = ["a7", "bx", "bm(x)", "", "c3"]


@pytest.mark.parametrize("name", UNKNOWN_NAMES)
def test_unknown_entries(name):
    with pytest.raises(CorpusError):
        get_builtin(name)


def test_label_search_hit():
    with_identity = MealyAutomaton([[0, 0], [1, 1], [2, 0]], [[1, 0], [0, 1], [0, 0]])
    labels = label_search_hit(with_identity)
    assert labels == [{"e": 1, "f0": 0, "f1": 2}, {"e": 1, "f0": 2, "f1": 0}]
    without = MealyAutomaton([[0, 0], [1, 1], [2, 2]], [[1, 0], [0, 0], [1, 1]])
    assert len(label_search_hit(without)) == 6


def test_build_bm():
    entry = build_bm(6)
    assert entry.name == "b6"
    assert entry.automaton.m == 6
    assert entry.expected is None
    assert entry.grammar.constants["m"] == 6
    assert entry.closed_form.evaluate(5) == 32
    assert isinstance(build_bm(4).expected, IntSequence)
    with pytest.raises(CorpusError):
        build_bm(2)


@pytest.mark.parametrize("name", ["a1", "a2", "a3"])
def test_relations_hold(name):
    entry = get_builtin(name)
    report = check_relations(entry.automaton, entry.relations)
    assert report, report.to_text()


def test_a1_corrected_relation():
    a1 = get_builtin("a1").automaton
    assert words_equal(a1, parse_word("f0^2 f1"), parse_word("f0^3"))
    assert not words_equal(a1, parse_word("f0^2 f1"), parse_word("f0^2"))
