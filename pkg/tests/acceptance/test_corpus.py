import time

import pytest

from mealygrowth import (
    IntSequence,
    SearchQuery,
    a6_growth_series,
    a6_semigroup_series,
    automaton_cells,
    bm_growth,
    closed_form_eval,
    enumerate_growth,
    first_descent,
    get_builtin,
    search_automata,
    verify_entry,
)

ENTRIES = ["a1", "a2", "a3", "a4", "a6", "b3", "b4", "b5"]
A2_PREFIX = [2, 4, 7, 8, 9, 8, 9, 8]


@pytest.mark.parametrize("name", ENTRIES)
def test_verify_entry(name):
    report = verify_entry(name)
    assert report, report.to_text()


def test_verify_a5_formulas():
    report = verify_entry("a5", search=False)
    assert report, report.to_text()


def test_a4_descent(a4_tables):
    spherical = a4_tables.sequence("spherical")
    assert (spherical[26], spherical[27]) == (617, 613)
    assert first_descent(spherical) == 27
    assert list(spherical.window(1, 31)) == [closed_form_eval("a4", n) for n in range(1, 31)]


def test_a6_series(a6_tables):
    growth = a6_growth_series(20).to_sequence(1)
    assert a6_tables.sequence("spherical") == growth
    semigroup = a6_semigroup_series(20).to_sequence(1)
    assert list(semigroup) == [v + 1 for v in growth]


@pytest.mark.parametrize("m, fixture", [(4, "b4_tables"), (5, "b5_tables")])
def test_bm_growth(m, fixture, request):
    tables = request.getfixturevalue(fixture)
    spherical = tables.sequence("spherical")
    assert list(spherical) == [bm_growth(m, n) for n in spherical.indices()]


def test_a2_search_with_fixed_row():
    a2 = get_builtin("a2").automaton
    query = SearchQuery(
        n_states=2,
        m_letters=4,
        prefix=IntSequence(A2_PREFIX, start=1),
        fixed={0: (a2.pi[0], a2.lam[0])},
    )
    result = search_automata(query)
    assert not result.truncated
    assert automaton_cells(a2) in [automaton_cells(aut) for aut in result.hits]


def test_a5_search():
    entry = get_builtin("a5")
    result = search_automata(entry.search)
    assert not result.truncated
    assert result.hits
    assert automaton_cells(entry.automaton) == automaton_cells(result.hits[0])
    report = verify_entry("a5")
    assert report, report.to_text()
    checks = {check.id: check for check in report.checks}
    assert checks["a5.stored"].status == "pass"


def _timed(name, nmax):
    started = time.perf_counter()
    tables, _ = enumerate_growth(get_builtin(name).automaton, nmax)
    assert not tables.truncated
    return time.perf_counter() - started


def test_a1_enumeration_time():
    assert _timed("a1", 20) < 10


def test_bm_enumeration_time():
    assert sum(_timed(name, 20) for name in ["b3", "b4", "b5"]) < 10
