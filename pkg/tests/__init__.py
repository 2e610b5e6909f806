import hypothesis.strategies as st

from mealygrowth import MealyAutomaton


@st.composite
def automata(draw, max_states=3, max_letters=3):
    """random valid automata, small enough to enumerate a few levels"""
    n = draw(st.integers(1, max_states))
    m = draw(st.integers(1, max_letters))
    rows = st.lists(st.integers(0, n - 1), min_size=m, max_size=m)
    pi = draw(st.lists(rows, min_size=n, max_size=n))
    lam = draw(st.lists(st.lists(st.integers(0, m - 1), min_size=m, max_size=m), min_size=n, max_size=n))
    return MealyAutomaton(pi, lam)


def words(m, max_size=6):
    return st.lists(st.integers(0, m - 1), max_size=max_size)
