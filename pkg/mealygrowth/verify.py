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
Verification suite: the growth formulas, series, relations and normal-form counts of every
corpus entry checked against exact enumeration.

Each check carries an anchor naming the claim it verifies.  A check either passes, fails or
is a diagnostic, diagnostics report a comparison whose outcome is not claimed either way.
"""

__all__ = ["PASS", "FAIL", "DIAGNOSTIC", "Check", "VerificationReport", "verify_entry", "verify_all", "VERIFY_NAMES"]

import json
import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Tuple

from .automaton import MealyAutomaton, growth_by_minimization, identity_states
from .const import DEFAULT_ELEMENT_CAP, DEFAULT_PBOUND, ORACLE_NMAX
from .corpus.builtins import CorpusEntry, get_builtin, label_search_hit
from .corpus.normal_forms import enumerate_normal_forms
from .corpus.search import automaton_cells, search_automata
from .exceptions import CapacityError
from .semigroup import GrowthTables, check_relations, enumerate_growth
from .series.analysis import ExponentialFit, detect_composite, order_compare
from .series.closed_forms import builtin_closed_form, fibonacci
from .series.power_series import (
    a5_second_difference_series,
    a6_growth_series,
    a6_rational,
    a6_semigroup_rational,
    a6_semigroup_series,
    check_delta_gamma,
    expand_a5_gamma,
    expand_rational,
    partitions_pow2,
)
from .series.sequences import IntSequence, finite_difference, first_descent

_log = logging.getLogger(__name__)

PASS, FAIL, DIAGNOSTIC = "pass", "fail", "diagnostic"

VERIFY_NAMES = ("a1", "a2", "a3", "a4", "a5", "a6", "b3", "b4", "b5")

#: enumeration horizon per entry, other members of the bm family use ``DEFAULT_VERIFY_NMAX``
VERIFY_RANGES = {"a1": 20, "a2": 30, "a3": 40, "a4": 30, "a6": 24, "b3": 25, "b4": 20, "b5": 20}
DEFAULT_VERIFY_NMAX = 16
NORMAL_FORM_NMAX = 12
FIRST_DESCENT = {"a2": 6, "a3": 10, "a4": 27}
A5_PARTITION_NMAX = 60
A5_RECURRENCE_NMAX = 200
A5_RELATION_PBOUND = 4
A6_FIBONACCI_KMAX = 10

_SHOWN_VALUES = 12


def _plain(value):
    if isinstance(value, IntSequence):
        return list(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def _shown(value) -> str:
    if isinstance(value, list):
        text = ",".join(str(v) for v in value[:_SHOWN_VALUES])
        return text + (",..." if len(value) > _SHOWN_VALUES else "")
    return str(value)


class Check(NamedTuple):
    id: str  #: ``<entry>.<check>``
    anchor: str  #: the claim the check verifies
    status: str  #: ``pass``, ``fail`` or ``diagnostic``
    expected: Any
    got: Any
    range: str = ""  #: indices or parameters covered

    def __bool__(self):
        return self.status != FAIL

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "range": self.range,
            "expected": self.expected,
            "got": self.got,
        }

    def __str__(self):
        line = f"{self.status.upper():<10} {self.id:<28} {self.range:<12} [{self.anchor}]"
        if self.status == PASS:
            return f"{line} {_shown(self.got)}"
        return f"{line} expected {_shown(self.expected)} got {_shown(self.got)}"


class VerificationReport(NamedTuple):
    name: str  #: entry name or ``all``
    checks: Tuple[Check, ...]

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check]

    @property
    def diagnostics(self) -> List[Check]:
        return [check for check in self.checks if check.status == DIAGNOSTIC]

    def __bool__(self):
        return not self.failures

    def summary(self) -> Dict[str, int]:
        counts = {PASS: 0, FAIL: 0, DIAGNOSTIC: 0}
        for check in self.checks:
            counts[check.status] += 1
        return counts

    def to_json(self) -> str:
        data = {
            "report": self.name,
            "passed": bool(self),
            "summary": self.summary(),
            "checks": [check.to_dict() for check in self.checks],
        }
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        counts = self.summary()
        lines = [str(check) for check in self.checks]
        lines.append(
            f"{self.name}: {counts[PASS]} passed, {counts[FAIL]} failed, {counts[DIAGNOSTIC]} diagnostics"
        )
        return "\n".join(lines) + "\n"

    @classmethod
    def merge(cls, name: str, reports: Iterable["VerificationReport"]) -> "VerificationReport":
        return cls(name, tuple(check for report in reports for check in report.checks))


class _Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks: List[Check] = []

    def compare(self, check_id, anchor, expected, got, range_="", diagnostic=False):
        expected, got = _plain(expected), _plain(got)
        status = DIAGNOSTIC if diagnostic else (PASS if expected == got else FAIL)
        self._add(check_id, anchor, status, expected, got, range_)

    def holds(self, check_id, anchor, ok, expected, got, range_=""):
        self._add(check_id, anchor, PASS if ok else FAIL, _plain(expected), _plain(got), range_)

    def _add(self, check_id, anchor, status, expected, got, range_):
        check = Check(f"{self.name}.{check_id}", anchor, status, expected, got, range_)
        if status == FAIL:
            _log.warning("check failed: %s", check)
        else:
            _log.debug("%s", check)
        self.checks.append(check)

    def report(self) -> VerificationReport:
        return VerificationReport(self.name, tuple(self.checks))


def _span(first: int, last: int) -> str:
    return f"n={first}..{last}"


def _enumerate(aut: MealyAutomaton, nmax: int, element_cap: int) -> GrowthTables:
    tables, _ = enumerate_growth(aut, nmax, element_cap=element_cap)
    if tables.truncated:
        raise CapacityError(
            f"{aut.name} stopped at length {tables.nmax} of {nmax}, raise the element cap", partial=tables
        )
    return tables


def _chain_holds(tables: GrowthTables) -> bool:
    total = 0
    for n in range(1, tables.nmax + 1):
        total += tables.delta[n]
        if not tables.delta[n] <= tables.spherical[n] <= tables.cumulative[n]:
            return False
        if tables.cumulative[n] != total or tables.cumulative[n] < tables.cumulative[n - 1]:
            return False
    return True


def _check_common(suite: _Suite, entry: CorpusEntry, tables: GrowthTables, pbound: int):
    aut, name, nmax = entry.automaton, entry.name, tables.nmax
    spherical = tables.sequence("spherical")

    expected = entry.closed_form.sequence(1, nmax + 1)
    suite.compare("growth", f"{name} growth formula", expected, spherical, _span(1, nmax))
    if entry.expected is not None:
        golden = entry.expected.window(1, nmax + 1)
        stop = golden.stop
        suite.compare("golden", f"{name} golden values", golden, spherical.window(1, stop), _span(1, stop - 1))

    chain = _chain_holds(tables)
    suite.holds("chain", "word <= spherical <= cumulative growth", chain, True, chain, _span(1, nmax))

    horizon = min(ORACLE_NMAX, nmax)
    oracle = growth_by_minimization(aut, horizon)
    suite.compare(
        "oracle",
        "automaton growth equals spherical growth",
        spherical.window(1, horizon + 1),
        oracle,
        _span(1, horizon),
    )

    if entry.relations is not None:
        report = check_relations(aut, entry.relations, pbound=pbound)
        anchors = sorted({check.anchor for check in report.checks})
        failed = [f"{check}" for check in report.failures]
        suite.holds(
            "relations",
            ", ".join(anchors) or f"{name} presentation",
            bool(report),
            [],
            failed,
            f"{len(report.checks)} instances, p<={pbound}",
        )


def _check_normal_forms(suite: _Suite, entry: CorpusEntry, tables: GrowthTables):
    grammar = entry.grammar
    if grammar is None:
        return
    nmax = min(NORMAL_FORM_NMAX, tables.nmax)
    if grammar.min_length == 0:
        counts = enumerate_normal_forms(grammar, nmax, include_empty=True)
        delta = IntSequence(tables.with_identity().delta[: nmax + 1])
    else:
        counts = enumerate_normal_forms(grammar, nmax)
        delta = tables.sequence("delta").window(1, nmax + 1)
    suite.compare(
        "normal-forms",
        grammar.anchor or f"{entry.name} normal form",
        delta,
        counts,
        _span(counts.start, nmax),
        diagnostic=not grammar.exact,
    )


def _check_order(suite: _Suite, name: str, spherical: IntSequence, reference: IntSequence, label: str):
    verdict = order_compare(spherical, reference)
    span = _span(1, spherical.stop - 1)
    suite.compare("order", f"{name} growth order {label}", "equivalent", verdict.relation, span, diagnostic=True)


def _reference(nmax: int, value) -> IntSequence:
    return IntSequence((value(n) for n in range(1, nmax + 1)), start=1)


def _verify_a1(suite: _Suite, spherical: IntSequence):
    verdict = detect_composite(spherical)
    exponential = verdict.composite and all(isinstance(form, ExponentialFit) for form in verdict.forms)
    got = str(verdict)
    suite.holds(
        "composite",
        "a1 composite exponential growth",
        verdict.k == 2 and exponential,
        "k=2 with exponential parts",
        got,
        _span(1, spherical.stop - 1),
    )
    _check_order(suite, "a1", spherical, _reference(spherical.stop - 1, lambda n: 2 ** n), "2^n")


def _verify_a6(suite: _Suite, tables: GrowthTables):
    nmax = tables.nmax
    spherical = tables.sequence("spherical")

    numer, denom = a6_rational()
    rational = expand_rational(numer, denom, nmax)
    suite.compare("rational-series", "a6 rational growth series", rational.to_sequence(1), spherical, _span(1, nmax))
    shapes = a6_growth_series(nmax)
    suite.compare(
        "series-shape", "a6 growth series as displayed", rational.to_sequence(), shapes.to_sequence(), _span(0, nmax)
    )

    monoid = a6_semigroup_series(nmax)
    suite.compare(
        "semigroup-series",
        "a6 semigroup series exceeds the automaton series by one",
        [c + 1 for c in rational.integer_coefficients()],
        list(monoid.integer_coefficients()),
        _span(0, nmax),
    )
    numer, denom = a6_semigroup_rational()
    suite.compare(
        "semigroup-rational",
        "a6 semigroup rational series",
        monoid.to_sequence(),
        expand_rational(numer, denom, nmax).to_sequence(),
        _span(0, nmax),
    )
    with_identity = tables.with_identity()
    suite.compare(
        "semigroup-cumulative",
        "a6 semigroup series counts the monoid",
        monoid.to_sequence(),
        IntSequence(with_identity.cumulative),
        _span(0, nmax),
    )
    delta = IntSequence(with_identity.delta)
    suite.holds(
        "word-series",
        "a6 word series is (1-X) times the growth series",
        check_delta_gamma(monoid, delta),
        True,
        True,
        _span(0, nmax),
    )

    # the series coefficient at 0 stands in for the growth at 0
    second = finite_difference(IntSequence([rational.integer_coefficients()[0]] + list(spherical)), 2)
    kmax = min(A6_FIBONACCI_KMAX, (nmax - 2) // 2)
    even = [second[2 * k + 2] for k in range(0, kmax + 1)]
    odd = [second[2 * k + 1] for k in range(1, kmax + 1)]
    suite.compare(
        "second-difference-even",
        "a6 doubled Fibonacci differences",
        [fibonacci(k + 1) for k in range(0, kmax + 1)],
        even,
        f"k=0..{kmax}",
    )
    suite.compare(
        "second-difference-odd",
        "a6 doubled Fibonacci differences",
        [fibonacci(k + 1) for k in range(1, kmax + 1)],
        odd,
        f"k=1..{kmax}",
    )
    _check_order(suite, "a6", spherical, _reference(nmax, lambda n: 2 ** n), "2^n")


def _verify_bm(suite: _Suite, m: int, tables: GrowthTables, element_cap: int):
    nmax = tables.nmax
    spherical = tables.sequence("spherical")

    difference = finite_difference(spherical, m - 2) if m > 2 else spherical
    expected = [(n - m + 1) // 2 + 2 for n in difference.indices()]
    suite.compare("difference", f"b{m} difference of order m-2", expected, difference, _span(difference.start, nmax))
    doubled = [difference[n] == difference[n + 1] for n in range(m - 1, nmax, 2)]
    suite.holds("doubled", f"b{m} doubled differences", all(doubled), True, all(doubled), _span(m - 1, nmax))

    if m > 3:
        smaller = _enumerate(get_builtin(f"b{m - 1}").automaton, nmax - 1, element_cap)
        first = finite_difference(spherical, 1)
        suite.compare(
            "first-difference",
            f"b{m} first difference is the growth of b{m - 1}",
            smaller.sequence("spherical").window(1, nmax),
            IntSequence(first.values, start=first.start - 1),
            _span(2, nmax),
        )

    strict = builtin_closed_form("bm", m=m, convention="strict").sequence(1, nmax + 1)
    anchor = f"b{m} formula with C(n, n) taken as zero"
    suite.compare("strict-convention", anchor, strict, spherical, _span(1, nmax), diagnostic=True)
    _check_order(suite, f"b{m}", spherical, _reference(nmax, lambda n: n ** (m - 1)), f"n^{m - 1}")


def _verify_a5(suite: _Suite, search: bool, element_cap: int) -> None:
    coefficients = expand_a5_gamma(A5_RECURRENCE_NMAX).to_sequence()
    second = finite_difference(coefficients, 2)
    partitions = [partitions_pow2(n) for n in range(2, A5_PARTITION_NMAX + 1)]
    suite.compare(
        "partitions",
        "a5 second difference counts binary partitions",
        partitions,
        second.window(2, A5_PARTITION_NMAX + 1),
        _span(2, A5_PARTITION_NMAX),
    )
    nested = a5_second_difference_series(A5_RECURRENCE_NMAX).to_sequence()
    suite.compare("nested-series", "a5 nested series", nested.window(2), second, _span(2, A5_RECURRENCE_NMAX))

    # the second difference is taken as 1 at 0, 1 and 2
    d2 = [1, 1] + list(second)
    recurrence = [n for n in range(3, A5_RECURRENCE_NMAX + 1) if d2[n] != sum(d2[: (n - 1) // 2 + 1])]
    span = _span(3, A5_RECURRENCE_NMAX)
    suite.holds("recurrence", "a5 second difference recurrence", not recurrence, [], recurrence, span)
    doubled = [n for n in range(2, A5_PARTITION_NMAX + 1, 2) if d2[n] != d2[n - 1]]
    suite.holds("doubled", "a5 doubled second differences", not doubled, [], doubled, _span(2, A5_PARTITION_NMAX))

    entry = get_builtin("a5")
    hits: List[MealyAutomaton] = [entry.automaton]
    if search:
        query = entry.search
        result = search_automata(query)
        if result.truncated:
            raise CapacityError(f"the a5 search ran out of budget after {result.visited} tables", partial=result)
        prefix = f"n=1..{len(query.prefix)}"
        suite.holds("search", "a5 exists among 3-state automata", bool(result), ">=1 hits", len(result.hits), prefix)
        with_identity = [aut for aut in result.hits if identity_states(aut)]
        count = len(with_identity)
        suite.compare("search-identity", "a5 hits with an identity state", ">=1 hits", count, prefix, diagnostic=True)
        stored = automaton_cells(entry.automaton) in [automaton_cells(aut) for aut in result.hits]
        suite.holds("stored", "stored a5 table is a search hit", stored, True, stored, prefix)
        hits.extend(result.hits)

    failing = []
    for aut in hits:
        labellings = label_search_hit(aut)
        if not any(check_relations(aut, entry.relations, A5_RELATION_PBOUND, labels=lab) for lab in labellings):
            failing.append(aut.name)
    suite.holds("relations", "a5 binary carry family", not failing, [], failing, f"{len(hits)} hits, k<=4, p<=1")

    chosen = next((aut for aut in hits if identity_states(aut)), hits[0])
    nmax = len(entry.search.prefix)
    tables = _enumerate(chosen, nmax, element_cap)
    got = tables.sequence("spherical")
    suite.compare("growth", "a5 growth series", coefficients.window(1, nmax + 1), got, _span(1, nmax))
    _check_normal_forms(suite, entry, tables)


def verify_entry(
    name: str,
    pbound: int = DEFAULT_PBOUND,
    nmax: Optional[int] = None,
    search: bool = True,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> VerificationReport:
    """
    Run every check that applies to the corpus entry `name`
    """
    entry = get_builtin(name)
    suite = _Suite(entry.name)
    if entry.name == "a5":
        _verify_a5(suite, search, element_cap)
        return suite.report()

    nmax = nmax or VERIFY_RANGES.get(entry.name, DEFAULT_VERIFY_NMAX)
    tables = _enumerate(entry.automaton, nmax, element_cap)
    spherical = tables.sequence("spherical")
    _check_common(suite, entry, tables, pbound)

    if entry.name in FIRST_DESCENT:
        expected = FIRST_DESCENT[entry.name]
        got = first_descent(spherical)
        suite.compare("first-descent", f"{entry.name} growth is not monotone", expected, got, _span(1, nmax))
    if entry.name == "a1":
        _verify_a1(suite, spherical)
    elif entry.name == "a2":
        _check_order(suite, "a2", spherical, _reference(nmax, lambda n: 9), "constant")
    elif entry.name == "a3":
        _check_order(suite, "a3", spherical, _reference(nmax, lambda n: n), "n")
    elif entry.name == "a4":
        _check_order(suite, "a4", spherical, _reference(nmax, lambda n: n * n), "n^2")
    elif entry.name == "a6":
        _verify_a6(suite, tables)
    else:
        _verify_bm(suite, entry.automaton.m, tables, element_cap)
    _check_normal_forms(suite, entry, tables)

    report = suite.report()
    _log.info("verified %s: %s", entry.name, report.summary())
    return report


def verify_all(
    pbound: int = DEFAULT_PBOUND, search: bool = True, element_cap: int = DEFAULT_ELEMENT_CAP
) -> VerificationReport:
    reports = [verify_entry(name, pbound=pbound, search=search, element_cap=element_cap) for name in VERIFY_NAMES]
    return VerificationReport.merge("all", reports)
