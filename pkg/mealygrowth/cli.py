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
Command line front end, ``mealygrowth <command> ...``

Data goes to stdout as CSV, JSON or tab separated ``n<TAB>value`` lines, the exit code is
0 on success, 1 when a check failed, 2 for usage and input errors and 3 when a cap or the
search budget ran out.
"""

__all__ = ["run", "main", "build_parser"]

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from ._version import __version__
from .automaton import MealyAutomaton, growth_by_minimization
from .const import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_PBOUND,
    DEFAULT_SEARCH_BUDGET,
    EXIT_CAPACITY,
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    ORACLE_NMAX,
)
from .corpus.builtins import get_builtin
from .corpus.normal_forms import enumerate_normal_forms
from .corpus.search import SearchQuery, search_automata
from .corpus.textformat import load_automaton, serialize
from .exceptions import CapacityError, CorpusError, GrowthError, SeriesError
from .logger import configure_default_logger, verbosity_level
from .semigroup import check_relations, enumerate_growth
from .series.analysis import detect_composite
from .series.closed_forms import builtin_closed_form
from .series.power_series import (
    a6_growth_series,
    a6_semigroup_series,
    expand_a5_gamma,
    expand_rational,
)
from .series.sequences import IntSequence, finite_difference, first_descent
from .verify import VERIFY_NAMES, verify_all, verify_entry
from .words import RelationSet

_log = logging.getLogger(__name__)

DEFAULT_PREFIX_LENGTH = 10
SERIES_NAMES = ("a5", "a6", "a6-semigroup", "rational")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be at least 1")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mealygrowth", description="Growth functions of Mealy automata and their semigroups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log at DEBUG, twice for VERBOSE")
    parser.add_argument("--log-file", help="also write the log to this file")
    commands = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    commands.required = True

    cmd = commands.add_parser("growth", help="growth tables of an automaton")
    cmd.add_argument("automaton", help="corpus name or automaton file (.mealy text or .json)")
    cmd.add_argument("--nmax", type=_positive, required=True)
    cmd.add_argument(
        "--direct-oracle", action="store_true", help=f"cross-check with minimized powers up to n={ORACLE_NMAX}"
    )
    cmd.add_argument("--format", choices=("csv", "json", "tsv"), default="csv")
    cmd.add_argument("--element-cap", type=_positive, default=DEFAULT_ELEMENT_CAP)

    cmd = commands.add_parser("verify", help="run the verification suite of a corpus entry")
    cmd.add_argument("name", help=f"one of {', '.join(VERIFY_NAMES)}, b<m> or all")
    cmd.add_argument("--pbound", type=_positive, default=DEFAULT_PBOUND)
    cmd.add_argument("--nmax", type=_positive)
    cmd.add_argument("--no-search", action="store_true", help="skip the automaton search of a5")
    cmd.add_argument("--format", choices=("text", "json"), default="text")
    cmd.add_argument("--element-cap", type=_positive, default=DEFAULT_ELEMENT_CAP)

    cmd = commands.add_parser("series", help="coefficients of a growth series")
    cmd.add_argument("series", choices=SERIES_NAMES)
    cmd.add_argument("file", nargs="?", help="JSON file with numerator and denominator, for rational")
    cmd.add_argument("--nmax", type=_positive, required=True)
    cmd.add_argument("--format", choices=("csv", "tsv"), default="csv")

    cmd = commands.add_parser("diff", help="finite differences of a sequence file")
    cmd.add_argument("csv")
    cmd.add_argument("--order", type=_positive, default=1)
    cmd.add_argument("--column", help="value column, by default the second one")
    cmd.add_argument("--format", choices=("csv", "tsv"), default="csv")

    cmd = commands.add_parser("analyze", help="monotonicity and composite structure of a sequence file")
    cmd.add_argument("csv")
    cmd.add_argument("--column")
    cmd.add_argument("--kmax", type=_positive, default=4)
    cmd.add_argument("--degmax", type=_positive, default=3)

    cmd = commands.add_parser("search", help="automata whose spherical growth starts with a given prefix")
    cmd.add_argument("--states", type=_positive, required=True)
    cmd.add_argument("--letters", type=_positive, required=True)
    cmd.add_argument("--prefix-from", required=True, help="sequence file, a series name or a corpus closed form")
    cmd.add_argument(
        "--length", type=_positive, default=DEFAULT_PREFIX_LENGTH, help="prefix length taken from a series"
    )
    cmd.add_argument("--canonical", action="store_true", help="one table per state relabelling class")
    cmd.add_argument("--relabel-letters", action="store_true", help="with --canonical, identify letter relabellings")
    cmd.add_argument("--require-identity", action="store_true")
    cmd.add_argument("--budget", type=_positive, default=DEFAULT_SEARCH_BUDGET)

    cmd = commands.add_parser("relations", help="check relations on an automaton")
    cmd.add_argument("automaton")
    cmd.add_argument("relations", help="relations JSON file")
    cmd.add_argument("--pbound", type=_positive, default=DEFAULT_PBOUND)

    cmd = commands.add_parser("normal-forms", help="normal form counts against word growth")
    cmd.add_argument("name")
    cmd.add_argument("--nmax", type=_positive, required=True)
    cmd.add_argument("--element-cap", type=_positive, default=DEFAULT_ELEMENT_CAP)
    return parser


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise CorpusError(f"cannot read {path}: {err.strerror}") from err


def _automaton(source: str) -> MealyAutomaton:
    if Path(source).is_file():
        return load_automaton(source)
    return get_builtin(source).automaton


def _sequence(path: str, column: Optional[str]) -> IntSequence:
    key = int(column) if column is not None and column.isdigit() else column
    return IntSequence.from_csv(_read_text(path), column=key)


def _series_sequence(name: str, length: int) -> IntSequence:
    """Prefix ``n = 1 .. length`` from a sequence file, a series or a closed form"""
    if Path(name).is_file():
        return _sequence(name, None).window(1, length + 1)
    if name == "a5":
        return expand_a5_gamma(length).to_sequence(1)
    if name == "a6":
        return a6_growth_series(length).to_sequence(1)
    if name == "a6-semigroup":
        return a6_semigroup_series(length).to_sequence(1)
    return builtin_closed_form(name).sequence(1, length + 1)


def _cmd_growth(args, out: TextIO) -> int:
    aut = _automaton(args.automaton)
    tables, _ = enumerate_growth(aut, args.nmax, element_cap=args.element_cap)
    if args.format == "csv":
        out.write(tables.to_csv())
    elif args.format == "tsv":
        out.write(tables.to_tsv())
    else:
        rows = [dict(zip(("n", "delta", "spherical", "cumulative"), row)) for row in tables.rows()]
        out.write(json.dumps({"automaton": aut.name, "truncated": tables.truncated, "rows": rows}, indent=2) + "\n")
    if tables.truncated:
        return EXIT_CAPACITY

    if args.direct_oracle:
        horizon = min(ORACLE_NMAX, args.nmax)
        oracle = growth_by_minimization(aut, horizon)
        enumerated = tables.spherical[1 : horizon + 1]
        if oracle != enumerated:
            sys.stderr.write(f"minimized powers give {oracle}, enumeration gives {enumerated}\n")
            return EXIT_FAILED
        _log.info("minimized powers agree with the enumeration up to n=%d", horizon)
    return EXIT_OK


def _cmd_verify(args, out: TextIO) -> int:
    search = not args.no_search
    if args.name == "all":
        report = verify_all(pbound=args.pbound, search=search, element_cap=args.element_cap)
    else:
        report = verify_entry(
            args.name, pbound=args.pbound, nmax=args.nmax, search=search, element_cap=args.element_cap
        )
    out.write(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK if report else EXIT_FAILED


def _cmd_series(args, out: TextIO) -> int:
    if args.series == "rational":
        if not args.file:
            raise _UsageError("series rational needs a JSON file with numerator and denominator")
        try:
            data = json.loads(_read_text(args.file))
            numer, denom = data["numerator"], data["denominator"]
        except (ValueError, KeyError, TypeError) as err:
            raise SeriesError(f"{args.file} is not a rational series description: {err}") from err
        series = expand_rational(numer, denom, args.nmax)
    elif args.series == "a5":
        series = expand_a5_gamma(args.nmax)
    elif args.series == "a6":
        series = a6_growth_series(args.nmax)
    else:
        series = a6_semigroup_series(args.nmax)
    out.write(series.to_csv() if args.format == "csv" else series.to_sequence().to_tsv())
    return EXIT_OK


def _cmd_diff(args, out: TextIO) -> int:
    difference = finite_difference(_sequence(args.csv, args.column), args.order)
    out.write(difference.to_csv(("n", "difference")) if args.format == "csv" else difference.to_tsv())
    return EXIT_OK


def _cmd_analyze(args, out: TextIO) -> int:
    s = _sequence(args.csv, args.column)
    descent = first_descent(s)
    out.write(f"monotone: {'no' if descent else 'yes'}\n")
    if descent:
        out.write(f"first descent: n={descent} ({s[descent - 1]} -> {s[descent]})\n")
    verdict = detect_composite(s, kmax=args.kmax, degmax=args.degmax)
    out.write(f"{verdict}\n")
    if verdict.closed_form is not None:
        out.write(verdict.closed_form.to_json() + "\n")
    return EXIT_OK


def _cmd_search(args, out: TextIO) -> int:
    prefix = _series_sequence(args.prefix_from, args.length)
    query = SearchQuery(
        n_states=args.states,
        m_letters=args.letters,
        prefix=prefix,
        canonical=args.canonical,
        relabel_letters=args.relabel_letters,
        require_identity=args.require_identity,
        budget=args.budget,
    )
    found = []

    def emit(aut):
        found.append(aut)
        out.write(serialize(aut.rename(f"hit{len(found)}")) + "\n")
        out.flush()

    result = search_automata(query, on_hit=emit)
    out.write(f"# {len(result.hits)} hits, {result.tested} tested of {result.visited} tables visited\n")
    if result.truncated:
        out.write(f"# budget of {args.budget} tables exhausted, the space holds {query.space()}\n")
        return EXIT_CAPACITY
    return EXIT_OK


def _cmd_relations(args, out: TextIO) -> int:
    aut = _automaton(args.automaton)
    relations = RelationSet.from_json(_read_text(args.relations))
    report = check_relations(aut, relations, pbound=args.pbound)
    out.write(report.to_text())
    return EXIT_OK if report else EXIT_FAILED


def _cmd_normal_forms(args, out: TextIO) -> int:
    entry = get_builtin(args.name)
    if entry.grammar is None:
        raise CorpusError(f"{entry.name} has no normal form grammar")
    tables, _ = enumerate_growth(entry.automaton, args.nmax, element_cap=args.element_cap)
    if tables.truncated:
        raise CapacityError(f"enumeration of {entry.name} stopped at length {tables.nmax}", partial=tables)
    include_empty = entry.grammar.min_length == 0
    counts = enumerate_normal_forms(entry.grammar, args.nmax, include_empty=include_empty)
    delta = tables.with_identity().delta if include_empty else tables.delta

    out.write("n,normal_forms,delta,match\n")
    mismatches = 0
    for n, count in counts.items():
        match = count == delta[n]
        mismatches += not match
        out.write(f"{n},{count},{delta[n]},{'yes' if match else 'no'}\n")
    if mismatches and entry.grammar.exact:
        return EXIT_FAILED
    return EXIT_OK


_COMMANDS = {
    "growth": _cmd_growth,
    "verify": _cmd_verify,
    "series": _cmd_series,
    "diff": _cmd_diff,
    "analyze": _cmd_analyze,
    "search": _cmd_search,
    "relations": _cmd_relations,
    "normal-forms": _cmd_normal_forms,
}


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run one command and return its exit code, output is written to `out` (stdout by default)
    """
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as err:
        sys.stderr.write(f"{err}\n")
        return EXIT_USAGE
    except SystemExit as err:
        # --help and --version
        return EXIT_OK if not err.code else EXIT_USAGE

    if args.verbose or args.log_file:
        configure_default_logger(verbosity_level(args.verbose), filename=args.log_file)

    try:
        return _COMMANDS[args.command](args, out)
    except CapacityError as err:
        sys.stderr.write(f"mealygrowth: {err}\n")
        return EXIT_CAPACITY
    except _UsageError as err:
        sys.stderr.write(f"mealygrowth: {err}\n")
        return EXIT_USAGE
    except GrowthError as err:
        sys.stderr.write(f"mealygrowth: {err}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())
