import json

import pytest

from mealygrowth import Check, CorpusError, VerificationReport, verify_entry


PASSING = Check("x.growth", "x growth formula", "pass", [1, 2], [1, 2], "n=1..2")
FAILING = Check("x.chain", "chain", "fail", True, False, "n=1..2")
NOTE = Check("x.order", "x growth order n", "diagnostic", "equivalent", "≼", "n=1..2")


def test_check_truth():
    assert PASSING
    assert NOTE
    assert not FAILING


def test_check_text():
    assert str(PASSING).startswith("PASS")
    assert "expected True got False" in str(FAILING)
    assert str(NOTE).startswith("DIAGNOSTIC")


def test_report_summary():
    report = VerificationReport("x", (PASSING, FAILING, NOTE))
    assert not report
    assert report.summary() == {"pass": 1, "fail": 1, "diagnostic": 1}
    assert report.failures == [FAILING]
    assert report.diagnostics == [NOTE]
    assert report.to_text().splitlines()[-1] == "x: 1 passed, 1 failed, 1 diagnostics"


def test_report_json():
    data = json.loads(VerificationReport("x", (PASSING, NOTE)).to_json())
    assert data["report"] == "x"
    assert data["passed"] is True
    assert data["summary"] == {"pass": 1, "fail": 0, "diagnostic": 1}
    assert [check["id"] for check in data["checks"]] == ["x.growth", "x.order"]
    assert data["checks"][0]["expected"] == [1, 2]


def test_report_merge():
    merged = VerificationReport.merge(
        "all", [VerificationReport("x", (PASSING,)), VerificationReport("y", (FAILING, NOTE))]
    )
    assert merged.name == "all"
    assert merged.checks == (PASSING, FAILING, NOTE)
    assert not merged


def test_verify_a2():
    report = verify_entry("a2", nmax=12)
    assert report, report.to_text()
    checks = {check.id: check for check in report.checks}
    assert checks["a2.first-descent"].got == 6
    assert checks["a2.growth"].got[:8] == [2, 4, 7, 8, 9, 8, 9, 8]
    assert checks["a2.order"].status == "diagnostic"
    assert checks["a2.order"].got == "equivalent"
    assert {"a2.growth", "a2.golden", "a2.chain", "a2.oracle", "a2.relations"} <= set(checks)


def test_verify_b3():
    report = verify_entry("b3", nmax=10)
    assert report, report.to_text()
    checks = {check.id: check for check in report.checks}
    assert checks["b3.growth"].got == [2, 4, 6, 9, 12, 16, 20, 25, 30, 36]
    assert checks["b3.relations"].status == "pass"


def test_verify_a5_without_search():
    report = verify_entry("a5", search=False)
    assert report, report.to_text()
    ids = {check.id for check in report.checks}
    assert {"a5.partitions", "a5.nested-series", "a5.recurrence", "a5.doubled", "a5.relations", "a5.growth"} <= ids
    assert "a5.search" not in ids


def test_verify_unknown():
    with pytest.raises(CorpusError):
        verify_entry("a7")
