import logging

import pytest

from genuine_smalls.ctx import current_settings
from genuine_smalls.exceptions import SchemeError
from genuine_smalls.verify import (
    ClaimRegistry,
    ClaimResult,
    ClaimSuite,
    Hook,
    Verifier,
    default_verifier,
)
from genuine_smalls.verify.checks import Mismatches, expect, expect_equal
from genuine_smalls.verify.hooks import LoggerHook
from genuine_smalls.verify.report import FAIL, PASS, RECORDED, SKIPPED


def noop():
    return None


class RecordingHook(Hook):
    def __init__(self, name, events):
        self.name = name
        self.events = events

    def before_claim(self, claim):
        self.events.append(("before", self.name, claim.claim_id))

    def after_claim(self, claim, result):
        self.events.append(("after", self.name, result.status))


@pytest.fixture
def verifier():
    v = Verifier()

    @v.claim("demo.pass", topic="holds")
    def holds():
        return "fine"

    @v.claim("demo.fail", topic="does not hold")
    def fails():
        expect_equal("answer", 1, 2)

    @v.claim("demo.recorded", topic="printed value is off")
    def recorded():
        mismatches = Mismatches()
        mismatches.add("A2", 3, 1, key="lattice-remark")
        return mismatches.settle(["A2"])

    @v.claim("demo.unexplained", topic="mismatch without a known key")
    def unexplained():
        mismatches = Mismatches()
        mismatches.add("A2", 3, 1, key="no-such-key")

    @v.claim("demo.library", topic="library error")
    def library():
        raise SchemeError("bad scheme")

    @v.claim("demo.deep", topic="long check", deep=True)
    def deep():
        expect(current_settings().deep, "settings are not deep")
        return "ran"

    return v


def test_registry_orders_and_matches():
    registry = ClaimRegistry()
    registry.add_claim("params.survivors-d-even", noop, "t")
    registry.add_claim("params.survivors-d", noop, "t")
    registry.add_claim("orbits.listed", noop, "t")
    assert [c.claim_id for c in registry.match()] == [
        "orbits.listed",
        "params.survivors-d",
        "params.survivors-d-even",
    ]
    assert [c.claim_id for c in registry.match("params.survivors-d")] == ["params.survivors-d"]
    assert len(registry.match("params")) == 2
    assert registry.match("all") == registry.match()
    assert registry.scopes == ["orbits", "params"]
    with pytest.raises(ValueError):
        registry.add_claim("orbits.listed", noop, "t")


def test_statuses(verifier):
    report = verifier.run("demo")
    statuses = {r.claim_id: r.status for r in report.results}
    assert statuses == {
        "demo.deep": SKIPPED,
        "demo.fail": FAIL,
        "demo.library": FAIL,
        "demo.pass": PASS,
        "demo.recorded": RECORDED,
        "demo.unexplained": FAIL,
    }
    assert report.result("demo.pass").detail == "fine"
    assert "SchemeError" in report.result("demo.library").detail
    assert "expected 1, got 2" in report.result("demo.fail").detail
    assert report.failed
    assert report.exit_code == 1


def test_deep_run(verifier):
    report = verifier.run("demo.deep", deep=True)
    assert report.result("demo.deep").status == PASS
    assert report.result("demo.deep").detail == "ran"
    assert report.deep


def test_recorded_discrepancies_do_not_fail(verifier):
    report = verifier.run("demo.recorded")
    assert report.exit_code == 0
    assert "printed 3, computed 1" in report.result("demo.recorded").detail


def test_report_document(verifier):
    doc = verifier.run("demo").as_dict()
    assert doc["scope"] == "demo"
    assert doc["summary"] == {PASS: 1, FAIL: 3, RECORDED: 1, SKIPPED: 1}
    assert set(doc["results"][0]) == {"claim", "topic", "status", "detail"}


def test_unknown_scope(verifier):
    with pytest.raises(ValueError):
        verifier.run("nothing")


def test_unknown_status():
    with pytest.raises(ValueError):
        ClaimResult("x", "t", "maybe")


def test_errorhandler_overrides(verifier):
    @verifier.errorhandler(SchemeError)
    def out_of_range(claim, exc):
        return SKIPPED

    result = verifier.run("demo.library").result("demo.library")
    assert result.status == SKIPPED
    assert result.detail == "bad scheme"


def test_programming_errors_propagate():
    v = Verifier()
    events = []
    v.add_hook(RecordingHook("verifier", events))

    @v.claim("demo.bug", topic="bug")
    def bug():
        return 1 // 0

    with pytest.raises(ZeroDivisionError):
        v.run()
    assert events == [("before", "verifier", "demo.bug"), ("after", "verifier", FAIL)]


def test_hook_order(verifier):
    events = []
    suite = ClaimSuite("extra")

    @suite.claim("one", topic="suite claim")
    def one():
        return None

    suite.add_hook(RecordingHook("suite", events))
    verifier.add_hook(RecordingHook("verifier", events))
    verifier.register_suite(suite)
    verifier.run("extra")
    assert events == [
        ("before", "verifier", "extra.one"),
        ("before", "suite", "extra.one"),
        ("after", "suite", PASS),
        ("after", "verifier", PASS),
    ]
    assert verifier.get_hook(RecordingHook).name == "verifier"
    events.clear()
    verifier.run("demo.pass")
    assert [e[1] for e in events] == ["verifier", "verifier"]


def test_logger_hook(verifier, caplog):
    caplog.set_level(logging.INFO, logger="tests.verify")
    verifier.add_hook(LoggerHook(logging.getLogger("tests.verify")))
    verifier.run("demo.pass")
    assert any(m.startswith("demo.pass pass ") for m in caplog.messages)


def test_default_verifier_scopes():
    v = default_verifier()
    assert v.registry.scopes == [
        "diagram-sets",
        "ktypes",
        "orbits",
        "params",
        "rootsys",
        "weylrep",
    ]
    assert v.get_hook(LoggerHook) is not None


def test_lattice_remark_is_recorded(settings):
    report = default_verifier().run("rootsys.lattice-remark")
    assert report.result("rootsys.lattice-remark").status == RECORDED


@pytest.mark.slow
def test_full_run_has_no_failures(settings):
    report = default_verifier().run()
    failures = [(r.claim_id, r.detail) for r in report.results if r.status == FAIL]
    assert failures == []
    assert report.result("weylrep.exceptional-j-e6").status == SKIPPED


def test_suite_hooks_and_empty_prefix():
    suite = ClaimSuite("extra", prefix="")
    recording = RecordingHook("suite", [])
    suite.add_hook(recording)
    assert suite.get_hook(RecordingHook) is recording
    suite.remove_hook(recording)
    assert suite.get_hook(RecordingHook) is None

    @suite.claim("bare", topic="no prefix")
    def bare():
        return None

    assert [c.claim_id for c in suite.registry.claims] == ["bare"]


def test_su_rows_pass_on_same_sign_diagrams(settings):
    report = default_verifier().run("orbits.real-forms.A-even-su")
    result = report.result("orbits.real-forms.A-even-su")
    assert result.status == PASS
    assert "su(2,2): 3" in result.detail
