"""The model-checking harness over the bundled connectives."""

import json

import pytest

from flatfix.config import Settings
from flatfix.semantics import CHECKS, Finding, SuiteReport, check_model, prepare, random_model, run_suite

SINGLE_ACTION = ("delta", "theta", "eta", "ex1", "unguarded", "two_step", "nested", "alt", "const", "cover")


@pytest.fixture(scope="module")
def settings() -> Settings:
    return Settings(valuation_budget=8, max_workers=2)


def test_corpus_passes_every_check(sigs, settings):
    chosen = [sigs[name] for name in SINGLE_ACTION]
    report = run_suite(chosen, models=6, max_states=3, seed=0, settings=settings)
    assert report.ok, report.to_text()
    assert report.models == 6
    assert report.connectives == list(SINGLE_ACTION)
    for check in CHECKS[:-1]:
        assert report.counts[check]["pass"] == 6 * len(SINGLE_ACTION), check
    assert report.counts["soundness"]["fail"] == 0


def test_all_two_state_models(sigs, settings):
    report = run_suite([sigs["delta"], sigs["ex1"]], models=0, exhaustive_2state=True, settings=settings)
    assert report.ok, report.to_text()
    assert report.models == 2 * 68
    assert report.counts["soundness"]["pass"] > 0


def test_polymodal_connective(sigs, settings):
    report = run_suite([sigs["poly"]], models=4, max_states=2, seed=3, settings=settings)
    assert report.ok, report.to_text()


def test_check_model_reports_every_check(ex1):
    p = prepare(ex1)
    model = random_model([0, 1], 2, ["a"], ["p"])
    findings = check_model(p, model, "random#1", seed=0, budget=8)
    families = {f.check.split(":", 1)[0] for f in findings}
    assert families == set(CHECKS)
    assert all(f.outcome != "fail" for f in findings), [f for f in findings if f.outcome == "fail"]


def test_undeclared_action_is_a_report_error(sigs, settings):
    report = run_suite([sigs["delta"]], models=1, actions=["b"], settings=settings)
    assert not report.ok
    assert "delta" in report.errors
    assert "result: FAILED" in report.to_text()


def test_report_documents():
    report = SuiteReport(connectives=["d"], models=1)
    report.record(Finding("d", "soundness:kff:sharp-prefix", "random#0", "pass"))
    report.record(Finding("d", "soundness:kff:sharp-least", "random#0", "sampled", "16 sampled valuation(s)"))
    report.record(Finding("d", "cofinality", "random#0", "fail", "t_1 is not below c_1"))
    assert not report.ok
    doc = json.loads(report.to_json())
    assert doc["counts"]["soundness"] == {"pass": 1, "sampled": 1, "fail": 0}
    assert doc["counts"]["cofinality"]["fail"] == 1
    assert doc["failures"][0]["detail"] == "t_1 is not below c_1"
    text = report.to_text()
    assert "FAIL d cofinality on random#0: t_1 is not below c_1" in text
    assert text.splitlines()[-2] == "result: FAILED"


@pytest.mark.slow
def test_acceptance_size_run_checks_everything(sigs):
    chosen = [sigs[name] for name in SINGLE_ACTION]
    report = run_suite(chosen, models=500, max_states=5, seed=0, actions=["a"], settings=Settings(max_workers=4))
    assert report.ok, report.to_text()
    soundness = report.counts["soundness"]
    assert soundness["fail"] == 0
    expected = 0
    for sig in chosen:
        p = prepare(sig, ["a"])
        expected += len(p.kff.axioms) + len(p.kff.rules) + len(p.plus.axioms.axioms) + len(p.plus.axioms.rules)
    assert soundness["pass"] + soundness["sampled"] == 500 * expected
