"""Model-checking harness for the whole pipeline.

Every connective is pushed through preprocessing, system representation,
simulation and both axiomatizations once; each (connective, model) pair is
then checked independently on a thread pool. Passing is a necessary
condition only: finite models cannot establish validity over all frames.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from functools import partial
from typing import Any, Literal

import numpy as np

from ..axioms import AxiomSet, kozen_park
from ..config import Settings
from ..dev_tools import progress
from ..errors import FlatfixError
from ..pipeline import Axiomatization, Preprocessed, axiomatize_one, preprocess, signature_actions
from ..syntax import SharpSignature, modal_depth
from .evaluate import apply_system, evaluate, iota, lfp_formula, lfp_system
from .model import KripkeModel, all_models, random_model
from .oracle import Verdict, check_axiom, check_rule

_log = logging.getLogger(__name__)

CHECKS = (
    "normal-forms",
    "guard-split",
    "representation",
    "simulation",
    "diagram",
    "cofinality",
    "monotone",
    "soundness",
)
COFINALITY_HORIZON = 6
DIAGRAM_SAMPLES = 4

Outcome = Literal["pass", "sampled", "fail"]
"""``sampled``: passed on a seeded sample of valuations, the model being over budget."""
OUTCOMES: tuple[Outcome, ...] = ("pass", "sampled", "fail")


@dataclass(frozen=True)
class Finding:
    connective: str
    check: str
    model: str
    outcome: Outcome
    detail: str = ""


@dataclass(frozen=True)
class Prepared:
    """Everything the per-model checks need for one connective."""

    signature: SharpSignature
    pre: Preprocessed
    plus: Axiomatization
    kff: AxiomSet

    @property
    def name(self) -> str:
        return self.signature.name


def prepare(sig: SharpSignature, actions: Iterable[str] | None = None) -> Prepared:
    pre = preprocess(sig, actions)
    return Prepared(sig, pre, axiomatize_one(sig, "kffplus", pre.actions), kozen_park(sig))


# -----------------------------------------------------------------------
# Per-model checks
# -----------------------------------------------------------------------


def _subsets(model: KripkeModel):
    shifts = np.arange(model.size)
    for mask in range(1 << model.size):
        yield ((mask >> shifts) & 1).astype(bool)


def _normal_forms(p: Prepared, model: KripkeModel) -> str | None:
    x = p.signature.x
    for value in _subsets(model):
        env = {x: value}
        reference = evaluate(model, p.pre.guarded, env)
        for label, phi in (("∇-form", p.pre.nabla_form), ("pure ∇/x-form", p.pre.pure)):
            if not np.array_equal(evaluate(model, phi, env), reference):
                return f"{label} differs from the guarded body at x = {model.format_states(value)}"
    return None


def _guard_split(p: Prepared, model: KripkeModel) -> str | None:
    sig = p.signature
    full, _ = lfp_formula(model, sig.body, sig.x)
    guarded, _ = lfp_formula(model, p.pre.guarded, sig.x)
    if not np.array_equal(full, guarded):
        return f"lfp of body {model.format_states(full)} != lfp of guarded {model.format_states(guarded)}"
    return None


def _representation(p: Prepared, model: KripkeModel) -> str | None:
    system = p.plus.representation
    assert system is not None and system.point is not None
    x = p.signature.x
    a, _ = lfp_formula(model, p.pre.pure, x)
    b, _ = lfp_system(model, system)
    for z in system.variables:
        expected = a if z == system.point else evaluate(model, system.origins[z], {x: a})
        if not np.array_equal(b[z], expected):
            return f"component {z} is {model.format_states(b[z])}, expected {model.format_states(expected)}"
    return None


def _simulation(p: Prepared, model: KripkeModel) -> str | None:
    system, plus = p.plus.representation, p.plus.simulation
    assert system is not None and plus is not None
    b, _ = lfp_system(model, system)
    c, _ = lfp_system(model, plus)
    expected = iota(b, plus.subsets)
    for y in plus.variables:
        if not np.array_equal(c[y], expected[y]):
            return f"component {y} is {model.format_states(c[y])}, expected {model.format_states(expected[y])}"
    return None


def _diagram(p: Prepared, model: KripkeModel, rng: np.random.Generator) -> str | None:
    system, plus = p.plus.representation, p.plus.simulation
    assert system is not None and plus is not None
    for _ in range(DIAGRAM_SAMPLES):
        w = {z: rng.random(model.size) < 0.5 for z in system.variables}
        left = apply_system(model, plus, iota(w, plus.subsets))
        right = iota(apply_system(model, system, w), plus.subsets)
        for y in plus.variables:
            if not np.array_equal(left[y], right[y]):
                return f"T+ after iota differs from iota after T at {y}"
    return None


def _cofinality(p: Prepared, model: KripkeModel) -> str | None:
    system = p.plus.representation
    assert system is not None and system.point is not None
    k = max(1, modal_depth(p.pre.pure))
    _, c = lfp_formula(model, p.pre.guarded, p.signature.x)
    _, t = lfp_system(model, system)
    row = system.variables.index(system.point)
    for n in range(COFINALITY_HORIZON + 1):
        t_next, c_next = t.at(n + 1)[row], c.at(n + 1)
        if (t_next & ~c_next).any():
            return f"t_{n + 1} is not below c_{n + 1}"
        if (c.at(n) & ~t.at(k * n)[row]).any():
            return f"c_{n} is not below t_{k * n}"
    return None


def _monotone(p: Prepared, model: KripkeModel) -> str | None:
    # lfp_formula and lfp_system raise NonMonotoneError on a decreasing step
    lfp_formula(model, p.signature.body, p.signature.x)
    for system in (p.plus.representation, p.plus.simulation):
        assert system is not None
        lfp_system(model, system)
    return None


def _soundness(p: Prepared, model: KripkeModel, label: str, seed: int, budget: int) -> list[Finding]:
    found = []
    sample_seed = [seed, model.size]
    for axset in (p.kff, p.plus.axioms):
        for axiom in axset.axioms:
            check = f"soundness:{axset.system}:{axiom.name}"
            run = partial(check_axiom, model, axiom, budget, True, sample_seed)
            found.append(_judge(p.name, check, label, run))
        for rule in axset.rules:
            check = f"soundness:{axset.system}:{rule.name}"
            run = partial(check_rule, model, rule, budget, True, sample_seed)
            found.append(_judge(p.name, check, label, run))
    return found


def _judge(connective: str, check: str, label: str, run: Callable[[], Verdict]) -> Finding:
    verdict = run()
    if verdict and verdict.exhaustive:
        return Finding(connective, check, label, "pass")
    if verdict:
        _log.debug(f"{connective} {check} passed {verdict.checked} sampled valuation(s) on {label}")
        return Finding(connective, check, label, "sampled", f"{verdict.checked} sampled valuation(s)")
    detail = f"counterexample {verdict.counterexample} at state {verdict.state}"
    return Finding(connective, check, label, "fail", detail)


def check_model(p: Prepared, model: KripkeModel, label: str, seed: int, budget: int) -> list[Finding]:
    """Run every check for one connective on one model."""
    rng = np.random.default_rng([seed, model.size])
    structural: dict[str, Callable[[], str | None]] = {
        "normal-forms": partial(_normal_forms, p, model),
        "guard-split": partial(_guard_split, p, model),
        "representation": partial(_representation, p, model),
        "simulation": partial(_simulation, p, model),
        "diagram": partial(_diagram, p, model, rng),
        "cofinality": partial(_cofinality, p, model),
        "monotone": partial(_monotone, p, model),
    }
    findings = []
    for check, run in structural.items():
        try:
            problem = run()
        except FlatfixError as e:
            problem = f"{type(e).__name__}: {e}"
        outcome: Outcome = "fail" if problem else "pass"
        findings.append(Finding(p.name, check, label, outcome, problem or ""))
    findings.extend(_soundness(p, model, label, seed, budget))
    return findings


# -----------------------------------------------------------------------
# Report
# -----------------------------------------------------------------------


@dataclass
class SuiteReport:
    connectives: list[str] = field(default_factory=list)
    models: int = 0
    counts: dict[str, Counter] = field(default_factory=dict)
    failures: list[Finding] = field(default_factory=list)
    errors: dict[str, str] = field(default_factory=dict)
    """Connectives that could not be prepared, with the reason."""

    @property
    def ok(self) -> bool:
        return not self.failures and not self.errors

    def record(self, finding: Finding) -> None:
        family = finding.check.split(":", 1)[0]
        self.counts.setdefault(family, Counter())[finding.outcome] += 1
        if finding.outcome == "fail":
            self.failures.append(finding)

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "connectives": self.connectives,
            "models": self.models,
            "counts": {
                check: {o: self.counts.get(check, Counter())[o] for o in OUTCOMES}
                for check in CHECKS
            },
            "failures": [asdict(f) for f in self.failures],
            "errors": self.errors,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"connectives: {', '.join(self.connectives)}",
            f"models: {self.models}",
        ]
        for check in CHECKS:
            counts = self.counts.get(check, Counter())
            lines.append(
                f"  {check:<15} pass {counts['pass']:>6}  sampled {counts['sampled']:>6}  fail {counts['fail']:>4}"
            )
        for name, reason in self.errors.items():
            lines.append(f"error: {name}: {reason}")
        for f in self.failures:
            lines.append(f"FAIL {f.connective} {f.check} on {f.model}: {f.detail}")
        lines.append("result: " + ("ok" if self.ok else "FAILED"))
        lines.append("(finite models give a necessary condition for validity only)")
        return "\n".join(lines) + "\n"


# -----------------------------------------------------------------------
# Runner
# -----------------------------------------------------------------------


def _vocabulary(sigs: Sequence[SharpSignature]) -> tuple[str, ...]:
    return tuple(sorted({p for s in sigs for p in s.params}))


def run_suite(
    sigs: Sequence[SharpSignature],
    models: int = 100,
    max_states: int = 4,
    seed: int = 0,
    exhaustive_2state: bool = False,
    actions: Iterable[str] | None = None,
    settings: Settings | None = None,
    show_progress: bool = False,
) -> SuiteReport:
    """Check every connective on ``models`` seeded random models (and all 2-state ones)."""
    settings = settings or Settings.from_env()
    declared = tuple(sorted(set(actions))) if actions is not None else signature_actions(sigs)
    report = SuiteReport(connectives=[s.name for s in sigs])

    prepared: list[Prepared] = []
    for sig in sigs:
        try:
            prepared.append(prepare(sig, declared))
        except (FlatfixError, ValueError) as e:
            _log.warning(f"cannot prepare {sig.name}: {e}")
            report.errors[sig.name] = f"{type(e).__name__}: {e}"

    props = _vocabulary(sigs)
    tasks: list[tuple[Prepared, str, KripkeModel]] = []
    for i in range(models):
        model = random_model([seed, i], max_states, declared, props)
        tasks.extend((p, f"random#{i}", model) for p in prepared)
    report.models = models
    if exhaustive_2state:
        for p in prepared:
            small = list(all_models(2, p.pre.actions, p.signature.params))
            tasks.extend((p, f"small#{j}", m) for j, m in enumerate(small))
            report.models += len(small)
    _log.info(f"checking {len(prepared)} connective(s) on {report.models} model(s)")

    results: dict[int, list[Finding]] = {}
    with ThreadPoolExecutor(max_workers=settings.max_workers) as executor:
        future_to_task = {
            executor.submit(check_model, p, m, label, seed, settings.valuation_budget): i
            for i, (p, label, m) in enumerate(tasks)
        }
        for future in progress(as_completed(future_to_task), "check", len(tasks), show_progress):
            index = future_to_task[future]
            try:
                results[index] = future.result()
            except Exception as e:
                p, label, _ = tasks[index]
                _log.warning(f"check of {p.name} on {label} crashed: {e}")
                results[index] = [Finding(p.name, "harness", label, "fail", repr(e))]

    # completion order varies; record in task order
    for index in sorted(results):
        for finding in results[index]:
            report.record(finding)
    for f in report.failures:
        _log.warning(f"{f.connective} {f.check} failed on {f.model}: {f.detail}")
    _log.info(f"suite {'passed' if report.ok else 'failed'}: {len(report.failures)} failure(s)")
    return report
