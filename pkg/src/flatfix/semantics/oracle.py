"""Validity of emitted axioms and rules on one finite model.

Every valuation of the schematic variables is enumerated: variables in
sorted order, each ranging over the subsets of states in numeric bitset
order. When ``|states| x |variables|`` exceeds the budget, callers may ask
for a seeded sample instead: the all-empty and all-full valuations first,
then ``2**budget - 2`` random ones. This is a necessary condition for
validity only, and a sampled pass is weaker still.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from ..axioms import Axiom, Implication, Rule
from ..config import Settings
from ..errors import BudgetExceededError
from .evaluate import Valuation, evaluate
from .model import KripkeModel, StateSet

_log = logging.getLogger(__name__)

Seed = int | Sequence[int]


@dataclass(frozen=True)
class Verdict:
    valid: bool
    checked: int
    """Number of valuations examined."""
    counterexample: dict[str, tuple[int, ...]] | None = field(default=None, compare=False)
    state: int | None = None
    """A state where the (conclusion) implication fails."""
    exhaustive: bool = True
    """False when only a sample of the valuations was examined."""

    def __bool__(self) -> bool:
        return self.valid


def _resolve_budget(budget: int | None) -> int:
    return budget if budget is not None else Settings.from_env().valuation_budget


def within_budget(model: KripkeModel, count: int, budget: int | None = None) -> bool:
    return model.size * count <= _resolve_budget(budget)


def valuations(
    model: KripkeModel,
    names: Sequence[str],
    budget: int | None = None,
    sample: bool = False,
    seed: Seed = 0,
) -> Iterator[dict[str, StateSet]]:
    names = sorted(names)
    limit = _resolve_budget(budget)
    if within_budget(model, len(names), limit):
        shifts = np.arange(model.size)
        subsets = [((mask >> shifts) & 1).astype(bool) for mask in range(1 << model.size)]
        for choice in itertools.product(subsets, repeat=len(names)):
            yield dict(zip(names, choice))
        return
    if not sample:
        raise BudgetExceededError(
            f"{model.size} state(s) x {len(names)} variable(s) exceeds the valuation budget {limit}"
        )
    _log.debug(f"sampling {1 << limit} valuation(s) of {names} on {model!r}")
    yield {name: model.empty() for name in names}
    yield {name: model.full() for name in names}
    rng = np.random.default_rng(seed)
    for _ in range((1 << limit) - 2):
        bits = rng.random((len(names), model.size)) < 0.5
        yield dict(zip(names, bits))


def failures(model: KripkeModel, imp: Implication, valuation: Valuation) -> StateSet:
    """States where ``lhs`` holds and ``rhs`` does not."""
    return evaluate(model, imp.lhs, valuation) & ~evaluate(model, imp.rhs, valuation)


def _counterexample(
    model: KripkeModel, valuation: Valuation, bad: StateSet, checked: int, exhaustive: bool
) -> Verdict:
    witness = {name: tuple(model.state_ids(vec)) for name, vec in valuation.items()}
    return Verdict(False, checked, witness, model.state_ids(bad)[0], exhaustive)


def check_implication(
    model: KripkeModel,
    imp: Implication,
    budget: int | None = None,
    sample: bool = False,
    seed: Seed = 0,
) -> Verdict:
    names = sorted(imp.variables())
    exhaustive = within_budget(model, len(names), budget)
    checked = 0
    for valuation in valuations(model, names, budget, sample, seed):
        checked += 1
        bad = failures(model, imp, valuation)
        if bad.any():
            return _counterexample(model, valuation, bad, checked, exhaustive)
    return Verdict(True, checked, exhaustive=exhaustive)


def check_axiom(
    model: KripkeModel,
    axiom: Axiom,
    budget: int | None = None,
    sample: bool = False,
    seed: Seed = 0,
) -> Verdict:
    verdict = check_implication(model, axiom.implication, budget, sample, seed)
    if not verdict:
        _log.info(f"axiom {axiom.name} fails on {model!r} at state {verdict.state}")
    return verdict


def check_rule(
    model: KripkeModel,
    rule: Rule,
    budget: int | None = None,
    sample: bool = False,
    seed: Seed = 0,
) -> Verdict:
    """Quasi-equation reading: premises valid everywhere imply the conclusion valid everywhere."""
    exhaustive = within_budget(model, len(rule.schematic), budget)
    checked = 0
    for valuation in valuations(model, rule.schematic, budget, sample, seed):
        checked += 1
        if any(failures(model, p, valuation).any() for p in rule.premises):
            continue
        bad = failures(model, rule.conclusion, valuation)
        if bad.any():
            _log.info(f"rule {rule.name} fails on {model!r}")
            return _counterexample(model, valuation, bad, checked, exhaustive)
    return Verdict(True, checked, exhaustive=exhaustive)
