"""Evaluation of formulas and modal systems on finite Kripke models.

Least fixpoints are reached by iteration from the empty set; on a finite
model the chain of approximants stabilizes after at most ``|states|`` strict
steps per variable.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..errors import IterationBoundError, NonMonotoneError, UnassignedVariableError
from ..syntax import And, Bot, Box, Dia, Formula, Lit, Nabla, Neg, Or, Sharp, Top, Var, render
from ..systems import ModalSystem
from .model import KripkeModel, StateSet

_log = logging.getLogger(__name__)

Valuation = Mapping[str, StateSet]


def diamond(relation: npt.NDArray[np.bool_], target: StateSet) -> StateSet:
    """States with some successor in ``target``."""
    return (relation & target[None, :]).any(axis=1)


def box(relation: npt.NDArray[np.bool_], target: StateSet) -> StateSet:
    return ~diamond(relation, ~target)


def evaluate(model: KripkeModel, phi: Formula, valuation: Valuation | None = None) -> StateSet:
    """Truth set of ``phi``; ``valuation`` takes precedence over the model's own."""
    return _Evaluator(model, valuation or {}).run(phi)


class _Evaluator:
    def __init__(self, model: KripkeModel, valuation: Valuation):
        self.model = model
        self.valuation = valuation

    def lookup(self, name: str) -> StateSet:
        found = self.valuation.get(name)
        if found is None:
            found = self.model.valuation.get(name)
        if found is None:
            raise UnassignedVariableError(f"Variable {name!r} has no value in the model or valuation")
        return found

    def run(self, phi: Formula) -> StateSet:
        m = self.model
        match phi:
            case Top():
                return m.full()
            case Bot():
                return m.empty()
            case Var(name):
                return self.lookup(name)
            case Lit(name, positive):
                value = self.lookup(name)
                return value if positive else ~value
            case Neg(arg):
                return ~self.run(arg)
            case And(args):
                return np.logical_and.reduce([self.run(a) for a in args]) if args else m.full()
            case Or(args):
                return np.logical_or.reduce([self.run(a) for a in args]) if args else m.empty()
            case Dia(action, arg):
                return diamond(m.relation(action), self.run(arg))
            case Box(action, arg):
                return box(m.relation(action), self.run(arg))
            case Nabla(action, args):
                # ∇Φ == □(\/Φ) & /\◇Φ
                relation = m.relation(action)
                values = [self.run(a) for a in args]
                result = box(relation, np.logical_or.reduce(values) if values else m.empty())
                for value in values:
                    result = result & diamond(relation, value)
                return result
            case Sharp(sig, args):
                env = {p: self.run(a) for p, a in zip(sig.params, args)}
                value, _ = lfp_formula(m, sig.body, sig.x, env)
                return value
        raise TypeError(f"Not a formula: {phi!r}")


# -----------------------------------------------------------------------
# Fixpoint iteration
# -----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ApproxTrace:
    """Approximants ``c_0 = ⊥, c_1, ...`` up to the first repeat.

    For a formula each step is a state set; for a system it is a
    ``|Z| x size`` matrix with rows in system variable order.
    """

    steps: tuple[npt.NDArray[np.bool_], ...]
    converged_at: int
    """Least ``n`` with ``c_n == c_{n+1}``."""

    def at(self, n: int) -> npt.NDArray[np.bool_]:
        """``c_n``; past convergence the fixpoint itself."""
        return self.steps[min(n, len(self.steps) - 1)]

    def __len__(self) -> int:
        return len(self.steps)


def _iterate(step, start: npt.NDArray[np.bool_], bound: int, what: str) -> ApproxTrace:
    current = start
    steps = [current]
    for n in range(bound):
        following = step(current)
        if (current & ~following).any():
            raise NonMonotoneError(f"Approximant {n + 1} of {what} drops states of approximant {n}")
        steps.append(following)
        if np.array_equal(following, current):
            _log.debug(f"{what}: fixpoint after {n} step(s)")
            return ApproxTrace(tuple(steps), n)
        current = following
    raise IterationBoundError(f"{what} did not stabilize within {bound} rounds")


def lfp_formula(
    model: KripkeModel, gamma: Formula, x: str, valuation: Valuation | None = None
) -> tuple[StateSet, ApproxTrace]:
    """Least fixpoint of ``S -> gamma(S)`` and its approximants."""
    env = dict(valuation or {})

    def step(current: StateSet) -> StateSet:
        env[x] = current
        return evaluate(model, gamma, env)

    trace = _iterate(step, model.empty(), model.size + 1, f"lfp {x}. {render(gamma)}")
    return trace.steps[-1], trace


def apply_system(
    model: KripkeModel,
    system: ModalSystem,
    vector: Mapping[str, StateSet],
    valuation: Valuation | None = None,
) -> dict[str, StateSet]:
    """One application of the system's term function to ``vector``."""
    env = {**(valuation or {}), **vector}
    return {z: evaluate(model, term, env) for z, term in system.items()}


def lfp_system(
    model: KripkeModel, system: ModalSystem, valuation: Valuation | None = None
) -> tuple[dict[str, StateSet], ApproxTrace]:
    """Simultaneous least fixpoint, one state set per system variable."""
    zs = system.variables

    def step(current: npt.NDArray[np.bool_]) -> npt.NDArray[np.bool_]:
        image = apply_system(model, system, dict(zip(zs, current)), valuation)
        return np.stack([image[z] for z in zs])

    start = np.zeros((len(zs), model.size), dtype=bool)
    trace = _iterate(step, start, model.size * len(zs) + 1, f"system over {list(zs)}")
    final = trace.steps[-1]
    return {z: final[i] for i, z in enumerate(zs)}, trace


def iota(vector: Mapping[str, StateSet], subsets: Mapping[str, tuple[str, ...]]) -> dict[str, StateSet]:
    """Component ``y_S`` is the intersection of the components in S."""
    return {y: np.logical_and.reduce([vector[z] for z in members]) for y, members in subsets.items()}


def least_prefixpoint_bruteforce(
    model: KripkeModel, gamma: Formula, x: str, valuation: Valuation | None = None
) -> StateSet:
    """Intersection of every S with gamma(S) <= S, over all subsets of the states."""
    env = dict(valuation or {})
    result = model.full()
    shifts = np.arange(model.size)
    for mask in range(1 << model.size):
        candidate = ((mask >> shifts) & 1).astype(bool)
        env[x] = candidate
        if not (evaluate(model, gamma, env) & ~candidate).any():
            result = result & candidate
    return result
