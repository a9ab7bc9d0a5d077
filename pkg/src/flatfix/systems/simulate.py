"""Simulation of a semi-simple system by a simple one (subset construction).

For every non-empty S <= Z the term of ``y_S`` is the merged conjunction of
the terms of S, with each ∇ element ``/\\ S'`` replaced by ``y_S'``.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from collections.abc import Sequence

from ..errors import FragmentError
from ..normal import SpecialConjunction, conjunct_variables, decompose, merge_semisimple, recompose
from ..syntax import TOP, Formula, FormulaSet, Var, free_vars, render
from .system import ModalSystem

_log = logging.getLogger(__name__)


def subset_tag(z: str) -> str:
    return z[2:] if z.startswith("z_") and len(z) > 2 else z


def subset_name(members: Sequence[str]) -> str:
    """``y_`` followed by the member tags joined by ``_``."""
    return "y_" + "_".join(subset_tag(z) for z in members)


def enumerate_subsets(variables: Sequence[str]) -> list[tuple[str, ...]]:
    """Non-empty subsets by cardinality, then lexicographically by position."""
    n = len(variables)
    return [
        tuple(variables[i] for i in combo)
        for k in range(1, n + 1)
        for combo in itertools.combinations(range(n), k)
    ]


def _rename(term: Formula, names: dict[frozenset[str], str]) -> Formula:
    renamed = []
    for sc in decompose(term):
        boxed = {}
        for action, args in sc.boxed:
            elements = []
            for element in args:
                members = conjunct_variables(element)
                elements.append(TOP if not members else Var(names[members]))
            boxed[action] = FormulaSet.of(elements)
        renamed.append(SpecialConjunction.build(sc.literals, boxed))
    return recompose(renamed)


def _reachable(start: str, terms: dict[str, Formula]) -> set[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in free_vars(terms[queue.popleft()]) & terms.keys():
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def simulate(
    system: ModalSystem, simplify: bool = True, reachable_only: bool = False
) -> ModalSystem:
    """Simple system over ``y_S`` whose ``y_S`` component is ``/\\ S`` of the least solution."""
    if system.kind == "general":
        raise FragmentError("simulate needs a semi-simple system")
    subsets = enumerate_subsets(system.variables)
    names = {frozenset(s): subset_name(s) for s in subsets}
    if len(set(names.values())) != len(names):
        raise ValueError(f"Variable names {list(system.variables)!r} give colliding subset names")
    clash = set(names.values()) & system.parameters
    if clash:
        raise ValueError(f"Subset variables {sorted(clash)!r} clash with parameters")

    terms: dict[str, Formula] = {}
    for members in subsets:
        merged = merge_semisimple([system.terms[z] for z in members], system.variables, simplify)
        terms[names[frozenset(members)]] = _rename(merged, names)

    point = names[frozenset({system.point})] if system.point is not None else None
    ordered = [names[frozenset(s)] for s in subsets]
    if reachable_only:
        roots = [point] if point is not None else [names[frozenset({z})] for z in system.variables]
        keep = set().union(*(_reachable(r, terms) for r in roots))
        ordered = [y for y in ordered if y in keep]
        terms = {y: terms[y] for y in ordered}
    membership = {names[frozenset(s)]: s for s in subsets if names[frozenset(s)] in terms}
    _log.debug(f"simulation: {len(system.variables)} -> {len(ordered)} variable(s)")
    for y in ordered:
        _log.debug(f"  {y} = {render(terms[y])}")
    return ModalSystem(tuple(ordered), terms, point, subsets=membership)
