"""System representation of a pure ∇/x-formula.

Every special conjunction that occurs inside some ∇ gets a variable; the
formula itself gets the point variable. Each term is the special
conjunction with its ∇ elements abstracted to those variables and ``x``
renamed to the point.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..errors import FragmentError, UnguardedError
from ..normal import SpecialConjunction, is_pure_nbx, split_pure_nbx
from ..syntax import (
    TOP,
    Formula,
    FormulaSet,
    Var,
    actions_of,
    canonicalize,
    conjunction,
    disjunction,
    free_vars,
    render,
    substitute,
)
from .system import ModalSystem

_log = logging.getLogger(__name__)

POINT = "z_g"


@dataclass(frozen=True)
class RelevantSubformulas:
    special: tuple[Formula, ...]
    """Every special conjunction, breadth first from the top-level disjuncts."""
    nested: tuple[Formula, ...]
    """Those that occur inside the scope of a ∇."""
    relevant: tuple[Formula, ...]
    """The formula itself followed by ``nested``."""


def _element_body(element: Formula, x: str) -> SpecialConjunction | None:
    (piece,) = split_pure_nbx(element, x)
    return piece.body


def _scan(gamma: Formula, x: str) -> tuple[list[SpecialConjunction], set[SpecialConjunction]]:
    if not is_pure_nbx(gamma, x, actions_of(gamma)):
        raise FragmentError(f"Not a pure ∇/x-formula: {render(gamma)!r}")
    order: list[SpecialConjunction] = []
    nested: set[SpecialConjunction] = set()
    for disjunct in split_pure_nbx(gamma, x):
        if disjunct.has_x:
            raise UnguardedError(f"{x!r} occurs unguarded in {render(gamma)!r}")
        if disjunct.body is not None and disjunct.body not in order:
            order.append(disjunct.body)
    i = 0
    while i < len(order):
        for _, args in order[i].boxed:
            for element in args:
                body = _element_body(element, x)
                if body is None:
                    continue
                nested.add(body)
                if body not in order:
                    order.append(body)
        i += 1
    return order, nested


def relevant_subformulas(gamma: Formula, x: str) -> RelevantSubformulas:
    order, nested = _scan(gamma, x)
    special = tuple(sc.to_formula() for sc in order)
    inner = tuple(sc.to_formula() for sc in order if sc in nested)
    return RelevantSubformulas(special, inner, (gamma, *inner))


def build_system(gamma: Formula, x: str, point: str = POINT) -> ModalSystem:
    """The pointed semi-simple system whose point component is ``mu x. gamma``."""
    order, nested = _scan(gamma, x)
    names = {sc: f"z_{i}" for i, sc in enumerate(order, start=1) if sc in nested}
    clash = ({point, *names.values()} & free_vars(gamma)) - {x}
    if clash:
        raise ValueError(f"System variable names {sorted(clash)!r} clash with variables of the formula")

    def hat(sc: SpecialConjunction) -> Formula:
        boxed = {}
        for action, args in sc.boxed:
            abstracted = []
            for element in args:
                (piece,) = split_pure_nbx(element, x)
                parts: list[Formula] = [Var(x)] if piece.has_x else []
                if piece.body is not None:
                    parts.append(Var(names[piece.body]))
                abstracted.append(conjunction(parts))
            boxed[action] = FormulaSet.of(abstracted)
        return SpecialConjunction.build(sc.literals, boxed).to_formula()

    def close(rho: Formula) -> Formula:
        return canonicalize(substitute(rho, {x: Var(point)}))

    top_level = []
    for disjunct in split_pure_nbx(gamma, x):
        top_level.append(TOP if disjunct.body is None else hat(disjunct.body))
    terms: dict[str, Formula] = {point: close(disjunction(top_level))}
    origins: dict[str, Formula] = {point: gamma}
    for sc, name in names.items():
        terms[name] = close(hat(sc))
        origins[name] = sc.to_formula()
    variables = (point, *names.values())
    _log.debug(f"system representation: {len(variables)} variable(s) for {render(gamma)}")
    return ModalSystem(variables, terms, point, origins)
