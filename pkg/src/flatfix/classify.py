"""Recognizers for the untied and harmless classes, where kff alone is complete.

untied in x:     φ ::= x | ⊤ | φ ∨ φ | ψ ∧ ⋀_{j∈J} ∇_j Φ_j
harmless in x:   φ ::= x | ⊤ | φ ∨ φ | ψ ∧ φ | ◇_i φ | □_i φ | ⋀_{j∈J} φ_j

ψ never mentions x. In the untied grammar the actions j are pairwise distinct
and the elements of every Φ_j are untied. A harmless conjunction has, per
action j, either one conjunct □_j χ or a conjunction of ◇_j χ_ℓ.
"""

from __future__ import annotations

import functools
import logging
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal

from .axioms import AxiomSystem
from .errors import FragmentError
from .normal import is_nabla_fragment, to_nabla
from .syntax import (
    TOP,
    And,
    Box,
    Dia,
    Formula,
    FormulaSet,
    Nabla,
    Or,
    Var,
    conjunction,
    disjunction,
    free_vars,
    render,
)

_log = logging.getLogger(__name__)


def _mentions(phi: Formula, x: str) -> bool:
    return x in free_vars(phi)


# -----------------------------------------------------------------------
# Untied
# -----------------------------------------------------------------------


def is_untied(phi: Formula, x: str) -> bool:
    if not is_nabla_fragment(phi):
        raise FragmentError(f"is_untied expects a ∇-fragment formula, got {render(phi)!r}")
    return _untied(phi, x)


@functools.lru_cache(maxsize=4096)
def _untied(phi: Formula, x: str) -> bool:
    if not _mentions(phi, x):
        return True
    match phi:
        case Var(name):
            return name == x
        case Or(args):
            return all(_untied(a, x) for a in args)
        case Nabla(_, args):
            return all(_untied(a, x) for a in args)
        case And(args):
            seen: set[str] = set()
            for conjunct in args:
                if not _mentions(conjunct, x):
                    continue
                if not isinstance(conjunct, Nabla) or conjunct.action in seen:
                    return False
                seen.add(conjunct.action)
                if not all(_untied(a, x) for a in conjunct.args):
                    return False
            return True
    return False


# -----------------------------------------------------------------------
# Harmless
# -----------------------------------------------------------------------


@functools.lru_cache(maxsize=4096)
def is_harmless(phi: Formula, x: str) -> bool:
    if not _mentions(phi, x):
        return True
    match phi:
        case Var(name):
            return name == x
        case Or(args):
            return all(is_harmless(a, x) for a in args)
        case Dia(_, arg) | Box(_, arg):
            return is_harmless(arg, x)
        case And(args):
            tied = [a for a in args if _mentions(a, x)]
            if len(tied) == 1:
                return is_harmless(tied[0], x)
            return _harmless_conjunction(tied, x)
    return False


def _harmless_conjunction(conjuncts: list[Formula], x: str) -> bool:
    groups: dict[str, list[Formula]] = defaultdict(list)
    for conjunct in conjuncts:
        if not isinstance(conjunct, (Dia, Box)):
            return False
        groups[conjunct.action].append(conjunct)
    for members in groups.values():
        boxes = [m for m in members if isinstance(m, Box)]
        if boxes and len(members) > 1:
            return False
    return all(is_harmless(c.arg, x) for c in conjuncts)


# -----------------------------------------------------------------------
# Harmless -> untied
# -----------------------------------------------------------------------

# A disjunct of the untied form: a bare x, or ψ ∧ ⋀ ∇_j Φ_j keyed by action.
_Term = Literal["x"] | tuple[Formula, dict[str, FormulaSet]]
_X: Literal["x"] = "x"


def _context(parts: Iterable[Formula]) -> Formula:
    return conjunction(p for p in parts if p != TOP)


def _term_formula(term: _Term, x: str) -> Formula:
    if term == _X:
        return Var(x)
    psi, boxed = term
    return _context([psi, *(Nabla(a, args) for a, args in sorted(boxed.items()))])


def _terms_formula(terms: list[_Term], x: str) -> Formula:
    return disjunction(_term_formula(t, x) for t in terms)


def _with_context(psi: Formula, term: _Term, x: str) -> _Term:
    if term == _X:
        if psi != TOP:
            raise FragmentError(f"{x!r} is conjoined with {render(psi)!r}; no untied form exists")
        return term
    inner, boxed = term
    return _context([psi, inner]), boxed


def _translate(phi: Formula, x: str) -> list[_Term]:
    if not _mentions(phi, x):
        return [(to_nabla(phi), {})]
    match phi:
        case Var(_):
            return [_X]
        case Or(args):
            return [t for a in args for t in _translate(a, x)]
        case Dia(action, arg):
            return [(TOP, {action: FormulaSet.of([_terms_formula(_translate(arg, x), x), TOP])})]
        case Box(action, arg):
            inner = _terms_formula(_translate(arg, x), x)
            return [(TOP, {action: FormulaSet.of([])}), (TOP, {action: FormulaSet.of([inner])})]
        case And(args):
            psi = _context(to_nabla(a) for a in args if not _mentions(a, x))
            tied = [a for a in args if _mentions(a, x)]
            if len(tied) == 1:
                return [_with_context(psi, t, x) for t in _translate(tied[0], x)]
            return [_with_context(psi, t, x) for t in _conjunction_terms(tied, x)]
    raise FragmentError(f"Not harmless in {x!r}: {render(phi)!r}")


def _conjunction_terms(conjuncts: list[Formula], x: str) -> list[_Term]:
    groups: dict[str, list[Formula]] = defaultdict(list)
    for conjunct in conjuncts:
        assert isinstance(conjunct, (Dia, Box))
        groups[conjunct.action].append(conjunct)
    alternatives: list[list[_Term]] = []
    for action, members in sorted(groups.items()):
        if isinstance(members[0], Box):
            alternatives.append(_translate(members[0], x))
        else:
            # ◇χ_1 ∧ ... ∧ ◇χ_L == ∇{χ_1, ..., χ_L, ⊤}
            elements = [_terms_formula(_translate(m.arg, x), x) for m in members]
            alternatives.append([(TOP, {action: FormulaSet.of([*elements, TOP])})])
    product: list[_Term] = [(TOP, {})]
    for options in alternatives:
        product = [_merge(left, right) for left in product for right in options]
    return product


def _merge(left: _Term, right: _Term) -> _Term:
    assert left != _X and right != _X
    return _context([left[0], right[0]]), {**left[1], **right[1]}


def harmless_to_untied(phi: Formula, x: str) -> Formula:
    """Equivalent ∇-formula that is untied in ``x``."""
    if not is_harmless(phi, x):
        raise FragmentError(f"Not harmless in {x!r}: {render(phi)!r}")
    result = _terms_formula(_translate(phi, x), x)
    if not is_untied(result, x):
        raise FragmentError(f"Translation of {render(phi)!r} is not untied: {render(result)!r}")
    _log.debug(f"untied form of {render(phi)}: {render(result)}")
    return result


# -----------------------------------------------------------------------
# Verdict
# -----------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    harmless: bool
    untied: bool
    """Whether the ∇-form of the formula is untied."""

    @property
    def recommended(self) -> AxiomSystem:
        return "kff" if self.harmless or self.untied else "kffplus"

    def __str__(self) -> str:
        def yes(flag: bool) -> str:
            return "yes" if flag else "no"

        return f"harmless: {yes(self.harmless)}, untied(∇-form): {yes(self.untied)}"


def classify(phi: Formula, x: str) -> Classification:
    try:
        untied = is_untied(to_nabla(phi), x)
    except FragmentError as e:
        _log.debug(f"no ∇-form for {render(phi)}: {e}")
        untied = False
    return Classification(is_harmless(phi, x), untied)


__all__ = [
    "Classification",
    "classify",
    "harmless_to_untied",
    "is_harmless",
    "is_untied",
]
