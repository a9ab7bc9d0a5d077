"""∇-arithmetic: simplification of disjunctive terms and the semi-simple merge."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

from ..errors import FragmentError
from ..syntax import (
    BOT,
    TOP,
    And,
    Formula,
    FormulaSet,
    Lit,
    Top,
    Var,
    conjunction,
    render,
    sort_key,
)
from .laws import conjoin_all
from .special import SpecialConjunction, decompose, recompose

_log = logging.getLogger(__name__)


# -----------------------------------------------------------------------
# Public API
# -----------------------------------------------------------------------


def nabla_simplify(phi: Formula) -> Formula:
    """Simplify a formula of disjunctive or semi-simple shape.

    Rules, applied bottom-up:
        - a ∇ with a false element is false
        - complementary literals make a disjunct false
        - false disjuncts are dropped, duplicates merged
        - a disjunct implied by another disjunct is dropped (literal-set
          inclusion and Egli-Milner order on the ∇ arguments); among
          equivalent disjuncts the one with more ∇ elements stays
    """
    kept = []
    for sc in decompose(phi):
        simple = _simplify_special(sc)
        if simple is not None:
            kept.append(simple)
    return recompose(_absorb(kept))


def merge_semisimple(
    terms: Sequence[Formula],
    variables: Iterable[str] | None = None,
    simplify: bool = True,
) -> Formula:
    """Semi-simple term equivalent to the conjunction of ``terms``."""
    if not terms:
        raise ValueError("merge_semisimple needs at least one term")
    zs = frozenset(variables) if variables is not None else None
    groups = []
    for term in terms:
        if not is_semisimple(term, zs):
            raise FragmentError(f"Not a semi-simple term: {render(term)!r}")
        groups.append(decompose(term))
    merged = recompose(conjoin_all(groups, conjoin_variables))
    _log.debug(f"merged {len(terms)} term(s) into {render(merged)}")
    return nabla_simplify(merged) if simplify else merged


def conjoin_variables(left: Formula, right: Formula) -> Formula:
    """Conjunction of two conjunctions of variables, ``T`` being the empty one."""
    return variable_conjunction(conjunct_variables(left) | conjunct_variables(right))


def variable_conjunction(names: Iterable[str]) -> Formula:
    return conjunction(Var(n) for n in sorted(set(names)))


def conjunct_variables(phi: Formula) -> frozenset[str]:
    match phi:
        case Top():
            return frozenset()
        case Var(name):
            return frozenset({name})
        case And(args) if all(isinstance(a, Var) for a in args):
            return frozenset(a.name for a in args)  # type: ignore[union-attr]
    raise FragmentError(f"Not a conjunction of variables: {render(phi)!r}")


def is_semisimple(term: Formula, variables: frozenset[str] | None = None) -> bool:
    return _system_term_kind(term, variables) in ("semi-simple", "simple")


def is_simple(term: Formula, variables: frozenset[str] | None = None) -> bool:
    return _system_term_kind(term, variables) == "simple"


# -----------------------------------------------------------------------
# Helpers
# -----------------------------------------------------------------------


def _system_term_kind(term: Formula, variables: frozenset[str] | None) -> str:
    try:
        scs = decompose(term)
    except FragmentError:
        return "general"
    kind = "simple"
    for sc in scs:
        if variables is not None and any(lit.name in variables for lit in sc.literals):
            return "general"
        for _, args in sc.boxed:
            for element in args:
                try:
                    names = conjunct_variables(element)
                except FragmentError:
                    return "general"
                if variables is not None and not names <= variables:
                    return "general"
                if len(names) > 1:
                    kind = "semi-simple"
    return kind


def _simplify_element(phi: Formula) -> Formula:
    try:
        return nabla_simplify(phi)
    except FragmentError:
        return phi


def _simplify_special(sc: SpecialConjunction) -> SpecialConjunction | None:
    if sc.is_contradictory():
        return None
    boxed = {}
    for action, args in sc.boxed:
        elements = [_simplify_element(e) for e in args]
        if BOT in elements:
            return None
        boxed[action] = FormulaSet.of(elements)
    return SpecialConjunction.build(sc.literals, boxed)


def _literal_atoms(phi: Formula) -> frozenset[Lit] | None:
    """Literals of a plain conjunction of literals, None for anything else."""
    try:
        scs = decompose(phi)
    except FragmentError:
        return None
    if len(scs) != 1 or scs[0].boxed:
        return None
    return scs[0].literals


def _element_leq(phi: Formula, psi: Formula) -> bool:
    if psi == TOP or phi == psi:
        return True
    lhs, rhs = _literal_atoms(phi), _literal_atoms(psi)
    return lhs is not None and rhs is not None and rhs <= lhs


def _egli_milner(lhs: FormulaSet, rhs: FormulaSet) -> bool:
    forth = all(any(_element_leq(a, b) for b in rhs) for a in lhs)
    back = all(any(_element_leq(a, b) for a in lhs) for b in rhs)
    return forth and back


def _implies(d: SpecialConjunction, e: SpecialConjunction) -> bool:
    if not e.literals <= d.literals:
        return False
    for action, args in e.boxed:
        mine = d.nabla(action)
        if mine is None or not _egli_milner(mine, args):
            return False
    return True


def _preferred(e: SpecialConjunction, d: SpecialConjunction) -> bool:
    if e.element_count() != d.element_count():
        return e.element_count() > d.element_count()
    return sort_key(e.to_formula()) < sort_key(d.to_formula())


def _absorb(scs: list[SpecialConjunction]) -> list[SpecialConjunction]:
    unique = list(dict.fromkeys(scs))
    kept = []
    for i, d in enumerate(unique):
        dominated = any(
            _implies(d, e) and (not _implies(e, d) or _preferred(e, d))
            for j, e in enumerate(unique)
            if i != j
        )
        if not dominated:
            kept.append(d)
    return kept
