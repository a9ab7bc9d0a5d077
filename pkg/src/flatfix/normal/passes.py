"""Normal-form passes over formulas.

    to_nabla             classical modal syntax -> ∇-fragment
    to_disjunctive       ∇-fragment -> disjunction of special conjunctions
    to_pure_disjunction  every special conjunction carries every declared action
    guard_split          drop the disjuncts with a bare x (same prefixpoints)
    to_pure_nbx          pure ∇/x-form, the input of the system construction
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterable

from ..errors import FragmentError, UnguardedError
from ..syntax import (
    BOT,
    TOP,
    And,
    Bot,
    Box,
    Dia,
    Formula,
    FormulaSet,
    Lit,
    Nabla,
    Neg,
    Or,
    Sharp,
    Top,
    Var,
    analyze,
    conjunction,
    disjunction,
    nabla,
    render,
)
from .laws import conjoin_all, distribute_nabla, require_within_limit
from .simplify import nabla_simplify
from .special import EMPTY, SpecialConjunction, decompose, recompose

_log = logging.getLogger(__name__)


# -----------------------------------------------------------------------
# ∇-form
# -----------------------------------------------------------------------


def to_nabla(phi: Formula) -> Formula:
    """Equivalent formula with negation on variables only and no ◇/□."""
    return _nnf(phi, True)


def _nnf(phi: Formula, positive: bool) -> Formula:
    match phi:
        case Var(name):
            return phi if positive else Lit(name, False)
        case Lit(name, lit_positive):
            return Var(name) if lit_positive == positive else Lit(name, False)
        case Top():
            return TOP if positive else BOT
        case Bot():
            return BOT if positive else TOP
        case Neg(arg):
            return _nnf(arg, not positive)
        case And(args):
            parts = [_nnf(a, positive) for a in args]
            return conjunction(parts) if positive else disjunction(parts)
        case Or(args):
            parts = [_nnf(a, positive) for a in args]
            return disjunction(parts) if positive else conjunction(parts)
        case Dia(action, arg):
            if positive:
                return nabla(action, _nnf(arg, True), TOP)
            return _box_nabla(action, _nnf(arg, False))
        case Box(action, arg):
            if positive:
                return _box_nabla(action, _nnf(arg, True))
            return nabla(action, _nnf(arg, False), TOP)
        case Nabla(action, args):
            if positive:
                return Nabla(action, FormulaSet.of(_nnf(a, True) for a in args))
            # ~nab Phi == <>(/\ ~Phi) | \/ [](~phi)
            negated = [_nnf(a, False) for a in args]
            return disjunction(
                [nabla(action, conjunction(negated), TOP)]
                + [_box_nabla(action, n) for n in negated]
            )
        case Sharp(sig, _):
            raise FragmentError(
                f"Connective {sig.name!r} cannot be rewritten inline; "
                f"preprocess its signature instead"
            )
    raise TypeError(f"Not a formula: {phi!r}")


def _box_nabla(action: str, arg: Formula) -> Formula:
    return disjunction([nabla(action), nabla(action, arg)])


def is_nabla_fragment(phi: Formula) -> bool:
    match phi:
        case Var() | Lit() | Top() | Bot():
            return True
        case Neg(arg):
            return isinstance(arg, Var)
        case And(args) | Or(args) | Nabla(_, args):
            return all(is_nabla_fragment(a) for a in args)
    return False


def _require_nabla_fragment(phi: Formula) -> None:
    if not is_nabla_fragment(phi):
        raise FragmentError(f"Expected a ∇-fragment formula, got {render(phi)!r}")


# -----------------------------------------------------------------------
# Disjunctive form
# -----------------------------------------------------------------------


def to_disjunctive(phi: Formula) -> Formula:
    """Equivalent disjunction of special conjunctions, recursively inside ∇."""
    _require_nabla_fragment(phi)
    return recompose(_dnf(phi))


def _conjoin_disjunctive(left: Formula, right: Formula) -> Formula:
    return recompose(_dnf(conjunction([left, right])))


def _dnf(phi: Formula) -> list[SpecialConjunction]:
    match phi:
        case Top():
            return [EMPTY]
        case Bot():
            return []
        case Var(name):
            return [SpecialConjunction.build([Lit(name, True)])]
        case Lit(name, positive):
            return [SpecialConjunction.build([Lit(name, positive)])]
        case Neg(Var(name)):
            return [SpecialConjunction.build([Lit(name, False)])]
        case Or(args):
            return list(dict.fromkeys(sc for a in args for sc in _dnf(a)))
        case And(args):
            return conjoin_all((_dnf(a) for a in args), _conjoin_disjunctive)
        case Nabla(action, args):
            inner = FormulaSet.of(recompose(_dnf(a)) for a in args)
            return [SpecialConjunction.build(boxed={action: inner})]
    raise FragmentError(f"Not in the ∇-fragment: {render(phi)!r}")


def is_disjunctive(phi: Formula) -> bool:
    try:
        scs = decompose(phi)
    except FragmentError:
        return False
    return all(is_disjunctive(e) for sc in scs for _, args in sc.boxed for e in args)


# -----------------------------------------------------------------------
# Pure forms
# -----------------------------------------------------------------------


def _atomic(sc: SpecialConjunction, x: str | None) -> bool:
    if sc.boxed:
        return False
    return sc == EMPTY or (x is not None and sc.literals == {Lit(x, True)})


def _purify(
    sc: SpecialConjunction, actions: tuple[str, ...], x: str | None, top: bool
) -> list[Formula]:
    if not top and _atomic(sc, x):
        return [sc.to_formula()]
    stray = set(sc.actions) - set(actions)
    if stray:
        raise FragmentError(f"Actions {sorted(stray)!r} are not declared (declared: {list(actions)!r})")
    options: list[list[FormulaSet]] = []
    for action in actions:
        args = sc.nabla(action)
        if args is None:
            # T == nab{T} | nab{}
            options.append([FormulaSet.of([TOP]), FormulaSet()])
            continue
        alternatives = [
            [alt for d in decompose(e) for alt in _purify(d, actions, x, top=False)] for e in args
        ]
        options.append(distribute_nabla(alternatives))
    require_within_limit(math.prod(len(o) for o in options), "Filling in every declared action")
    return [
        SpecialConjunction.build(sc.literals, dict(zip(actions, choice, strict=True))).to_formula()
        for choice in itertools.product(*options)
    ]


def _declared(actions: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(actions)))


def to_pure_disjunction(phi: Formula, actions: Iterable[str]) -> Formula:
    """Disjunction of pure ∇-formulas over all of ``actions``."""
    declared = _declared(actions)
    _require_nabla_fragment(phi)
    disjuncts = _dnf(phi)
    return disjunction(f for sc in disjuncts for f in _purify(sc, declared, None, top=True))


def guard_split(gamma: Formula, x: str) -> Formula:
    """The part of ``gamma = (x & g1) | g2`` that keeps every prefixpoint.

    ``gamma`` is brought into disjunctive normal form over literals and
    maximal modal subformulas; disjuncts with a bare ``x`` conjunct are
    dropped, the rest is returned.
    """
    pol = analyze(gamma, x).polarity
    if pol not in ("positive", "absent"):
        raise FragmentError(f"{x!r} must occur only positively, found {pol} in {render(gamma)!r}")
    bare = Var(x)
    kept = [conjunction(atoms) for atoms in _boolean_dnf(gamma, True) if bare not in atoms]
    result = disjunction(kept)
    _log.debug(f"guard_split({render(gamma)}) = {render(result)}")
    return result


def _boolean_dnf(phi: Formula, positive: bool) -> list[tuple[Formula, ...]]:
    match phi:
        case Var(name):
            return [(phi if positive else Lit(name, False),)]
        case Lit(name, lit_positive):
            return [(Var(name) if lit_positive == positive else Lit(name, False),)]
        case Top():
            return [()] if positive else []
        case Bot():
            return [] if positive else [()]
        case Neg(arg):
            return _boolean_dnf(arg, not positive)
        case And(args) | Or(args):
            parts = [_boolean_dnf(a, positive) for a in args]
            if isinstance(phi, And) == positive:
                return [tuple(itertools.chain(*combo)) for combo in itertools.product(*parts)]
            return [d for part in parts for d in part]
        case Dia(action, arg):
            return [(phi,)] if positive else [(Box(action, Neg(arg)),)]
        case Box(action, arg):
            return [(phi,)] if positive else [(Dia(action, Neg(arg)),)]
        case Nabla() | Sharp():
            return [(phi,)] if positive else [(Neg(phi),)]
    raise TypeError(f"Not a formula: {phi!r}")


def to_pure_nbx(gamma: Formula, x: str, actions: Iterable[str]) -> Formula:
    """Pure ∇/x-form of ``gamma``; ``x`` must be positive and guarded."""
    info = analyze(gamma, x)
    if info.polarity not in ("positive", "absent"):
        raise FragmentError(f"{x!r} must occur only positively in {render(gamma)!r}")
    if not info.guarded:
        raise UnguardedError(f"{x!r} is not guarded in {render(gamma)!r}; apply guard_split first")
    declared = _declared(actions)
    disjuncts = _dnf(to_nabla(gamma))
    raw = disjunction(f for sc in disjuncts for f in _purify(sc, declared, x, top=True))
    result = nabla_simplify(raw)
    _log.debug(f"to_pure_nbx: {len(decompose(result))} disjunct(s)")
    return result


# -----------------------------------------------------------------------
# Recognizers
# -----------------------------------------------------------------------


def _is_pure(phi: Formula, actions: tuple[str, ...], x: str | None, top: bool) -> bool:
    try:
        scs = decompose(phi)
    except FragmentError:
        return False
    if not top and len(scs) != 1:
        return False
    for sc in scs:
        if not top and _atomic(sc, x):
            continue
        if x is not None and Lit(x, False) in sc.literals:
            return False
        if sc.actions != actions:
            return False
        if not all(_is_pure(e, actions, x, top=False) for _, args in sc.boxed for e in args):
            return False
    return True


def is_pure_disjunction(phi: Formula, actions: Iterable[str]) -> bool:
    return _is_pure(phi, _declared(actions), None, top=True)


def is_pure_nbx(phi: Formula, x: str, actions: Iterable[str]) -> bool:
    return _is_pure(phi, _declared(actions), x, top=True)
