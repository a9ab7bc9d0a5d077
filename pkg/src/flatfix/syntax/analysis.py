"""Static analysis: free variables, polarity, guardedness, modal depth."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Literal

from .formula import (
    And,
    Bot,
    Box,
    Dia,
    Formula,
    Lit,
    Nabla,
    Neg,
    Or,
    Sharp,
    Top,
    Var,
)

Polarity = Literal["positive", "negative", "both", "absent"]


@dataclass(frozen=True)
class Analysis:
    free_vars: frozenset[str]
    polarity: Polarity
    guarded: bool
    modal_depth: int


def analyze(phi: Formula, x: str) -> Analysis:
    return Analysis(
        free_vars=free_vars(phi),
        polarity=polarity(phi, x),
        guarded=is_guarded(phi, x),
        modal_depth=modal_depth(phi),
    )


@functools.lru_cache(maxsize=4096)
def free_vars(phi: Formula) -> frozenset[str]:
    match phi:
        case Var(name) | Lit(name, _):
            return frozenset({name})
        case Top() | Bot():
            return frozenset()
        case Neg(arg) | Dia(_, arg) | Box(_, arg):
            return free_vars(arg)
        case And(args) | Or(args) | Nabla(_, args) | Sharp(_, args):
            return frozenset().union(*(free_vars(a) for a in args))
    raise TypeError(f"Not a formula: {phi!r}")


def actions_of(phi: Formula) -> frozenset[str]:
    """Every action index used in ``phi``, connective bodies included."""
    match phi:
        case Var() | Lit() | Top() | Bot():
            return frozenset()
        case Neg(arg):
            return actions_of(arg)
        case Dia(action, arg) | Box(action, arg):
            return actions_of(arg) | {action}
        case Nabla(action, args):
            return frozenset({action}).union(*(actions_of(a) for a in args))
        case And(args) | Or(args):
            return frozenset().union(*(actions_of(a) for a in args))
        case Sharp(sig, args):
            return actions_of(sig.body).union(*(actions_of(a) for a in args))
    raise TypeError(f"Not a formula: {phi!r}")


def _signs(phi: Formula, x: str, positive: bool) -> frozenset[str]:
    same = frozenset({"+" if positive else "-"})
    match phi:
        case Var(name):
            return same if name == x else frozenset()
        case Lit(name, lit_positive):
            if name != x:
                return frozenset()
            return frozenset({"+" if positive == lit_positive else "-"})
        case Top() | Bot():
            return frozenset()
        case Neg(arg):
            return _signs(arg, x, not positive)
        case Dia(_, arg) | Box(_, arg):
            return _signs(arg, x, positive)
        case And(args) | Or(args) | Nabla(_, args):
            return frozenset().union(*(_signs(a, x, positive) for a in args))
        case Sharp(sig, args):
            # an argument sits wherever its parameter sits in the body
            found: set[str] = set()
            for param, arg in zip(sig.params, args, strict=True):
                for sign in _signs(sig.body, param, True):
                    found |= _signs(arg, x, positive if sign == "+" else not positive)
            return frozenset(found)
    raise TypeError(f"Not a formula: {phi!r}")


def polarity(phi: Formula, x: str) -> Polarity:
    signs = _signs(phi, x, True)
    if not signs:
        return "absent"
    if signs == {"+"}:
        return "positive"
    if signs == {"-"}:
        return "negative"
    return "both"


def is_guarded(phi: Formula, x: str) -> bool:
    """True iff every occurrence of ``x`` lies under at least one modality."""
    match phi:
        case Var(name) | Lit(name, _):
            return name != x
        case Top() | Bot():
            return True
        case Dia() | Box() | Nabla():
            return True
        case Neg(arg):
            return is_guarded(arg, x)
        case And(args) | Or(args):
            return all(is_guarded(a, x) for a in args)
        case Sharp(sig, args):
            return all(
                is_guarded(sig.body, param) or is_guarded(arg, x)
                for param, arg in zip(sig.params, args, strict=True)
            )
    raise TypeError(f"Not a formula: {phi!r}")


def modal_depth(phi: Formula) -> int:
    match phi:
        case Var() | Lit() | Top() | Bot():
            return 0
        case Neg(arg):
            return modal_depth(arg)
        case Dia(_, arg) | Box(_, arg):
            return 1 + modal_depth(arg)
        case Nabla(_, args):
            return 1 + max((modal_depth(a) for a in args), default=0)
        case And(args) | Or(args):
            return max((modal_depth(a) for a in args), default=0)
        case Sharp(sig, args):
            return modal_depth(sig.body) + max((modal_depth(a) for a in args), default=0)
    raise TypeError(f"Not a formula: {phi!r}")
