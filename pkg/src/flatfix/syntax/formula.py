"""Formula AST for flat modal fixpoint logic.

Nodes are frozen dataclasses and therefore hashable; ``FormulaSet`` keeps its
elements in one fixed total order so that two sets with the same members are
equal whatever order they were built in.

Canonical shape (what :func:`canonicalize` and the parser return):
    - positive literals are ``Var``; negated variables are ``Lit(p, False)``
    - ``And``/``Or`` are flattened, deduplicated, sorted, with at least two
      children (no children collapses to ``Top``/``Bot``)
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Union

from ..errors import FormulaSyntaxError

# keywords of the surface syntax; a variable with one of these names could not be read back
RESERVED_NAMES = frozenset({"T", "F", "nab", "sharp"})


def _check_name(name: str) -> None:
    if name in RESERVED_NAMES:
        raise FormulaSyntaxError(f"{name!r} is a keyword and cannot name a variable")


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self):
        _check_name(self.name)


@dataclass(frozen=True, slots=True)
class Lit:
    """Literal over a proposition symbol; ``positive=False`` is ``~name``."""

    name: str
    positive: bool = False

    def __post_init__(self):
        _check_name(self.name)

    def negated(self) -> Lit:
        return Lit(self.name, not self.positive)


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bot:
    pass


@dataclass(frozen=True, slots=True)
class Neg:
    arg: Formula


@dataclass(frozen=True, slots=True)
class And:
    args: tuple[Formula, ...]


@dataclass(frozen=True, slots=True)
class Or:
    args: tuple[Formula, ...]


@dataclass(frozen=True, slots=True)
class Dia:
    action: str
    arg: Formula


@dataclass(frozen=True, slots=True)
class Box:
    action: str
    arg: Formula


@dataclass(frozen=True, slots=True)
class Nabla:
    """Cover modality: every successor satisfies a member, every member is met."""

    action: str
    args: FormulaSet


@dataclass(frozen=True, slots=True)
class Sharp:
    sig: SharpSignature = field(repr=False)
    args: tuple[Formula, ...]

    @property
    def name(self) -> str:
        return self.sig.name


Formula = Union[Var, Lit, Top, Bot, Neg, And, Or, Dia, Box, Nabla, Sharp]

TOP = Top()
BOT = Bot()


@dataclass(frozen=True)
class FormulaSet:
    """Finite set of formulas, stored sorted by :func:`sort_key` without duplicates."""

    elements: tuple[Formula, ...] = ()

    def __post_init__(self):
        unique = {sort_key(e): e for e in self.elements}
        ordered = tuple(unique[k] for k in sorted(unique))
        object.__setattr__(self, "elements", ordered)

    @classmethod
    def of(cls, items: Iterable[Formula] = ()) -> FormulaSet:
        return cls(tuple(items))

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def __repr__(self) -> str:
        return f"FormulaSet({list(self.elements)!r})"


@dataclass(frozen=True)
class SharpSignature:
    """Definition of a connective ``name(x; params) := body``.

    The body must be positive in ``x``; ``x`` is not a parameter and the body
    mentions no variable outside ``{x} | params``.
    """

    name: str
    body: Formula
    x: str
    params: tuple[str, ...]

    def __post_init__(self):
        # Import here to avoid circular import
        from ..errors import SignatureError
        from .analysis import free_vars, polarity

        if self.x in self.params:
            raise SignatureError(
                f"Connective {self.name!r}: fixpoint variable {self.x!r} "
                f"is also listed as a parameter"
            )
        if len(set(self.params)) != len(self.params):
            raise SignatureError(f"Connective {self.name!r}: repeated parameter in {self.params!r}")
        stray = free_vars(self.body) - {self.x} - set(self.params)
        if stray:
            raise SignatureError(
                f"Connective {self.name!r}: body mentions undeclared "
                f"variables {sorted(stray)!r}"
            )
        pol = polarity(self.body, self.x)
        if pol not in ("positive", "absent"):
            raise SignatureError(
                f"Connective {self.name!r}: {self.x!r} must occur only positively, found {pol}"
            )

    @property
    def arity(self) -> int:
        return len(self.params)

    def applied(self) -> Sharp:
        """The connective applied to its own parameters, ``name(p1, ..., pn)``."""
        return Sharp(self, tuple(Var(p) for p in self.params))


# -----------------------------------------------------------------------
# Ordering
# -----------------------------------------------------------------------

_TAGS: dict[type, int] = {
    Top: 0,
    Bot: 1,
    Var: 2,
    Lit: 3,
    Neg: 4,
    And: 5,
    Or: 6,
    Dia: 7,
    Box: 8,
    Nabla: 9,
    Sharp: 10,
}


@functools.lru_cache(maxsize=1 << 16)
def sort_key(phi: Formula) -> tuple:
    """Key of the fixed total order: constructor tag, then action, then children."""
    match phi:
        case Top() | Bot():
            return (_TAGS[type(phi)],)
        case Var(name):
            return (2, name)
        case Lit(name, positive):
            return (3, name, positive)
        case Neg(arg):
            return (4, sort_key(arg))
        case And(args) | Or(args):
            return (_TAGS[type(phi)], tuple(sort_key(a) for a in args))
        case Dia(action, arg) | Box(action, arg):
            return (_TAGS[type(phi)], action, sort_key(arg))
        case Nabla(action, args):
            return (9, action, tuple(sort_key(a) for a in args))
        case Sharp(sig, args):
            # same-named signatures with different bodies stay apart
            return (
                10,
                sig.name,
                tuple(sort_key(a) for a in args),
                sig.x,
                sig.params,
                sort_key(sig.body),
            )
    raise TypeError(f"Not a formula: {phi!r}")


# -----------------------------------------------------------------------
# Canonical constructors
# -----------------------------------------------------------------------


def _gather(kind: type, items: Iterable[Formula]) -> list[Formula]:
    flat: list[Formula] = []
    for item in items:
        if isinstance(item, kind):
            flat.extend(item.args)  # type: ignore[attr-defined]
        else:
            flat.append(item)
    unique = {sort_key(f): f for f in flat}
    return [unique[k] for k in sorted(unique)]


def conjunction(items: Iterable[Formula]) -> Formula:
    """Flattened, deduplicated, sorted conjunction of already canonical formulas."""
    args = _gather(And, items)
    if not args:
        return TOP
    if len(args) == 1:
        return args[0]
    return And(tuple(args))


def disjunction(items: Iterable[Formula]) -> Formula:
    """Flattened, deduplicated, sorted disjunction of already canonical formulas."""
    args = _gather(Or, items)
    if not args:
        return BOT
    if len(args) == 1:
        return args[0]
    return Or(tuple(args))


def literal(name: str, positive: bool) -> Formula:
    """Canonical formula for a literal."""
    return Var(name) if positive else Lit(name, False)


def canonicalize(phi: Formula) -> Formula:
    match phi:
        case Top() | Bot() | Var():
            return phi
        case Lit(name, positive):
            return literal(name, positive)
        case Neg(arg):
            inner = canonicalize(arg)
            if isinstance(inner, Var):
                return Lit(inner.name, False)
            return Neg(inner)
        case And(args):
            return conjunction(canonicalize(a) for a in args)
        case Or(args):
            return disjunction(canonicalize(a) for a in args)
        case Dia(action, arg):
            return Dia(action, canonicalize(arg))
        case Box(action, arg):
            return Box(action, canonicalize(arg))
        case Nabla(action, args):
            return Nabla(action, FormulaSet.of(canonicalize(a) for a in args))
        case Sharp(sig, args):
            return Sharp(sig, tuple(canonicalize(a) for a in args))
    raise TypeError(f"Not a formula: {phi!r}")


def substitute(phi: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Simultaneous substitution of formulas for variables; no simplification."""
    match phi:
        case Var(name):
            return mapping.get(name, phi)
        case Lit(name, positive):
            if name not in mapping:
                return phi
            return mapping[name] if positive else Neg(mapping[name])
        case Top() | Bot():
            return phi
        case Neg(arg):
            return Neg(substitute(arg, mapping))
        case And(args):
            return And(tuple(substitute(a, mapping) for a in args))
        case Or(args):
            return Or(tuple(substitute(a, mapping) for a in args))
        case Dia(action, arg):
            return Dia(action, substitute(arg, mapping))
        case Box(action, arg):
            return Box(action, substitute(arg, mapping))
        case Nabla(action, args):
            return Nabla(action, FormulaSet.of(substitute(a, mapping) for a in args))
        case Sharp(sig, args):
            # the body binds its own variables; only the arguments are open
            return Sharp(sig, tuple(substitute(a, mapping) for a in args))
    raise TypeError(f"Not a formula: {phi!r}")


def nabla(action: str, *items: Formula) -> Nabla:
    """Shorthand for ``Nabla(action, FormulaSet.of(items))``."""
    return Nabla(action, FormulaSet.of(items))
