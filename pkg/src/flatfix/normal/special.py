"""Special conjunctions ``/\\Lambda & /\\_j nab_j Phi_j`` and their decomposition."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from ..errors import FragmentError
from ..syntax import (
    BOT,
    And,
    Bot,
    Formula,
    FormulaSet,
    Lit,
    Nabla,
    Neg,
    Or,
    Top,
    Var,
    conjunction,
    disjunction,
    literal,
    render,
)


@dataclass(frozen=True)
class SpecialConjunction:
    """Literal set plus at most one ∇-argument per action."""

    literals: frozenset[Lit] = frozenset()
    boxed: tuple[tuple[str, FormulaSet], ...] = ()

    @classmethod
    def build(
        cls,
        literals: Iterable[Lit] = (),
        boxed: Mapping[str, FormulaSet] | None = None,
    ) -> SpecialConjunction:
        items = tuple(sorted((boxed or {}).items()))
        return cls(frozenset(literals), items)

    @property
    def actions(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.boxed)

    def nabla(self, action: str) -> FormulaSet | None:
        for a, args in self.boxed:
            if a == action:
                return args
        return None

    def boxed_map(self) -> dict[str, FormulaSet]:
        return dict(self.boxed)

    def is_contradictory(self) -> bool:
        return any(lit.negated() in self.literals for lit in self.literals)

    def without(self, name: str) -> SpecialConjunction:
        """Drop every literal on ``name``."""
        return SpecialConjunction(frozenset(lit for lit in self.literals if lit.name != name), self.boxed)

    def mentions_literal(self, name: str) -> bool:
        return any(lit.name == name for lit in self.literals)

    def element_count(self) -> int:
        return sum(len(args) for _, args in self.boxed)

    def to_formula(self) -> Formula:
        parts: list[Formula] = [literal(lit.name, lit.positive) for lit in self.literals]
        parts.extend(Nabla(a, args) for a, args in self.boxed)
        return conjunction(parts)

    def __str__(self) -> str:
        return render(self.to_formula())


EMPTY = SpecialConjunction()


@dataclass(frozen=True)
class PureNablaX:
    """One disjunct of a pure ∇/x-formula: ``T``, ``x``, ``psi`` or ``x & psi``."""

    has_x: bool
    body: SpecialConjunction | None = field(default=None)

    def to_formula(self, x: str) -> Formula:
        parts: list[Formula] = [Var(x)] if self.has_x else []
        if self.body is not None:
            parts.append(self.body.to_formula())
        return conjunction(parts)


def _conjunct_literal(phi: Formula) -> Lit | None:
    match phi:
        case Var(name):
            return Lit(name, True)
        case Lit(name, positive):
            return Lit(name, positive)
        case Neg(Var(name)):
            return Lit(name, False)
    return None


def decompose(phi: Formula) -> list[SpecialConjunction]:
    """Split a formula of disjunctive shape into its special conjunctions.

    Two ∇s on one action inside a conjunction are only accepted when they
    are equal, or when one is ``nab a {}`` and the other is not (then the
    conjunction is false and contributes no disjunct).
    """
    match phi:
        case Bot():
            return []
        case Or(args):
            return [sc for a in args for sc in decompose(a)]
        case Top():
            return [EMPTY]
        case Nabla(action, args):
            return [SpecialConjunction.build(boxed={action: args})]
        case And(args):
            conjuncts = args
        case _:
            conjuncts = (phi,)

    literals: set[Lit] = set()
    boxed: dict[str, FormulaSet] = {}
    for c in conjuncts:
        lit = _conjunct_literal(c)
        if lit is not None:
            literals.add(lit)
        elif isinstance(c, Top):
            continue
        elif isinstance(c, Bot):
            return []
        elif isinstance(c, Nabla):
            seen = boxed.get(c.action)
            if seen is None or seen == c.args:
                boxed[c.action] = c.args
            elif len(seen) == 0 or len(c.args) == 0:
                return []
            else:
                raise FragmentError(
                    f"Two different nab {c.action} conjuncts in {render(phi)!r}; merge them first"
                )
        else:
            raise FragmentError(f"Not a special conjunction: {render(phi)!r}")
    return [SpecialConjunction.build(literals, boxed)]


def recompose(scs: Iterable[SpecialConjunction]) -> Formula:
    return disjunction(sc.to_formula() for sc in scs)


def split_pure_nbx(phi: Formula, x: str) -> list[PureNablaX]:
    """View a pure ∇/x disjunction as its disjuncts."""
    if phi == BOT:
        return []
    out = []
    for sc in decompose(phi):
        has_x = Lit(x, True) in sc.literals
        if Lit(x, False) in sc.literals:
            raise FragmentError(f"Negated {x!r} in a pure form: {render(phi)!r}")
        body = sc.without(x)
        if body == EMPTY:
            out.append(PureNablaX(has_x, None))
        else:
            out.append(PureNablaX(has_x, body))
    return out

