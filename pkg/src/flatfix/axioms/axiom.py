from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Literal

from ..syntax import Formula, SharpSignature, free_vars, render
from ..systems import ModalSystem

AxiomSystem = Literal["kff", "kffplus"]


@dataclass(frozen=True)
class Implication:
    """``lhs -> rhs``, valid when ``lhs`` is contained in ``rhs`` at every state."""

    lhs: Formula
    rhs: Formula

    def variables(self) -> frozenset[str]:
        return free_vars(self.lhs) | free_vars(self.rhs)

    def __str__(self) -> str:
        return f"{render(self.lhs)} -> {render(self.rhs)}"


@dataclass(frozen=True)
class Axiom:
    name: str
    lhs: Formula
    rhs: Formula

    @property
    def implication(self) -> Implication:
        return Implication(self.lhs, self.rhs)

    @property
    def schematic(self) -> tuple[str, ...]:
        return tuple(sorted(self.implication.variables()))


@dataclass(frozen=True)
class Rule:
    """From every premise valid, infer the conclusion valid."""

    name: str
    premises: tuple[Implication, ...]
    conclusion: Implication

    @property
    def schematic(self) -> tuple[str, ...]:
        found = self.conclusion.variables().union(*(p.variables() for p in self.premises))
        return tuple(sorted(found))


@dataclass(frozen=True)
class ChiMap:
    chi: Mapping[str, Formula]
    """Per system variable z: ``x`` for the point, the formula z stands for otherwise."""
    chi_sharp: Mapping[str, Formula]
    """Per subset variable y_S: conjunction over S of chi with the connective put for ``x``."""


@dataclass(frozen=True)
class AxiomSet:
    system: AxiomSystem
    connective: str
    axioms: tuple[Axiom, ...]
    rules: tuple[Rule, ...]
    signature: SharpSignature | None = field(default=None, compare=False)
    simulation: ModalSystem | None = field(default=None, compare=False)
