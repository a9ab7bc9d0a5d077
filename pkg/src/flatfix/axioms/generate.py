"""Read-off of the axiom systems.

kff:      the prefix axiom  gamma(sharp(p), p) -> sharp(p)
          and the least rule  gamma(y, p) -> y  /  sharp(p) -> y
kffplus:  kff plus, for every y_S of the simulation,
          A_S:  sigma_S[chi#/y] -> chi#_S
          R_S:  {sigma_Q -> y_Q | every Q}  /  chi#_S -> y_S
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

from ..errors import FragmentError
from ..syntax import (
    SharpSignature,
    Var,
    canonicalize,
    conjunction,
    free_vars,
    substitute,
)
from ..systems import ModalSystem
from .axiom import Axiom, AxiomSet, ChiMap, Implication, Rule

_log = logging.getLogger(__name__)

PREFIX_AXIOM = "sharp-prefix"
LEAST_RULE = "sharp-least"


def fresh_variable(base: str, taken: Iterable[str]) -> str:
    used = set(taken)
    if base not in used:
        return base
    i = 1
    while f"{base}{i}" in used:
        i += 1
    return f"{base}{i}"


def kozen_park(sig: SharpSignature) -> AxiomSet:
    sharp = sig.applied()
    body = sig.body
    prefix = Axiom(PREFIX_AXIOM, canonicalize(substitute(body, {sig.x: sharp})), sharp)
    y = Var(fresh_variable("y", set(sig.params) | free_vars(body)))
    least = Rule(
        LEAST_RULE,
        (Implication(canonicalize(substitute(body, {sig.x: y})), y),),
        Implication(sharp, y),
    )
    return AxiomSet("kff", sig.name, (prefix,), (least,), signature=sig)


def chi_map(sig: SharpSignature, representation: ModalSystem, simulation: ModalSystem) -> ChiMap:
    if representation.point is None or not representation.origins:
        raise ValueError("chi_map needs the system representation built from the connective")
    x = Var(sig.x)
    chi = {
        z: x if z == representation.point else representation.origins[z]
        for z in representation.variables
    }
    applied = {sig.x: sig.applied()}
    chi_sharp = {
        y: conjunction(canonicalize(substitute(chi[z], applied)) for z in members)
        for y, members in simulation.subsets.items()
    }
    return ChiMap(chi, chi_sharp)


def plus_axioms(
    sig: SharpSignature, simulation: ModalSystem, chi: ChiMap, lean: bool = False
) -> AxiomSet:
    """The subset-construction axioms and rules, with kff in front unless ``lean``."""
    if simulation.kind != "simple":
        raise FragmentError(f"plus_axioms needs a simple system, got a {simulation.kind} one")
    premises = tuple(Implication(simulation.terms[q], Var(q)) for q in simulation.variables)
    axioms: list[Axiom] = []
    rules: list[Rule] = []
    for y in simulation.variables:
        tag = y.removeprefix("y_")
        lhs = canonicalize(substitute(simulation.terms[y], chi.chi_sharp))
        axioms.append(Axiom(f"A_{tag}", lhs, chi.chi_sharp[y]))
        rules.append(Rule(f"R_{tag}", premises, Implication(chi.chi_sharp[y], Var(y))))
    if not lean:
        base = kozen_park(sig)
        axioms[:0] = base.axioms
        rules[:0] = base.rules
    _log.debug(f"kffplus for {sig.name}: {len(axioms)} axiom(s), {len(rules)} rule(s)")
    return AxiomSet(
        "kffplus", sig.name, tuple(axioms), tuple(rules), signature=sig, simulation=simulation
    )
