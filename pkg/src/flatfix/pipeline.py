"""From a connective to its systems and axioms.

    body --guard_split--> guarded --to_nabla--> ∇-form --to_pure_nbx--> pure ∇/x
         --build_system--> T (semi-simple) --simulate--> T+ (simple)
         --chi_map/plus_axioms--> kffplus
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .axioms import AxiomSet, AxiomSystem, ChiMap, chi_map, kozen_park, plus_axioms
from .normal import guard_split, to_nabla, to_pure_nbx
from .syntax import Formula, SharpSignature, actions_of, render
from .systems import ModalSystem, build_system, simulate

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Preprocessed:
    signature: SharpSignature
    actions: tuple[str, ...]
    guarded: Formula
    """The body without its disjuncts that conjoin a bare ``x``."""
    nabla_form: Formula
    pure: Formula


def signature_actions(sigs: Iterable[SharpSignature]) -> tuple[str, ...]:
    """Every action used by the bodies, sorted."""
    return tuple(sorted(frozenset().union(*(actions_of(s.body) for s in sigs))))


def preprocess(sig: SharpSignature, actions: Iterable[str] | None = None) -> Preprocessed:
    declared = tuple(sorted(set(actions))) if actions is not None else signature_actions([sig])
    missing = actions_of(sig.body) - set(declared)
    if missing:
        raise ValueError(f"Connective {sig.name!r} uses undeclared action(s) {sorted(missing)!r}")
    guarded = guard_split(sig.body, sig.x)
    pure = to_pure_nbx(guarded, sig.x, declared)
    _log.debug(f"{sig.name}: pure ∇/x-form {render(pure)}")
    return Preprocessed(sig, declared, guarded, to_nabla(guarded), pure)


def represent(sig: SharpSignature, actions: Iterable[str] | None = None) -> ModalSystem:
    pre = preprocess(sig, actions)
    return build_system(pre.pure, sig.x)


def simulate_signature(
    sig: SharpSignature,
    actions: Iterable[str] | None = None,
    simplify: bool = True,
    reachable_only: bool = False,
) -> tuple[ModalSystem, ModalSystem]:
    """The representation T and its simulation T+."""
    system = represent(sig, actions)
    return system, simulate(system, simplify=simplify, reachable_only=reachable_only)


@dataclass(frozen=True)
class Axiomatization:
    axioms: AxiomSet
    representation: ModalSystem | None = None
    simulation: ModalSystem | None = None
    chi: ChiMap | None = None


def axiomatize_one(
    sig: SharpSignature,
    system: AxiomSystem = "kffplus",
    actions: Iterable[str] | None = None,
    lean: bool = False,
) -> Axiomatization:
    if system == "kff":
        return Axiomatization(kozen_park(sig))
    if system != "kffplus":
        raise ValueError(f"Unknown axiom system: {system!r}. Expected 'kff' or 'kffplus'")
    representation, simulation = simulate_signature(sig, actions)
    chi = chi_map(sig, representation, simulation)
    return Axiomatization(plus_axioms(sig, simulation, chi, lean), representation, simulation, chi)


def axiomatize(
    sigs: Sequence[SharpSignature],
    system: AxiomSystem = "kffplus",
    actions: Iterable[str] | None = None,
    lean: bool = False,
) -> list[AxiomSet]:
    """One axiom set per connective; the system for Γ is their union."""
    declared = tuple(actions) if actions is not None else signature_actions(sigs)
    return [axiomatize_one(sig, system, declared, lean).axioms for sig in sigs]
