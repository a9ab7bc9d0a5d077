"""Axiom systems kff and kffplus for flat fixpoint connectives."""

from .axiom import Axiom, AxiomSet, AxiomSystem, ChiMap, Implication, Rule
from .generate import LEAST_RULE, PREFIX_AXIOM, chi_map, fresh_variable, kozen_park, plus_axioms
from .render import axiom_set_to_dict, load_axioms, render_axioms

__all__ = [
    "Axiom",
    "AxiomSet",
    "AxiomSystem",
    "ChiMap",
    "Implication",
    "LEAST_RULE",
    "PREFIX_AXIOM",
    "Rule",
    "axiom_set_to_dict",
    "chi_map",
    "fresh_variable",
    "kozen_park",
    "load_axioms",
    "plus_axioms",
    "render_axioms",
]
