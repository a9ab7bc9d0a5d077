"""
Flat Modal Fixpoint Logic

Tools for connectives ``sharp_gamma(p) = mu x. gamma(x, p)``: ∇ normal forms,
systems of modal equations and their simulation, the kff / kffplus axiom
systems, and a finite-model checking harness.
"""

from .axioms import AxiomSet, chi_map, kozen_park, load_axioms, plus_axioms, render_axioms
from .classify import classify, harmless_to_untied, is_harmless, is_untied
from .config import Settings
from .errors import FlatfixError
from .normal import nabla_simplify, to_disjunctive, to_nabla, to_pure_disjunction, to_pure_nbx
from .pipeline import axiomatize, preprocess, represent, simulate_signature
from .semantics import KripkeModel, evaluate, lfp_formula, lfp_system, random_model, run_suite
from .syntax import SharpSignature, canonicalize, load_signatures, parse, parse_signature, render
from .systems import ModalSystem, build_system, simulate

__all__ = [
    "AxiomSet",
    "FlatfixError",
    "KripkeModel",
    "ModalSystem",
    "Settings",
    "SharpSignature",
    "axiomatize",
    "build_system",
    "canonicalize",
    "chi_map",
    "classify",
    "evaluate",
    "harmless_to_untied",
    "is_harmless",
    "is_untied",
    "kozen_park",
    "lfp_formula",
    "lfp_system",
    "load_axioms",
    "load_signatures",
    "nabla_simplify",
    "parse",
    "parse_signature",
    "plus_axioms",
    "preprocess",
    "random_model",
    "render",
    "render_axioms",
    "represent",
    "run_suite",
    "simulate",
    "simulate_signature",
    "to_disjunctive",
    "to_nabla",
    "to_pure_disjunction",
    "to_pure_nbx",
]
