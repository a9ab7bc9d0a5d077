"""Kripke semantics, fixpoint iteration and the model-checking oracles."""

from .evaluate import (
    ApproxTrace,
    Valuation,
    apply_system,
    box,
    diamond,
    evaluate,
    iota,
    least_prefixpoint_bruteforce,
    lfp_formula,
    lfp_system,
)
from .model import (
    KripkeModel,
    StateSet,
    all_models,
    chain,
    load_model,
    model_from_dict,
    model_from_edges,
    model_to_dict,
    random_model,
    save_model,
)
from .oracle import Verdict, check_axiom, check_implication, check_rule, valuations
from .suite import CHECKS, Finding, SuiteReport, check_model, prepare, run_suite

__all__ = [
    "ApproxTrace",
    "CHECKS",
    "Finding",
    "KripkeModel",
    "StateSet",
    "SuiteReport",
    "Valuation",
    "Verdict",
    "all_models",
    "apply_system",
    "box",
    "chain",
    "check_axiom",
    "check_implication",
    "check_model",
    "check_rule",
    "diamond",
    "evaluate",
    "iota",
    "least_prefixpoint_bruteforce",
    "lfp_formula",
    "lfp_system",
    "load_model",
    "model_from_dict",
    "model_from_edges",
    "model_to_dict",
    "prepare",
    "random_model",
    "run_suite",
    "save_model",
    "valuations",
]
