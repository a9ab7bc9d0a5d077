"""Formula syntax: AST, parser, printer and static analysis."""

from .analysis import Analysis, Polarity, actions_of, analyze, free_vars, is_guarded, modal_depth, polarity
from .formula import (
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
    SharpSignature,
    Top,
    Var,
    canonicalize,
    conjunction,
    disjunction,
    literal,
    nabla,
    sort_key,
    substitute,
)
from .parser import SignatureTable, load_signatures, parse, parse_signature, parse_signatures
from .printer import render

__all__ = [
    "Analysis",
    "And",
    "BOT",
    "Bot",
    "Box",
    "Dia",
    "Formula",
    "FormulaSet",
    "Lit",
    "Nabla",
    "Neg",
    "Or",
    "Polarity",
    "Sharp",
    "SharpSignature",
    "SignatureTable",
    "TOP",
    "Top",
    "Var",
    "actions_of",
    "analyze",
    "canonicalize",
    "conjunction",
    "disjunction",
    "free_vars",
    "is_guarded",
    "literal",
    "load_signatures",
    "modal_depth",
    "nabla",
    "parse",
    "parse_signature",
    "parse_signatures",
    "polarity",
    "render",
    "sort_key",
    "substitute",
]
