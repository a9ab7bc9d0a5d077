"""Rewriting into ∇ normal forms and ∇-arithmetic."""

from .laws import conjoin_nablas, distribute_nabla, full_relations
from .passes import (
    guard_split,
    is_disjunctive,
    is_nabla_fragment,
    is_pure_disjunction,
    is_pure_nbx,
    to_disjunctive,
    to_nabla,
    to_pure_disjunction,
    to_pure_nbx,
)
from .simplify import (
    conjunct_variables,
    is_semisimple,
    is_simple,
    merge_semisimple,
    nabla_simplify,
    variable_conjunction,
)
from .special import PureNablaX, SpecialConjunction, decompose, recompose, split_pure_nbx

__all__ = [
    "PureNablaX",
    "SpecialConjunction",
    "conjoin_nablas",
    "conjunct_variables",
    "decompose",
    "distribute_nabla",
    "full_relations",
    "guard_split",
    "is_disjunctive",
    "is_nabla_fragment",
    "is_pure_disjunction",
    "is_pure_nbx",
    "is_semisimple",
    "is_simple",
    "merge_semisimple",
    "nabla_simplify",
    "recompose",
    "split_pure_nbx",
    "to_disjunctive",
    "to_nabla",
    "to_pure_disjunction",
    "to_pure_nbx",
    "variable_conjunction",
]
