"""Modal systems of equations: representation and simulation."""

from .represent import POINT, RelevantSubformulas, build_system, relevant_subformulas
from .simulate import enumerate_subsets, simulate, subset_name
from .system import (
    ModalSystem,
    SystemKind,
    classify_system,
    parse_system,
    render_system,
    system_from_dict,
    system_to_dict,
)

__all__ = [
    "POINT",
    "ModalSystem",
    "RelevantSubformulas",
    "SystemKind",
    "build_system",
    "classify_system",
    "enumerate_subsets",
    "parse_system",
    "relevant_subformulas",
    "render_system",
    "simulate",
    "subset_name",
    "system_from_dict",
    "system_to_dict",
]
