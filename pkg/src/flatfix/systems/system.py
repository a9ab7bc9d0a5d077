"""Modal systems of equations ``{z = t_z | z in Z}`` and their documents."""

from __future__ import annotations

import functools
import re
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any, Literal

from ..errors import FormulaSyntaxError
from ..normal import is_semisimple, is_simple
from ..syntax import Formula, SignatureTable, free_vars, parse, render

SystemKind = Literal["general", "semi-simple", "simple"]


@dataclass(frozen=True)
class ModalSystem:
    """One term per variable, optionally pointed.

    ``origins`` maps a variable of a system representation to the formula it
    stands for; ``subsets`` maps a variable of a simulation to the members of
    its subset. Both are empty for hand-written systems.
    """

    variables: tuple[str, ...]
    terms: Mapping[str, Formula]
    point: str | None = None
    origins: Mapping[str, Formula] = field(default_factory=dict)
    subsets: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"Repeated system variable in {self.variables!r}")
        if set(self.terms) != set(self.variables):
            missing = sorted(set(self.variables) - set(self.terms))
            extra = sorted(set(self.terms) - set(self.variables))
            raise ValueError(f"System terms do not match variables: missing {missing!r}, extra {extra!r}")
        if self.point is not None and self.point not in self.variables:
            raise ValueError(f"Point {self.point!r} is not a system variable")

    def __hash__(self) -> int:
        return hash((self.variables, tuple(self.terms[z] for z in self.variables), self.point))

    @functools.cached_property
    def kind(self) -> SystemKind:
        return classify_system(self)

    @property
    def parameters(self) -> frozenset[str]:
        """Free variables of the terms that are not system variables."""
        found = frozenset().union(*(free_vars(t) for t in self.terms.values()))
        return found - set(self.variables)

    def items(self):
        return ((z, self.terms[z]) for z in self.variables)


def classify_system(system: ModalSystem) -> SystemKind:
    zs = frozenset(system.variables)
    terms = list(system.terms.values())
    if all(is_simple(t, zs) for t in terms):
        return "simple"
    if all(is_semisimple(t, zs) for t in terms):
        return "semi-simple"
    return "general"


# -----------------------------------------------------------------------
# Text form: one "z = term" per line, the point written "*z = term"
# -----------------------------------------------------------------------

_LINE = re.compile(r"^\s*(\*)?\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+?)\s*$")


def render_system(system: ModalSystem) -> str:
    lines = []
    for z, term in system.items():
        mark = "*" if z == system.point else ""
        lines.append(f"{mark}{z} = {render(term)}")
    return "\n".join(lines) + "\n"


def parse_system(text: str, sigs: SignatureTable | None = None) -> ModalSystem:
    variables: list[str] = []
    terms: dict[str, Formula] = {}
    point = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        match = _LINE.match(raw)
        if match is None:
            raise FormulaSyntaxError(f"Expected 'name = term' on system line {lineno}: {raw!r}")
        star, name, body = match.groups()
        if name in terms:
            raise ValueError(f"Variable {name!r} defined twice (line {lineno})")
        if star:
            if point is not None:
                raise ValueError(f"Two points marked: {point!r} and {name!r}")
            point = name
        variables.append(name)
        terms[name] = parse(body, sigs)
    return ModalSystem(tuple(variables), terms, point)


# -----------------------------------------------------------------------
# Machine form
# -----------------------------------------------------------------------


def system_to_dict(system: ModalSystem) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "variables": list(system.variables),
        "point": system.point,
        "kind": system.kind,
        "terms": {z: render(t) for z, t in system.items()},
    }
    if system.origins:
        doc["origins"] = {z: render(system.origins[z]) for z in system.variables if z in system.origins}
    if system.subsets:
        doc["subsets"] = {y: list(system.subsets[y]) for y in system.variables if y in system.subsets}
    return doc


def system_from_dict(doc: Mapping[str, Any], sigs: SignatureTable | None = None) -> ModalSystem:
    try:
        variables = tuple(doc["variables"])
        terms = {z: parse(doc["terms"][z], sigs) for z in variables}
    except KeyError as e:
        raise ValueError(f"System document lacks field {e.args[0]!r}") from None
    origins = {z: parse(t, sigs) for z, t in doc.get("origins", {}).items()}
    subsets = {y: tuple(s) for y, s in doc.get("subsets", {}).items()}
    return ModalSystem(variables, terms, doc.get("point"), origins, subsets)
