"""Text and machine (JSON) documents for axiom sets."""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from typing import Any, Literal

from ..syntax import And, Formula, Or, SignatureTable, parse, render
from .axiom import Axiom, AxiomSet, Implication, Rule

AxiomFormat = Literal["text", "machine"]

_FORMAT_ALIASES: dict[str, AxiomFormat] = {
    "text": "text",
    "txt": "text",
    "machine": "machine",
    "json": "machine",
}

TEXT_HEADER = """\
# Implications 'a -> b' hold in a model when a is contained in b at every
# state. A rule is a quasi-equation: whenever every premise holds in a model
# (for some assignment of its variables), the conclusion holds for that same
# assignment. Axioms and rules are schemas over their free variables.
"""


def _side(phi: Formula) -> str:
    text = render(phi)
    return f"({text})" if isinstance(phi, (And, Or)) else text


def _implication_text(imp: Implication) -> str:
    return f"{_side(imp.lhs)} -> {_side(imp.rhs)}"


def _set_text(axset: AxiomSet) -> list[str]:
    lines = [f"[{axset.system}] {axset.connective}"]
    for axiom in axset.axioms:
        lines.append(f"{axiom.name}: {_implication_text(axiom.implication)}")
    for rule in axset.rules:
        lines.append(f"{rule.name}:")
        for premise in rule.premises:
            lines.append(f"  premise: {_implication_text(premise)}")
        lines.append(f"  conclusion: {_implication_text(rule.conclusion)}")
    return lines


def _implication_doc(imp: Implication) -> dict[str, str]:
    return {"lhs": render(imp.lhs), "rhs": render(imp.rhs)}


def axiom_set_to_dict(axset: AxiomSet) -> dict[str, Any]:
    return {
        "system": axset.system,
        "connective": axset.connective,
        "axioms": [{"name": a.name, **_implication_doc(a.implication)} for a in axset.axioms],
        "rules": [
            {
                "name": r.name,
                "premises": [_implication_doc(p) for p in r.premises],
                "conclusion": _implication_doc(r.conclusion),
            }
            for r in axset.rules
        ],
    }


def render_axioms(sets: AxiomSet | Sequence[AxiomSet], fmt: str = "text") -> str:
    """Render one or more axiom sets as ``"text"`` or ``"machine"`` (JSON)."""
    if fmt not in _FORMAT_ALIASES:
        raise ValueError(f"Unknown axiom format: {fmt!r}. Expected one of {sorted(_FORMAT_ALIASES)}")
    group = [sets] if isinstance(sets, AxiomSet) else list(sets)
    if _FORMAT_ALIASES[fmt] == "machine":
        return json.dumps({"axiom_sets": [axiom_set_to_dict(s) for s in group]}, indent=2) + "\n"
    blocks = ["\n".join(_set_text(s)) for s in group]
    return TEXT_HEADER + "\n" + "\n\n".join(blocks) + "\n"


def _implication_from(doc: Mapping[str, Any], sigs: SignatureTable | None) -> Implication:
    return Implication(parse(doc["lhs"], sigs), parse(doc["rhs"], sigs))


def load_axioms(source: str | Mapping[str, Any], sigs: SignatureTable | None = None) -> list[AxiomSet]:
    """Read back a machine-form document written by :func:`render_axioms`."""
    doc = json.loads(source) if isinstance(source, str) else source
    try:
        entries = doc["axiom_sets"]
        sets = []
        for entry in entries:
            system = entry["system"]
            if system not in ("kff", "kffplus"):
                raise ValueError(f"Unknown axiom system: {system!r}")
            axioms = tuple(
                Axiom(a["name"], parse(a["lhs"], sigs), parse(a["rhs"], sigs)) for a in entry["axioms"]
            )
            rules = tuple(
                Rule(
                    r["name"],
                    tuple(_implication_from(p, sigs) for p in r["premises"]),
                    _implication_from(r["conclusion"], sigs),
                )
                for r in entry["rules"]
            )
            sets.append(AxiomSet(system, entry["connective"], axioms, rules))
    except KeyError as e:
        raise ValueError(f"Axiom document lacks field {e.args[0]!r}") from None
    return sets
