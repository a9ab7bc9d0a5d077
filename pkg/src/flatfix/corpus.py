from dataclasses import dataclass, field
from typing import Literal

from .syntax import SharpSignature, parse_signature


@dataclass(frozen=True)
class Connective:
    """A bundled fixpoint connective with a note on where it comes from."""

    source: str
    note: str
    harmless: bool
    """Whether the body is harmless in its fixpoint variable."""
    signature: SharpSignature = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "signature", parse_signature(self.source))

    @property
    def name(self) -> str:
        return self.signature.name


CorpusName = Literal[
    "delta",
    "theta",
    "eta",
    "ex1",
    "unguarded",
    "two_step",
    "poly",
    "nested",
    "alt",
    "const",
    "cover",
]


class Corpus:
    """Connectives used by ``flatfix check`` when no signature file is given."""

    DELTA = Connective("delta(x; p) := p | <a>x", "<a*>p", harmless=True)
    THETA = Connective("theta(x; p, q) := p | (q & <a>x)", "E(q U p)", harmless=True)
    ETA = Connective("eta(x; p, q) := p | (q & [a]x)", "A(q U p)", harmless=True)
    EX1 = Connective(
        "ex1(x; p) := (p & [a]x) | (~p & <a>(x & <a>x))",
        "running example with two relevant subformulas",
        harmless=False,
    )
    UNGUARDED = Connective("unguarded(x; p) := x | p | <a>x", "bare x disjunct", harmless=True)
    TWO_STEP = Connective("two_step(x; p) := p | <a><a>x", "even-length reachability", harmless=True)
    POLY = Connective("poly(x; p) := p | <a>x | <b>x", "two actions", harmless=True)
    NESTED = Connective("nested(x; p) := p | <a>(x & [a]x)", "x under nested modalities", harmless=False)
    ALT = Connective("alt(x; p, q) := (p & <a>x) | (q & [a]x)", "no base disjunct", harmless=True)
    CONST = Connective("const(x; p) := p & <a>p", "x does not occur", harmless=True)
    COVER = Connective("cover(x; p) := p | nab a {x, p}", "body given with ∇", harmless=False)

    _name_mapping = {
        "delta": DELTA,
        "theta": THETA,
        "eta": ETA,
        "ex1": EX1,
        "unguarded": UNGUARDED,
        "two_step": TWO_STEP,
        "poly": POLY,
        "nested": NESTED,
        "alt": ALT,
        "const": CONST,
        "cover": COVER,
    }

    @classmethod
    def by_name(cls, name: CorpusName) -> Connective:
        return cls._name_mapping[name]

    @classmethod
    def all(cls) -> list[Connective]:
        return list(cls._name_mapping.values())

    @classmethod
    def signatures(cls) -> dict[str, SharpSignature]:
        return {c.name: c.signature for c in cls.all()}
