"""Surface syntax parser (ASCII) and signature-file loader.

Grammar, loosest binding first::

    phi | phi          disjunction
    phi & phi          conjunction
    ~phi  <a>phi  [a]phi
    T  F  name  (phi)  nab a {phi, ...}  sharp name(phi, ...)

A signature file has one connective per line, ``name(x; p1, ..., pn) := body``;
blank lines and lines starting with ``#`` are skipped. A body may use the
connectives defined on earlier lines.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Mapping
from pathlib import Path

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from ..errors import ArityError, FormulaSyntaxError, UnknownConnectiveError
from .formula import (
    BOT,
    TOP,
    And,
    Box,
    Dia,
    Formula,
    FormulaSet,
    Nabla,
    Neg,
    Or,
    Sharp,
    SharpSignature,
    Var,
    canonicalize,
)

_log = logging.getLogger(__name__)

SignatureTable = Mapping[str, SharpSignature]

FLATFIX_GRAMMAR = r"""
    formula_start: formula
    signature_start: NAME "(" NAME ";" [NAME ("," NAME)*] ")" ":=" formula

    ?formula: disj

    ?disj: conj
         | disj "|" conj                     -> or_

    ?conj: unary
         | conj "&" unary                    -> and_

    ?unary: "~" unary                        -> neg
          | "<" ACTION ">" unary             -> dia
          | "[" ACTION "]" unary             -> box
          | atom

    ?atom: "T"                               -> top
         | "F"                               -> bot
         | "nab" ACTION "{" [formula ("," formula)*] "}"   -> nabla
         | "sharp" NAME "(" [formula ("," formula)*] ")"   -> sharp
         | NAME                              -> var
         | "(" formula ")"

    ACTION: /[A-Za-z0-9_]+/
    NAME: /[A-Za-z_][A-Za-z0-9_]*/

    COMMENT: /#[^\n]*/
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


@functools.cache
def _parser() -> Lark:
    return Lark(
        FLATFIX_GRAMMAR,
        parser="lalr",
        start=["formula_start", "signature_start"],
        maybe_placeholders=True,
    )


def _present(items) -> list:
    # maybe_placeholders turns an absent [...] into a None child
    return [i for i in items if i is not None]


class _AstBuilder(Transformer):
    def __init__(self, sigs: SignatureTable):
        super().__init__()
        self._sigs = sigs

    def formula_start(self, items):
        return items[0]

    def signature_start(self, items):
        name, x, *rest = items
        *params, body = rest
        return str(name), str(x), tuple(str(p) for p in _present(params)), body

    def or_(self, items):
        return Or(tuple(items))

    def and_(self, items):
        return And(tuple(items))

    def neg(self, items):
        return Neg(items[0])

    def dia(self, items):
        return Dia(str(items[0]), items[1])

    def box(self, items):
        return Box(str(items[0]), items[1])

    def top(self, _):
        return TOP

    def bot(self, _):
        return BOT

    def var(self, items):
        return Var(str(items[0]))

    def nabla(self, items):
        action, *args = items
        return Nabla(str(action), FormulaSet.of(_present(args)))

    def sharp(self, items):
        name: Token = items[0]
        args = tuple(_present(items[1:]))
        sig = self._sigs.get(str(name))
        if sig is None:
            raise UnknownConnectiveError(
                f"Unknown connective {str(name)!r} at line {name.line}, "
                f"column {name.column}; known: {sorted(self._sigs)!r}"
            )
        if len(args) != sig.arity:
            raise ArityError(
                f"Connective {sig.name!r} takes {sig.arity} argument(s), got {len(args)}"
            )
        return Sharp(sig, args)


def _run(text: str, start: str, sigs: SignatureTable):
    try:
        tree = _parser().parse(text, start=start)
    except UnexpectedInput as e:
        context = e.get_context(text).rstrip() if e.line > 0 else ""
        message = f"Cannot parse {text.strip()!r}"
        if context:
            message += f"\n{context}"
        raise FormulaSyntaxError(message, e.line, e.column) from None
    try:
        return _AstBuilder(sigs).transform(tree)
    except VisitError as e:
        raise e.orig_exc from None


def parse(text: str, sigs: SignatureTable | None = None) -> Formula:
    """Parse ``text`` into a canonical formula."""
    return canonicalize(_run(text, "formula_start", sigs or {}))


def parse_signature(line: str, sigs: SignatureTable | None = None) -> SharpSignature:
    name, x, params, body = _run(line, "signature_start", sigs or {})
    return SharpSignature(name=name, body=canonicalize(body), x=x, params=params)


def parse_signatures(text: str, known: SignatureTable | None = None) -> dict[str, SharpSignature]:
    """Parse a whole signature file; later lines may use earlier connectives."""
    table: dict[str, SharpSignature] = dict(known or {})
    defined: dict[str, SharpSignature] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            sig = parse_signature(line, table)
        except FormulaSyntaxError as e:
            raise FormulaSyntaxError(f"Signature line {lineno}: {e}") from None
        if sig.name in defined:
            raise ValueError(f"Connective {sig.name!r} defined twice (line {lineno})")
        table[sig.name] = sig
        defined[sig.name] = sig
    _log.debug(f"Loaded {len(defined)} connective(s): {', '.join(defined)}")
    return defined


def load_signatures(path: str | Path) -> dict[str, SharpSignature]:
    return parse_signatures(Path(path).read_text(encoding="utf-8"))
