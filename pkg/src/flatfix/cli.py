"""Command line front end.

    flatfix [--sigs FILE] [--actions a,b] [--json] [-v] <command> ...

Exit status: 0 on success, 1 when ``check`` finds a failure, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from .axioms import render_axioms
from .classify import classify, harmless_to_untied
from .config import Settings
from .corpus import Corpus
from .errors import FlatfixError
from .normal import guard_split, to_disjunctive, to_nabla, to_pure_disjunction, to_pure_nbx
from .pipeline import axiomatize, represent, signature_actions, simulate_signature
from .semantics import evaluate, load_model, run_suite
from .syntax import Formula, SharpSignature, actions_of, load_signatures, parse, render
from .systems import ModalSystem, parse_system, render_system, simulate, system_to_dict

_log = logging.getLogger(__name__)

FORMS = ("nabla", "disjunctive", "pure-nabla", "pure-nbx")


class UsageError(FlatfixError, ValueError):
    pass


# -----------------------------------------------------------------------
# Inputs
# -----------------------------------------------------------------------


def _signatures(args: argparse.Namespace) -> dict[str, SharpSignature]:
    return load_signatures(args.sigs) if args.sigs else Corpus.signatures()


def _selected(args: argparse.Namespace) -> list[SharpSignature]:
    sigs = _signatures(args)
    if getattr(args, "sig", None):
        if args.sig not in sigs:
            raise UsageError(f"Unknown connective {args.sig!r}. Expected one of {sorted(sigs)}")
        return [sigs[args.sig]]
    return list(sigs.values())


def _actions(args: argparse.Namespace, *extra: Formula) -> tuple[str, ...] | None:
    if args.actions:
        return tuple(sorted({a.strip() for a in args.actions.split(",") if a.strip()}))
    if not extra:
        return None
    return tuple(sorted(frozenset().union(*(actions_of(f) for f in extra))))


def _subject(args: argparse.Namespace) -> tuple[Formula, str]:
    """The formula argument, or the body of ``--sig``, with its fixpoint variable."""
    if args.formula is not None:
        return parse(args.formula, _signatures(args)), args.x
    if getattr(args, "sig", None):
        (sig,) = _selected(args)
        return sig.body, sig.x
    raise UsageError("Give a formula or --sig NAME")


def _emit(args: argparse.Namespace, text: str, doc: object) -> None:
    if args.json:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -----------------------------------------------------------------------
# Commands
# -----------------------------------------------------------------------


def cmd_normalize(args: argparse.Namespace) -> int:
    phi, x = _subject(args)
    actions = _actions(args, phi) or ()
    match args.form:
        case "nabla":
            result = to_nabla(phi)
        case "disjunctive":
            result = to_disjunctive(to_nabla(phi))
        case "pure-nabla":
            result = to_pure_disjunction(to_nabla(phi), actions)
        case "pure-nbx":
            result = to_pure_nbx(guard_split(phi, x), x, actions)
        case _:
            raise UsageError(f"Unknown form: {args.form!r}")
    _emit(args, render(result), {"form": args.form, "formula": render(result)})
    return 0


def _systems_output(args: argparse.Namespace, systems: dict[str, ModalSystem]) -> None:
    text = "\n".join(f"# {name}\n{render_system(s)}" for name, s in systems.items())
    _emit(args, text, {name: system_to_dict(s) for name, s in systems.items()})


def cmd_represent(args: argparse.Namespace) -> int:
    sigs = _selected(args)
    actions = _actions(args) or signature_actions(sigs)
    _systems_output(args, {sig.name: represent(sig, actions) for sig in sigs})
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    simplify = not args.raw
    if args.system:
        system = parse_system(Path(args.system).read_text(encoding="utf-8"), _signatures(args))
        result = simulate(system, simplify=simplify, reachable_only=args.reachable)
        _systems_output(args, {Path(args.system).stem: result})
        return 0
    sigs = _selected(args)
    actions = _actions(args) or signature_actions(sigs)
    systems = {
        sig.name: simulate_signature(sig, actions, simplify, args.reachable)[1] for sig in sigs
    }
    _systems_output(args, systems)
    return 0


def cmd_axiomatize(args: argparse.Namespace) -> int:
    sigs = _selected(args)
    sets = axiomatize(sigs, args.system, _actions(args), args.lean)
    sys.stdout.write(render_axioms(sets, "machine" if args.json else "text"))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    phi, x = _subject(args)
    verdict = classify(phi, x)
    lines = [str(verdict), f"recommended: {verdict.recommended}"]
    doc: dict[str, object] = {
        "harmless": verdict.harmless,
        "untied": verdict.untied,
        "recommended": verdict.recommended,
    }
    if verdict.harmless:
        try:
            untied = render(harmless_to_untied(phi, x))
        except FlatfixError as e:
            _log.info(f"no untied form: {e}")
        else:
            lines.append(f"untied form: {untied}")
            doc["untied_form"] = untied
    _emit(args, "\n".join(lines), doc)
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    phi = parse(Path(args.formula).read_text(encoding="utf-8"), _signatures(args))
    states = evaluate(model, phi)
    _emit(args, model.format_states(states), {"states": model.state_ids(states)})
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    settings = Settings.from_env()
    if args.budget is not None:
        settings = dataclasses.replace(settings, valuation_budget=args.budget)
    if args.workers is not None:
        settings = dataclasses.replace(settings, max_workers=args.workers)
    report = run_suite(
        _selected(args),
        models=args.models,
        max_states=args.max_states,
        seed=args.seed,
        exhaustive_2state=args.exhaustive_2state,
        actions=_actions(args),
        settings=settings,
        show_progress=args.verbose > 0 and not args.json,
    )
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return 0 if report.ok else 1


# -----------------------------------------------------------------------
# Parser
# -----------------------------------------------------------------------


def _int_at_least(text: str, least: int, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < least:
        raise argparse.ArgumentTypeError(f"expected a {what} integer, got {value}")
    return value


def _positive_int(text: str) -> int:
    return _int_at_least(text, 1, "positive")


def _count(text: str) -> int:
    # zero random models is meaningful together with --exhaustive-2state
    return _int_at_least(text, 0, "non-negative")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flatfix", description="Flat modal fixpoint logic toolkit")
    parser.add_argument("--sigs", help="signature file, one 'name(x; p, ...) := body' per line")
    parser.add_argument("--actions", help="declared actions, comma separated")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_sig(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--sig", help="restrict to one connective of the signature file")
        return p

    p = with_sig(sub.add_parser("normalize", help="rewrite a formula into a normal form"))
    p.add_argument("formula", nargs="?")
    p.add_argument("--form", choices=FORMS, default="nabla")
    p.add_argument("--x", default="x", help="fixpoint variable for pure-nbx")
    p.set_defaults(func=cmd_normalize)

    p = with_sig(sub.add_parser("represent", help="emit the system representation T"))
    p.set_defaults(func=cmd_represent)

    p = with_sig(sub.add_parser("simulate", help="emit the simple simulation T+"))
    p.add_argument("--system", help="system file instead of connectives")
    p.add_argument("--raw", action="store_true", help="skip ∇-arithmetic simplification")
    p.add_argument("--reachable", action="store_true", help="keep only variables reachable from the point")
    p.set_defaults(func=cmd_simulate)

    p = with_sig(sub.add_parser("axiomatize", help="emit kff or kffplus"))
    p.add_argument("--system", choices=("kff", "kffplus"), default="kffplus")
    p.add_argument("--lean", action="store_true", help="omit the prefix axiom and least rule from kffplus")
    p.set_defaults(func=cmd_axiomatize)

    p = with_sig(sub.add_parser("classify", help="untied / harmless verdicts"))
    p.add_argument("formula", nargs="?")
    p.add_argument("--x", default="x")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("eval", help="truth set of a formula on a model file")
    p.add_argument("--model", required=True)
    p.add_argument("--formula", required=True, help="file holding one formula")
    p.set_defaults(func=cmd_eval)

    p = with_sig(sub.add_parser("check", help="run the model-checking suite"))
    p.add_argument("--models", type=_count, default=100, help="seeded random models (0 with --exhaustive-2state)")
    p.add_argument("--max-states", type=_positive_int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive-2state", action="store_true")
    p.add_argument(
        "--budget",
        type=_positive_int,
        help="max |states| x |variables| checked exhaustively, sampled beyond (env FLATFIX_BUDGET)",
    )
    p.add_argument("--workers", type=_positive_int, help="thread count (env FLATFIX_WORKERS)")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (FlatfixError, OSError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
