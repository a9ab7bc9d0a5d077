from .formula import (
    And,
    Bot,
    Box,
    Dia,
    Formula,
    Lit,
    Nabla,
    Neg,
    Or,
    Sharp,
    Top,
    Var,
)

_OR, _AND, _UNARY = 1, 2, 3


def _precedence(phi: Formula) -> int:
    if isinstance(phi, Or) and len(phi.args) > 1:
        return _OR
    if isinstance(phi, And) and len(phi.args) > 1:
        return _AND
    if isinstance(phi, And | Or) and len(phi.args) == 1:
        return _precedence(phi.args[0])
    return _UNARY


def _wrapped(phi: Formula, needed: int) -> str:
    text = render(phi)
    return f"({text})" if _precedence(phi) < needed else text


def render(phi: Formula) -> str:
    """Deterministic ASCII rendering; ``parse(render(phi)) == canonicalize(phi)``."""
    match phi:
        case Top():
            return "T"
        case Bot():
            return "F"
        case Var(name):
            return name
        case Lit(name, positive):
            return name if positive else f"~{name}"
        case Neg(arg):
            return "~" + _wrapped(arg, _UNARY)
        case And(args):
            if not args:
                return "T"
            return " & ".join(_wrapped(a, _AND) for a in args)
        case Or(args):
            if not args:
                return "F"
            return " | ".join(_wrapped(a, _OR) for a in args)
        case Dia(action, arg):
            return f"<{action}>" + _wrapped(arg, _UNARY)
        case Box(action, arg):
            return f"[{action}]" + _wrapped(arg, _UNARY)
        case Nabla(action, args):
            return f"nab {action} {{" + ", ".join(render(a) for a in args) + "}"
        case Sharp(sig, args):
            return f"sharp {sig.name}(" + ", ".join(render(a) for a in args) + ")"
    raise TypeError(f"Not a formula: {phi!r}")
