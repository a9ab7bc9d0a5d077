from hypothesis import strategies as st

from flatfix.syntax import (
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
    Var,
    conjunction,
    disjunction,
)


def formulas(
    props: tuple[str, ...] = ("p", "q"),
    actions: tuple[str, ...] = ("a",),
    depth: int = 3,
) -> st.SearchStrategy[Formula]:
    """Classical modal formulas with ∇, binary And/Or, nesting at most ``depth``."""
    atoms = st.sampled_from([TOP, BOT, *(Var(p) for p in props)])
    if depth == 0:
        return atoms
    sub = formulas(props, actions, depth - 1)
    action = st.sampled_from(actions)
    return st.one_of(
        atoms,
        sub.map(Neg),
        st.builds(lambda a, b: And((a, b)), sub, sub),
        st.builds(lambda a, b: Or((a, b)), sub, sub),
        st.builds(Dia, action, sub),
        st.builds(Box, action, sub),
        st.builds(lambda a, xs: Nabla(a, FormulaSet.of(xs)), action, st.lists(sub, max_size=2)),
    )


def fixpoint_bodies(
    props: tuple[str, ...] = ("p",),
    actions: tuple[str, ...] = ("a",),
    depth: int = 2,
    x: str = "x",
    guarded: bool = True,
) -> st.SearchStrategy[Formula]:
    """Bodies in which ``x`` occurs only positively; with ``guarded``, only under a modality."""

    def build(d: int, under: bool) -> st.SearchStrategy[Formula]:
        leaves: list[Formula] = [TOP, BOT, *(Var(p) for p in props), *(Neg(Var(p)) for p in props)]
        if under or not guarded:
            leaves.append(Var(x))
        atoms = st.sampled_from(leaves)
        if d == 0:
            return atoms
        sub, inner = build(d - 1, under), build(d - 1, True)
        action = st.sampled_from(actions)
        return st.one_of(
            atoms,
            st.builds(lambda a, b: And((a, b)), sub, sub),
            st.builds(lambda a, b: Or((a, b)), sub, sub),
            st.builds(Dia, action, inner),
            st.builds(Box, action, inner),
            st.builds(lambda a, xs: Nabla(a, FormulaSet.of(xs)), action, st.lists(inner, max_size=2)),
        )

    return build(depth, False)


def semisimple_terms(
    variables: tuple[str, ...] = ("z_1", "z_2", "z_3"),
    action: str = "a",
) -> st.SearchStrategy[Formula]:
    """Disjunctions of p-literals with one ∇ over conjunctions of ``variables``."""
    element = st.sets(st.sampled_from(variables), max_size=2).map(
        lambda names: conjunction(Var(n) for n in sorted(names))
    )
    literals = st.sampled_from([(), (Var("p"),), (Neg(Var("p")),)])
    special = st.builds(
        lambda lits, xs: conjunction([*lits, Nabla(action, FormulaSet.of(xs))]),
        literals,
        st.lists(element, max_size=2),
    )
    return st.lists(special, min_size=1, max_size=2).map(disjunction)
