"""The ∇ distributive laws.

conjunction:  nab Phi & nab Psi  ==  OR over full relations R of  nab {phi & psi | (phi, psi) in R}
disjunction:  nab (Phi + {OR Psi})  ==  OR over non-empty Psi' <= Psi of  nab (Phi + Psi')
"""

from __future__ import annotations

import functools
import itertools
import math
from collections.abc import Callable, Iterable, Sequence

from ..errors import BudgetExceededError
from ..syntax import Formula, FormulaSet, Lit
from .special import SpecialConjunction

ElementConjoiner = Callable[[Formula, Formula], Formula]

Relation = tuple[tuple[int, int], ...]

# most choice combinations one law application may enumerate
MAX_COMBINATIONS = 1 << 16


def require_within_limit(count: int, what: str) -> None:
    if count > MAX_COMBINATIONS:
        raise BudgetExceededError(
            f"{what} needs {count} combinations, more than the limit {MAX_COMBINATIONS}"
        )


def _non_empty_subsets(n: int) -> list[tuple[int, ...]]:
    return [c for k in range(1, n + 1) for c in itertools.combinations(range(n), k)]


@functools.cache
def full_relations(m: int, n: int) -> tuple[Relation, ...]:
    """Every R <= m x n whose domain is all of m and whose range is all of n.

    Depends on the sizes only, so one table serves every pair of sets.
    """
    if m == 0 or n == 0:
        return ((),) if m == n else ()
    require_within_limit((2**n - 1) ** m, f"Full relations between sets of size {m} and {n}")
    found = []
    # each left element picks a non-empty image; keep the choices that cover n
    for images in itertools.product(_non_empty_subsets(n), repeat=m):
        covered = set().union(*images)
        if len(covered) == n:
            found.append(tuple((i, j) for i, image in enumerate(images) for j in image))
    return tuple(found)


def conjoin_nablas(
    left: FormulaSet, right: FormulaSet, conjoin: ElementConjoiner
) -> list[FormulaSet]:
    """Alternatives whose disjunction is ``nab left & nab right``; empty means false."""
    lhs, rhs = left.elements, right.elements
    results: dict[FormulaSet, None] = {}
    for relation in full_relations(len(lhs), len(rhs)):
        results[FormulaSet.of(conjoin(lhs[i], rhs[j]) for i, j in relation)] = None
    return list(results)


def distribute_nabla(alternatives: Sequence[Sequence[Formula]]) -> list[FormulaSet]:
    """∇ of a set whose i-th element is the disjunction of ``alternatives[i]``.

    Returns the sets whose ∇s, taken together as a disjunction, are equivalent.
    An element with no alternatives is false and so is the whole ∇.
    """
    unique_options = [list(dict.fromkeys(options)) for options in alternatives]
    if any(not unique for unique in unique_options):
        return []
    require_within_limit(
        math.prod(2 ** len(u) - 1 for u in unique_options),
        f"Distributing nab over {len(alternatives)} element(s)",
    )
    per_element = [
        [tuple(unique[i] for i in subset) for subset in _non_empty_subsets(len(unique))]
        for unique in unique_options
    ]
    results: dict[FormulaSet, None] = {}
    for choice in itertools.product(*per_element):
        results[FormulaSet.of(f for chosen in choice for f in chosen)] = None
    return list(results)


def merge_special(
    left: SpecialConjunction, right: SpecialConjunction, conjoin: ElementConjoiner
) -> list[SpecialConjunction]:
    """Conjunction of two special conjunctions as a list of disjuncts."""
    literals: frozenset[Lit] = left.literals | right.literals
    lmap, rmap = left.boxed_map(), right.boxed_map()
    fixed = {a: s for a, s in {**lmap, **rmap}.items() if not (a in lmap and a in rmap)}
    shared = sorted(set(lmap) & set(rmap))
    options = [conjoin_nablas(lmap[a], rmap[a], conjoin) for a in shared]
    merged = []
    for choice in itertools.product(*options):
        boxed = dict(fixed)
        boxed.update(zip(shared, choice, strict=True))
        merged.append(SpecialConjunction.build(literals, boxed))
    return merged


def conjoin_all(
    groups: Iterable[list[SpecialConjunction]], conjoin: ElementConjoiner
) -> list[SpecialConjunction]:
    """Distribute a conjunction of disjunctions of special conjunctions."""
    acc: list[SpecialConjunction] | None = None
    for group in groups:
        if acc is None:
            acc = list(group)
            continue
        acc = [m for a in acc for b in group for m in merge_special(a, b, conjoin)]
        acc = list(dict.fromkeys(acc))
    return acc if acc is not None else [SpecialConjunction()]
