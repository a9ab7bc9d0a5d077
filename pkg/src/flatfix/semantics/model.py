"""Finite Kripke models over numpy boolean arrays.

A state set is a boolean vector of length ``size``; relation ``R_a`` is a
``size x size`` boolean matrix with ``R[s, t]`` meaning ``s -> t``.
"""

from __future__ import annotations

import itertools
import json
import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np
import numpy.typing as npt

_log = logging.getLogger(__name__)

StateSet = npt.NDArray[np.bool_]


@dataclass(frozen=True, eq=False)
class KripkeModel:
    size: int
    relations: Mapping[str, npt.NDArray[np.bool_]]
    valuation: Mapping[str, StateSet]
    labels: tuple[int, ...] | None = None
    """State ids as written in a model file; ``range(size)`` when absent."""

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"A model needs at least one state, got size {self.size}")
        relations = {}
        for action, matrix in self.relations.items():
            matrix = np.asarray(matrix, dtype=bool)
            if matrix.shape != (self.size, self.size):
                raise ValueError(
                    f"Relation {action!r} has shape {matrix.shape}, expected {(self.size, self.size)}"
                )
            relations[action] = matrix
        valuation = {}
        for prop, vec in self.valuation.items():
            vec = np.asarray(vec, dtype=bool)
            if vec.shape != (self.size,):
                raise ValueError(f"Valuation of {prop!r} has shape {vec.shape}, expected ({self.size},)")
            valuation[prop] = vec
        if self.labels is not None and (
            len(self.labels) != self.size or len(set(self.labels)) != self.size
        ):
            raise ValueError(f"Expected {self.size} distinct state ids, got {self.labels!r}")
        object.__setattr__(self, "relations", relations)
        object.__setattr__(self, "valuation", valuation)

    @property
    def states(self) -> tuple[int, ...]:
        return self.labels if self.labels is not None else tuple(range(self.size))

    def relation(self, action: str) -> npt.NDArray[np.bool_]:
        """``R_a``; an action the model does not list has no edges."""
        found = self.relations.get(action)
        return found if found is not None else np.zeros((self.size, self.size), dtype=bool)

    def empty(self) -> StateSet:
        return np.zeros(self.size, dtype=bool)

    def full(self) -> StateSet:
        return np.ones(self.size, dtype=bool)

    def state_ids(self, vec: StateSet) -> list[int]:
        ids = self.states
        return [ids[i] for i in np.flatnonzero(vec)]

    def format_states(self, vec: StateSet) -> str:
        return "{" + ",".join(str(s) for s in self.state_ids(vec)) + "}"

    def __repr__(self) -> str:
        edges = {a: int(m.sum()) for a, m in sorted(self.relations.items())}
        return f"KripkeModel(size={self.size}, edges={edges}, props={sorted(self.valuation)})"


def model_from_edges(
    size: int,
    relations: Mapping[str, Iterable[tuple[int, int]]],
    valuation: Mapping[str, Iterable[int]],
) -> KripkeModel:
    """Build a model on states ``0..size-1`` from edge and member lists."""
    matrices = {}
    for action, edges in relations.items():
        matrix = np.zeros((size, size), dtype=bool)
        for s, t in edges:
            matrix[s, t] = True
        matrices[action] = matrix
    vectors = {}
    for prop, members in valuation.items():
        vec = np.zeros(size, dtype=bool)
        vec[list(members)] = True
        vectors[prop] = vec
    return KripkeModel(size, matrices, vectors)


def chain(size: int, action: str = "a", valuation: Mapping[str, Iterable[int]] | None = None) -> KripkeModel:
    """``0 -> 1 -> ... -> size-1``."""
    edges = [(i, i + 1) for i in range(size - 1)]
    return model_from_edges(size, {action: edges}, valuation or {})


# -----------------------------------------------------------------------
# Model documents: {states, relations: {a: [[s, t]]}, valuation: {p: [s]}}
# -----------------------------------------------------------------------


def model_to_dict(model: KripkeModel) -> dict[str, Any]:
    ids = model.states
    return {
        "states": list(ids),
        "relations": {
            a: [[ids[s], ids[t]] for s, t in zip(*np.nonzero(m))] for a, m in sorted(model.relations.items())
        },
        "valuation": {p: model.state_ids(v) for p, v in sorted(model.valuation.items())},
    }


def model_from_dict(doc: Mapping[str, Any]) -> KripkeModel:
    try:
        ids = [int(s) for s in doc["states"]]
        relations = doc.get("relations", {})
        valuation = doc.get("valuation", {})
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"Malformed model document: {e}") from None
    index = {s: i for i, s in enumerate(ids)}

    def position(state: Any, where: str) -> int:
        try:
            return index[int(state)]
        except (KeyError, TypeError, ValueError):
            raise ValueError(f"Unknown state {state!r} in {where}") from None

    edges = {a: [(position(s, a), position(t, a)) for s, t in pairs] for a, pairs in relations.items()}
    members = {p: [position(s, p) for s in states] for p, states in valuation.items()}
    model = model_from_edges(len(ids), edges, members)
    return KripkeModel(model.size, model.relations, model.valuation, tuple(ids))


def load_model(path: str | Path) -> KripkeModel:
    with open(path, encoding="utf-8") as f:
        model = model_from_dict(json.load(f))
    _log.debug(f"loaded {model!r} from {path}")
    return model


def save_model(model: KripkeModel, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(model_to_dict(model), f, indent=2)
        f.write("\n")


# -----------------------------------------------------------------------
# Model sources
# -----------------------------------------------------------------------


def random_model(
    seed: int | Sequence[int] | np.random.Generator,
    max_states: int,
    actions: Sequence[str],
    props: Sequence[str],
) -> KripkeModel:
    """Uniform state count in ``[1, max_states]``; every edge and membership with probability 1/2."""
    if max_states < 1:
        raise ValueError(f"max_states must be at least 1, got {max_states}")
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_states + 1))
    relations = {a: rng.random((n, n)) < 0.5 for a in sorted(set(actions))}
    valuation = {p: rng.random(n) < 0.5 for p in sorted(set(props))}
    return KripkeModel(n, relations, valuation)


def _bit_vectors(length: int) -> list[npt.NDArray[np.bool_]]:
    shifts = np.arange(length)
    return [((mask >> shifts) & 1).astype(bool) for mask in range(1 << length)]


def all_models(max_states: int, actions: Sequence[str], props: Sequence[str]) -> Iterator[KripkeModel]:
    """Every model with 1..max_states states over the given actions and props."""
    actions = sorted(set(actions))
    props = sorted(set(props))
    for n in range(1, max_states + 1):
        matrices = [bits.reshape(n, n) for bits in _bit_vectors(n * n)]
        vectors = _bit_vectors(n)
        for rels in itertools.product(matrices, repeat=len(actions)):
            for vals in itertools.product(vectors, repeat=len(props)):
                yield KripkeModel(n, dict(zip(actions, rels)), dict(zip(props, vals)))
