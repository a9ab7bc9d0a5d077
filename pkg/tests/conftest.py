import pytest

from flatfix.corpus import Corpus
from flatfix.semantics import all_models, random_model
from flatfix.syntax import SharpSignature


@pytest.fixture(scope="session")
def sigs() -> dict[str, SharpSignature]:
    return Corpus.signatures()


@pytest.fixture(scope="session")
def ex1() -> SharpSignature:
    return Corpus.EX1.signature


@pytest.fixture(scope="session")
def delta() -> SharpSignature:
    return Corpus.DELTA.signature


@pytest.fixture(scope="session")
def small_models_p():
    """Every model with at most two states over action a and proposition p."""
    return list(all_models(2, ["a"], ["p"]))


@pytest.fixture(scope="session")
def small_models_pq():
    return list(all_models(2, ["a"], ["p", "q"]))


@pytest.fixture(scope="session")
def random_models():
    return [random_model([7, i], 3, ["a", "b"], ["p", "q", "x"]) for i in range(40)]
