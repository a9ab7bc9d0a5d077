import numpy as np
import pytest
from hypothesis import given, settings

from flatfix.errors import BudgetExceededError, FragmentError, UnguardedError
from flatfix.normal import (
    SpecialConjunction,
    conjoin_nablas,
    decompose,
    distribute_nabla,
    full_relations,
    guard_split,
    is_disjunctive,
    is_nabla_fragment,
    is_pure_disjunction,
    is_pure_nbx,
    is_semisimple,
    is_simple,
    merge_semisimple,
    nabla_simplify,
    to_disjunctive,
    to_nabla,
    to_pure_disjunction,
    to_pure_nbx,
)
from flatfix.normal.simplify import conjoin_variables
from flatfix.pipeline import preprocess
from flatfix.semantics import all_models, evaluate, random_model, valuations
from flatfix.syntax import BOT, FormulaSet, Lit, Var, conjunction, is_guarded, parse

from .strategies import fixpoint_bodies, formulas, semisimple_terms

EX1_PURE = "p & nab a {} | p & nab a {x} | ~p & nab a {T, x & nab a {T, x}}"


def _same_truth(models, phi, psi) -> bool:
    return all(np.array_equal(evaluate(m, phi), evaluate(m, psi)) for m in models)


# -----------------------------------------------------------------------
# ∇-form and disjunctive form
# -----------------------------------------------------------------------


@pytest.mark.parametrize(
    "source, expected",
    [
        ("<a>p", "nab a {p, T}"),
        ("[a]p", "nab a {} | nab a {p}"),
        ("~<a>p", "nab a {} | nab a {~p}"),
        ("~[a]p", "nab a {T, ~p}"),
        ("~(p | ~q)", "~p & q"),
        ("~nab a {p}", "nab a {T, ~p} | nab a {} | nab a {~p}"),
    ],
)
def test_to_nabla(source, expected):
    result = to_nabla(parse(source))
    assert result == parse(expected)
    assert is_nabla_fragment(result)


def test_to_nabla_refuses_connectives(sigs):
    with pytest.raises(FragmentError):
        to_nabla(parse("sharp delta(p)", sigs))


def test_to_disjunctive():
    result = to_disjunctive(parse("p & (q | nab a {r})"))
    assert result == parse("p & q | p & nab a {r}")
    assert is_disjunctive(result)
    with pytest.raises(FragmentError):
        to_disjunctive(parse("<a>p"))


def test_conjoined_nablas_are_merged():
    result = to_disjunctive(parse("nab a {p} & nab a {q}"))
    assert result == parse("nab a {p & q}")
    assert to_disjunctive(parse("nab a {} & nab a {q}")) == BOT


# -----------------------------------------------------------------------
# Pure forms
# -----------------------------------------------------------------------


def test_pure_disjunction_fills_in_actions():
    result = to_pure_disjunction(parse("p"), ["a"])
    assert result == parse("p & nab a {T} | p & nab a {}")
    assert is_pure_disjunction(result, ["a"])
    with pytest.raises(FragmentError):
        to_pure_disjunction(parse("nab b {p}"), ["a"])


def test_guard_split_drops_bare_x():
    assert guard_split(parse("x | p | <a>x"), "x") == parse("p | <a>x")
    assert guard_split(parse("(x & q) | p"), "x") == Var("p")
    assert guard_split(parse("p | <a>x"), "x") == parse("p | <a>x")
    with pytest.raises(FragmentError):
        guard_split(parse("~x | p"), "x")


def test_running_example_pure_form(ex1):
    pre = preprocess(ex1)
    assert pre.actions == ("a",)
    assert pre.pure == parse(EX1_PURE)
    assert is_pure_nbx(pre.pure, "x", ["a"])


def test_pure_form_needs_guarded_positive_x():
    with pytest.raises(UnguardedError):
        to_pure_nbx(parse("x | p"), "x", ["a"])
    with pytest.raises(FragmentError):
        to_pure_nbx(parse("~<a>x"), "x", ["a"])


def test_pure_nbx_keeps_truth_on_small_models(ex1, small_models_p):
    pre = preprocess(ex1)
    for model in small_models_p:
        for value in ([False] * model.size, [True] * model.size):
            env = {"x": np.array(value, dtype=bool)}
            assert np.array_equal(evaluate(model, pre.pure, env), evaluate(model, pre.guarded, env))


# -----------------------------------------------------------------------
# ∇-arithmetic
# -----------------------------------------------------------------------


@pytest.mark.parametrize(
    "source, expected",
    [
        ("p & ~p & nab a {q}", "F"),
        ("q & nab a {F, p}", "F"),
        ("p | p & q", "p"),
        ("nab a {x} | nab a {T, x}", "nab a {T, x}"),
        ("nab a {p & q} | nab a {p}", "nab a {p}"),
        ("nab a {T} | nab a {p}", "nab a {T}"),
    ],
)
def test_nabla_simplify(source, expected):
    assert nabla_simplify(parse(source)) == parse(expected)


def test_full_relations():
    assert len(full_relations(2, 2)) == 7
    assert len(full_relations(1, 3)) == 1
    assert len(full_relations(2, 1)) == 1
    assert full_relations(0, 0) == ((),)
    assert full_relations(1, 0) == ()


def test_distribute_nabla():
    p, q = Var("p"), Var("q")
    found = distribute_nabla([[p, q]])
    assert set(found) == {FormulaSet.of([p]), FormulaSet.of([q]), FormulaSet.of([p, q])}
    assert distribute_nabla([[p], []]) == []


def test_conjoin_nablas():
    found = conjoin_nablas(FormulaSet.of([Var("z_1")]), FormulaSet.of([Var("z_2")]), conjoin_variables)
    assert found == [FormulaSet.of([parse("z_1 & z_2")])]


def test_merge_semisimple():
    merged = merge_semisimple([parse("nab a {z_1}"), parse("nab a {z_2, T}")], ["z_1", "z_2"])
    assert merged == parse("nab a {z_1, z_1 & z_2}")
    assert is_semisimple(merged, frozenset({"z_1", "z_2"}))
    assert not is_simple(merged, frozenset({"z_1", "z_2"}))
    with pytest.raises(FragmentError):
        merge_semisimple([parse("nab a {~z_1}")], ["z_1"])
    with pytest.raises(ValueError):
        merge_semisimple([])


def test_decompose():
    (sc,) = decompose(parse("p & ~q & nab a {r}"))
    assert sc.literals == {Lit("p", True), Lit("q", False)}
    assert sc.nabla("a") == FormulaSet.of([Var("r")])
    assert sc.nabla("b") is None
    assert sc.to_formula() == parse("p & ~q & nab a {r}")
    assert decompose(parse("nab a {} & nab a {q}")) == []
    with pytest.raises(FragmentError):
        decompose(parse("nab a {p} & nab a {q}"))
    assert SpecialConjunction.build([Lit("p", True), Lit("p", False)]).is_contradictory()


# -----------------------------------------------------------------------
# Equivalence of every pass on small models
# -----------------------------------------------------------------------


@given(formulas(depth=3))
@settings(max_examples=1000, deadline=None)
def test_passes_preserve_truth(small_models_pq, phi):
    nabla_form = to_nabla(phi)
    assert is_nabla_fragment(nabla_form)
    assert _same_truth(small_models_pq, phi, nabla_form)
    disjunctive = to_disjunctive(nabla_form)
    assert is_disjunctive(disjunctive)
    assert _same_truth(small_models_pq, phi, disjunctive)
    assert _same_truth(small_models_pq, phi, nabla_simplify(disjunctive))


@given(formulas(depth=2))
@settings(max_examples=200, deadline=None)
def test_pure_disjunction_preserves_truth(small_models_pq, phi):
    pure = to_pure_disjunction(to_nabla(phi), ["a"])
    assert is_pure_disjunction(pure, ["a"])
    assert _same_truth(small_models_pq, phi, pure)


@given(formulas(actions=("a", "b"), depth=3))
@settings(max_examples=100, deadline=None)
def test_passes_preserve_truth_polymodal(random_models, phi):
    nabla_form = to_nabla(phi)
    assert _same_truth(random_models, phi, nabla_form)
    assert _same_truth(random_models, phi, to_disjunctive(nabla_form))


def test_conjunction_of_variables():
    assert conjoin_variables(Var("z_2"), parse("z_1 & z_2")) == conjunction([Var("z_1"), Var("z_2")])


# -----------------------------------------------------------------------
# Properties of the individual passes
# -----------------------------------------------------------------------


@pytest.fixture(scope="module")
def models_upto_3_states():
    return list(all_models(3, ["a"], ["p"]))


def _prefixpoints(model, gamma, x="x"):
    """Masks of the x-values U with gamma(U) <= U."""
    found = set()
    for env in valuations(model, [x], budget=12):
        if not (evaluate(model, gamma, env) & ~env[x]).any():
            found.add(tuple(env[x]))
    return found


@pytest.mark.parametrize(
    "source",
    [
        "x | p | <a>x",
        "x & <a>x | p & [a]x",
        "(x | p) & (x | <a>x)",
        "x & p | x & <a>x",
        "x | ~p & nab a {x, T}",
    ],
)
def test_guard_split_keeps_prefixpoints(models_upto_3_states, source):
    gamma = parse(source)
    guarded = guard_split(gamma, "x")
    assert is_guarded(guarded, "x")
    for model in models_upto_3_states:
        assert _prefixpoints(model, gamma) == _prefixpoints(model, guarded), model


def test_guard_split_keeps_prefixpoints_of_running_example(ex1, models_upto_3_states):
    guarded = guard_split(ex1.body, ex1.x)
    for model in models_upto_3_states:
        assert _prefixpoints(model, ex1.body, ex1.x) == _prefixpoints(model, guarded, ex1.x)


@given(fixpoint_bodies(guarded=False))
@settings(max_examples=200, deadline=None)
def test_guard_split_keeps_prefixpoints_generated(small_models_p, gamma):
    guarded = guard_split(gamma, "x")
    assert is_guarded(guarded, "x")
    for model in small_models_p:
        assert _prefixpoints(model, gamma) == _prefixpoints(model, guarded)


@given(formulas(depth=3))
@settings(max_examples=500, deadline=None)
def test_nabla_simplify_is_idempotent(phi):
    once = nabla_simplify(to_disjunctive(to_nabla(phi)))
    assert nabla_simplify(once) == once


@given(semisimple_terms(), semisimple_terms(), semisimple_terms())
@settings(max_examples=100, deadline=None)
def test_merge_semisimple_is_associative(a, b, c):
    zs = ["z_1", "z_2", "z_3"]
    left = merge_semisimple([merge_semisimple([a, b], zs), c], zs)
    right = merge_semisimple([a, merge_semisimple([b, c], zs)], zs)
    flat = merge_semisimple([a, b, c], zs)
    for result in (left, right, flat):
        assert is_semisimple(result, frozenset(zs))
    models = [random_model([5, i], 3, ["a"], ["p", *zs]) for i in range(60)]
    assert _same_truth(models, left, flat)
    assert _same_truth(models, right, flat)


@given(fixpoint_bodies(guarded=True))
@settings(max_examples=200, deadline=None)
def test_pure_nbx_properties(small_models_p, gamma):
    pure = to_pure_nbx(gamma, "x", ["a"])
    assert is_pure_nbx(pure, "x", ["a"])
    assert is_guarded(pure, "x")
    for model in small_models_p:
        for env in valuations(model, ["x"], budget=12):
            assert np.array_equal(evaluate(model, pure, env), evaluate(model, gamma, env))


def test_nabla_laws_refuse_oversized_expansions():
    with pytest.raises(BudgetExceededError):
        to_pure_nbx(parse("[a][a][a]x"), "x", ["a", "b"])
    with pytest.raises(BudgetExceededError):
        distribute_nabla([[Var(f"p_{i}") for i in range(17)]])
    with pytest.raises(BudgetExceededError):
        full_relations(6, 6)
    assert is_pure_nbx(to_pure_nbx(parse("[a][a]x"), "x", ["a"]), "x", ["a"])
