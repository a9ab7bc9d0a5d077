import numpy as np
import pytest

from flatfix.axioms import Axiom, Implication, Rule, kozen_park
from flatfix.corpus import Corpus
from flatfix.errors import BudgetExceededError, NonMonotoneError, UnassignedVariableError
from flatfix.normal import guard_split
from flatfix.pipeline import axiomatize_one, preprocess
from flatfix.semantics import (
    KripkeModel,
    all_models,
    apply_system,
    chain,
    check_axiom,
    check_implication,
    check_rule,
    evaluate,
    iota,
    least_prefixpoint_bruteforce,
    lfp_formula,
    lfp_system,
    load_model,
    model_from_dict,
    model_from_edges,
    model_to_dict,
    random_model,
    save_model,
    valuations,
)
from flatfix.syntax import TOP, Var, parse


def _states(*members):
    return np.array(members, dtype=bool)


# -----------------------------------------------------------------------
# Models
# -----------------------------------------------------------------------


def test_model_shape_is_checked():
    with pytest.raises(ValueError):
        KripkeModel(0, {}, {})
    with pytest.raises(ValueError):
        KripkeModel(2, {"a": np.zeros((2, 3), dtype=bool)}, {})
    with pytest.raises(ValueError):
        KripkeModel(2, {}, {"p": [True]})
    with pytest.raises(ValueError):
        KripkeModel(2, {}, {}, labels=(4, 4))


def test_missing_relation_has_no_edges():
    model = model_from_edges(2, {}, {"p": [1]})
    assert not model.relation("a").any()
    assert model.state_ids(evaluate(model, parse("[a]F"))) == [0, 1]


def test_model_document_keeps_state_ids(tmp_path):
    model = model_from_dict({"states": [3, 7], "relations": {"a": [[3, 7]]}, "valuation": {"p": [7]}})
    assert model.states == (3, 7)
    assert model.state_ids(evaluate(model, parse("<a>p"))) == [3]
    assert model_to_dict(model) == {"states": [3, 7], "relations": {"a": [[3, 7]]}, "valuation": {"p": [7]}}

    path = tmp_path / "model.json"
    save_model(model, path)
    again = load_model(path)
    assert again.states == (3, 7)
    assert np.array_equal(again.relation("a"), model.relation("a"))


def test_model_document_errors():
    with pytest.raises(ValueError, match="Unknown state"):
        model_from_dict({"states": [0, 1], "relations": {"a": [[0, 2]]}})
    with pytest.raises(ValueError, match="Malformed"):
        model_from_dict({"relations": {}})


def test_random_model_is_seeded():
    first = random_model(5, 4, ["a"], ["p"])
    second = random_model(5, 4, ["a"], ["p"])
    assert first.size == second.size
    assert 1 <= first.size <= 4
    assert np.array_equal(first.relation("a"), second.relation("a"))
    assert np.array_equal(first.valuation["p"], second.valuation["p"])
    with pytest.raises(ValueError):
        random_model(0, 0, ["a"], ["p"])


def test_all_models_count():
    assert sum(1 for _ in all_models(2, ["a"], ["p"])) == 4 + 64
    assert sum(1 for _ in all_models(1, ["a", "b"], [])) == 4


# -----------------------------------------------------------------------
# Evaluation
# -----------------------------------------------------------------------


def test_cover_modality_on_a_dead_end():
    model = model_from_edges(1, {"a": []}, {})
    assert model.format_states(evaluate(model, parse("nab a {}"))) == "{0}"
    assert model.format_states(evaluate(model, parse("nab a {T}"))) == "{}"


def test_cover_modality_on_a_chain():
    model = chain(3, valuation={"p": [1]})
    assert model.state_ids(evaluate(model, parse("nab a {p}"))) == [0]
    assert model.state_ids(evaluate(model, parse("nab a {p, ~p}"))) == []
    assert model.state_ids(evaluate(model, parse("<a>p & [a]p"))) == [0]


def test_connective_on_a_chain(sigs):
    model = chain(3, valuation={"p": [2]})
    reach = evaluate(model, parse("sharp delta(p)", sigs))
    assert model.format_states(reach) == "{0,1,2}"
    nowhere = evaluate(model, parse("sharp delta(q)", sigs), {"q": model.empty()})
    assert model.format_states(nowhere) == "{}"


def test_valuation_overrides_model():
    model = chain(2, valuation={"p": [0]})
    assert model.state_ids(evaluate(model, Var("p"), {"p": _states(False, True)})) == [1]
    with pytest.raises(UnassignedVariableError):
        evaluate(model, Var("q"))


def test_lfp_traces():
    model = chain(3)
    value, trace = lfp_formula(model, Var("x"), "x")
    assert not value.any()
    assert trace.converged_at == 0
    assert len(trace) == 2

    value, trace = lfp_formula(model, TOP, "x")
    assert value.all()
    assert trace.converged_at == 1
    assert [s.tolist() for s in trace.steps] == [[False] * 3, [True] * 3, [True] * 3]
    assert trace.at(10).all()


def test_lfp_of_a_non_monotone_map():
    with pytest.raises(NonMonotoneError):
        lfp_formula(chain(2), parse("~x"), "x")


def test_iota():
    a, b = _states(True, True, False), _states(False, True, True)
    found = iota({"z_1": a, "z_2": b}, {"y_1": ("z_1",), "y_2": ("z_2",), "y_1_2": ("z_1", "z_2")})
    assert found["y_1"].tolist() == a.tolist()
    assert found["y_2"].tolist() == b.tolist()
    assert found["y_1_2"].tolist() == [False, True, False]


@pytest.mark.parametrize("connective", Corpus.all(), ids=lambda c: c.name)
def test_iteration_reaches_least_prefixpoint(connective, random_models):
    sig = connective.signature
    guarded = guard_split(sig.body, sig.x)
    for model in random_models[:15]:
        value, _ = lfp_formula(model, sig.body, sig.x)
        assert np.array_equal(value, least_prefixpoint_bruteforce(model, sig.body, sig.x))
        assert np.array_equal(value, lfp_formula(model, guarded, sig.x)[0])


def test_system_solution_matches_formula(ex1, small_models_p):
    plus = axiomatize_one(ex1)
    representation, simulation = plus.representation, plus.simulation
    pure = preprocess(ex1).pure
    for model in small_models_p:
        formula_value, _ = lfp_formula(model, pure, "x")
        solution, trace = lfp_system(model, representation)
        assert np.array_equal(solution["z_g"], formula_value)
        assert trace.at(0).shape == (2, model.size)
        simulated, _ = lfp_system(model, simulation)
        expected = iota(solution, simulation.subsets)
        for y in simulation.variables:
            assert np.array_equal(simulated[y], expected[y])


def test_apply_system(ex1):
    plus = axiomatize_one(ex1)
    model = chain(2, valuation={"p": [1]})
    image = apply_system(model, plus.representation, {"z_g": model.empty(), "z_4": model.empty()})
    assert model.state_ids(image["z_g"]) == [1]
    assert model.state_ids(image["z_4"]) == []


# -----------------------------------------------------------------------
# Oracles
# -----------------------------------------------------------------------


def test_valuation_enumeration_order():
    model = chain(2)
    found = [(v["p"].tolist(), v["q"].tolist()) for v in valuations(model, ["q", "p"])]
    assert len(found) == 16
    assert found[0] == ([False, False], [False, False])
    assert found[1] == ([False, False], [True, False])
    assert found[4] == ([True, False], [False, False])


def test_budget_is_enforced():
    model = chain(3)
    with pytest.raises(BudgetExceededError):
        list(valuations(model, ["p", "q", "r", "s", "t"], budget=12))
    assert sum(1 for _ in valuations(model, ["p"], budget=3)) == 8


def test_valuations_are_sampled_beyond_the_budget():
    model = chain(3)
    names = ["p", "q", "r", "s", "t"]
    drawn = list(valuations(model, names, budget=4, sample=True, seed=[1, 3]))
    assert len(drawn) == 16
    assert not any(v.any() for v in drawn[0].values())
    assert all(v.all() for v in drawn[1].values())
    again = list(valuations(model, names, budget=4, sample=True, seed=[1, 3]))
    assert all(a[n].tolist() == b[n].tolist() for a, b in zip(drawn, again, strict=True) for n in names)


def test_sampled_verdicts_are_marked():
    model = chain(3)
    p, q = Var("p"), Var("q")
    verdict = check_implication(model, Implication(p, parse("p | q")), budget=2, sample=True)
    assert verdict
    assert not verdict.exhaustive
    assert verdict.checked == 4
    wrong = check_implication(model, Implication(parse("p | q"), p), budget=4, sample=True)
    assert not wrong
    assert not wrong.exhaustive
    assert wrong.counterexample is not None
    assert check_implication(model, Implication(p, q), budget=12).exhaustive


def test_wrong_axiom_has_a_counterexample(sigs):
    model = chain(3, valuation={"p": [2]})
    wrong = Axiom("wrong", parse("sharp delta(p)", sigs), Var("p"))
    verdict = check_axiom(model, wrong, budget=12)
    assert not verdict
    assert verdict.counterexample == {"p": (1,)}
    assert verdict.state == 0
    assert verdict.checked == 3


def test_rule_read_as_quasi_equation():
    rule = Rule("r", (Implication(Var("y"), Var("y")),), Implication(TOP, Var("y")))
    verdict = check_rule(chain(2), rule)
    assert not verdict
    assert verdict.counterexample == {"y": ()}
    # premise and conclusion coincide
    assert check_rule(chain(1), Rule("r", (Implication(TOP, Var("y")),), Implication(TOP, Var("y"))))


def test_implication_holds():
    model = chain(2)
    assert check_implication(model, Implication(Var("p"), parse("p | q")))


def test_running_example_axioms_are_sound(ex1):
    axiom_sets = [kozen_park(ex1), axiomatize_one(ex1).axioms]
    models = [*all_models(1, ["a"], ["p"]), *(random_model([3, i], 2, ["a"], ["p"]) for i in range(6))]
    for model in models:
        for axset in axiom_sets:
            for axiom in axset.axioms:
                assert check_axiom(model, axiom, budget=12), f"{axiom.name} on {model!r}"
            for rule in axset.rules:
                assert check_rule(model, rule, budget=12), f"{rule.name} on {model!r}"
