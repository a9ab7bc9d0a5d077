import pytest
from hypothesis import given, settings

from flatfix.errors import ArityError, FormulaSyntaxError, SignatureError, UnknownConnectiveError
from flatfix.syntax import (
    TOP,
    Analysis,
    And,
    Dia,
    FormulaSet,
    Lit,
    Neg,
    Sharp,
    Var,
    actions_of,
    analyze,
    canonicalize,
    conjunction,
    free_vars,
    is_guarded,
    load_signatures,
    modal_depth,
    parse,
    parse_signature,
    parse_signatures,
    polarity,
    render,
    substitute,
)

from .strategies import formulas


def test_parse_builds_canonical_ast():
    assert parse("q & p") == And((Var("p"), Var("q")))
    assert parse("p & p") == Var("p")
    assert parse("~p") == Lit("p", False)
    assert parse("<a>p") == Dia("a", Var("p"))
    assert parse("p & (q & r)") == parse("(r & q) & p")
    assert parse("T & F") == And((TOP, parse("F")))


def test_formula_set_order_is_fixed():
    assert FormulaSet.of([Var("x"), TOP]).elements == (TOP, Var("x"))
    assert FormulaSet.of([Var("x"), TOP]) == FormulaSet.of([TOP, Var("x"), Var("x")])


@pytest.mark.parametrize(
    "text",
    [
        "nab a {T, x}",
        "nab a {}",
        "<a>p",
        "[a](p | q)",
        "~(p & q)",
        "~r | p & q",
        "<1>x & <1><1>x & [2]<1>x",
    ],
)
def test_render_reads_back(text):
    assert render(parse(text)) == text


@given(formulas(actions=("a", "b")))
@settings(max_examples=200, deadline=None)
def test_render_then_parse_is_canonical(phi):
    canonical = canonicalize(phi)
    assert parse(render(canonical)) == canonical


def test_syntax_error_has_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse("p & & q")
    assert info.value.line == 1
    assert isinstance(info.value, ValueError)


def test_unknown_connective_and_arity(sigs):
    with pytest.raises(UnknownConnectiveError):
        parse("sharp nope(p)", sigs)
    with pytest.raises(ArityError):
        parse("sharp delta(p, q)", sigs)
    assert isinstance(parse("sharp delta(p)", sigs), Sharp)


@pytest.mark.parametrize(
    "line",
    [
        "bad(x; p) := ~x | p",
        "bad(x; p) := q | <a>x",
        "bad(x; x) := <a>x",
        "bad(x; p, p) := p | <a>x",
    ],
)
def test_bad_signature_is_rejected(line):
    with pytest.raises(SignatureError):
        parse_signature(line)


def test_signature_file_lines_see_earlier_connectives(tmp_path):
    text = "# reachability\nd(x; p) := p | <a>x\n\ne(x; q) := sharp d(q) | <b>x\n"
    table = parse_signatures(text)
    assert list(table) == ["d", "e"]
    assert table["e"].body == parse("sharp d(q) | <b>x", {"d": table["d"]})
    assert table["e"].arity == 1
    assert actions_of(table["e"].body) == {"a", "b"}

    path = tmp_path / "sigs.txt"
    path.write_text(text, encoding="utf-8")
    assert load_signatures(path) == table


def test_signature_defined_twice():
    with pytest.raises(ValueError, match="defined twice"):
        parse_signatures("d(x; p) := p\nd(x; p) := <a>x")


def test_applied_connective(delta):
    assert delta.applied() == Sharp(delta, (Var("p"),))
    assert render(delta.applied()) == "sharp delta(p)"


def test_analysis():
    assert analyze(parse("p | <a>x"), "x") == Analysis(frozenset({"p", "x"}), "positive", True, 1)
    assert polarity(parse("~x | p"), "x") == "negative"
    assert polarity(parse("~x | <a>x"), "x") == "both"
    assert polarity(parse("p"), "x") == "absent"
    assert not is_guarded(parse("x | p"), "x")
    assert is_guarded(parse("nab a {x}"), "x")
    assert modal_depth(parse("<a>[b]p & q")) == 2
    assert modal_depth(parse("nab a {}")) == 1


def test_analysis_looks_through_connectives(delta):
    table = {"delta": delta}
    assert polarity(parse("sharp delta(~x)", table), "x") == "negative"
    assert not is_guarded(parse("sharp delta(x)", table), "x")
    assert is_guarded(parse("sharp delta(<a>x)", table), "x")
    assert actions_of(parse("sharp delta(p)", table)) == {"a"}


def test_substitute():
    result = substitute(parse("~p & <a>p"), {"p": Var("q")})
    assert canonicalize(result) == parse("~q & <a>q")
    assert substitute(parse("~p"), {"p": parse("q & r")}) == Neg(parse("q & r"))


@given(formulas(actions=("a", "b")))
@settings(max_examples=1000, deadline=None)
def test_canonicalize_is_idempotent(phi):
    once = canonicalize(phi)
    assert canonicalize(once) == once


@given(formulas(actions=("a", "b")))
@settings(max_examples=1000, deadline=None)
def test_identity_substitution(phi):
    assert substitute(phi, {v: Var(v) for v in free_vars(phi)}) == phi


@pytest.mark.parametrize("name", ["T", "F", "nab", "sharp"])
def test_keywords_cannot_name_variables(name):
    with pytest.raises(FormulaSyntaxError, match="keyword"):
        Var(name)
    with pytest.raises(FormulaSyntaxError, match="keyword"):
        Lit(name, False)
    assert render(Var(name + "1")) == name + "1"


def test_same_named_connectives_stay_apart():
    lazy = parse_signature("d(x; p) := p | <a>x")
    eager = parse_signature("d(x; p) := p | [a]x")
    left, right = lazy.applied(), eager.applied()
    assert left != right
    assert len(FormulaSet.of([left, right])) == 2
    assert FormulaSet.of([left, right]) == FormulaSet.of([right, left])
    assert conjunction([left, right, left]) == And(FormulaSet.of([left, right]).elements)
