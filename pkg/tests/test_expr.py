import pytest
from hypothesis import given, settings, strategies as st

from free_knot_check.words.expr import (
    PARAMETERS,
    Exponent,
    Expr,
    ExprSyntaxError,
    Factor,
    ParamBinding,
    UnknownParameterError,
    evaluate,
    expand,
    format_word,
    parse_expr,
)
from free_knot_check.words.free_group import Word, concat, reduce


@pytest.mark.parametrize(
    "text, binding, expected",
    [
        ("a^{p+1}b^{q+1}A^{p+1}B^{q+1}", (1, 1, 0), "aabbAABB"),
        ("a^{p+1}b^{q+1}A^{p+1}B^{q+1}", (2, 3, 0), "aaabbbbAAABBBB"),
        ("(ab)^3", (0, 0, 0), "ababab"),
        ("(baBA)^n", (0, 0, 2), "baBAbaBA"),
        ("A^p (AbaB)^n", (2, 0, 1), "AAAbaB"),
        ("aA", (1, 1, 1), ""),
        ("a^0 b", (1, 1, 1), "b"),
        ("((ab)^2 B)^2", (0, 0, 0), "abaaba"),
        ("", (5, 5, 5), ""),
        ("  a ^ { q + 2 } ", (0, 1, 0), "aaa"),
    ],
)
def test_evaluate(text, binding, expected):
    assert evaluate(text, ParamBinding(*binding)) == Word(expected)


def test_expand_does_not_reduce():
    assert expand(parse_expr("a(Ab)^2"), ParamBinding(0, 0, 0)) == "aAbAb"


@pytest.mark.parametrize(
    "text, position",
    [
        ("a^^2", 3),
        ("a^(p", 3),
        ("(ab", 4),
        ("a^{p+1", 7),
        ("a^{p+}", 6),
        ("ab)", 3),
        ("ac", 2),
    ],
)
def test_syntax_error_position(text, position):
    with pytest.raises(ExprSyntaxError) as e:
        parse_expr(text)
    assert e.value.position == position
    assert f"position {position}" in str(e.value)


def test_unknown_parameter():
    with pytest.raises(UnknownParameterError) as e:
        parse_expr("a^x")
    assert e.value.position == 3


def test_negative_binding_rejected():
    with pytest.raises(ValueError):
        evaluate("a^p", ParamBinding(-1, 0, 0))


@pytest.mark.parametrize(
    "text, display",
    [
        ("A^{p+1} (baBA)^n b^{q+1}", "A^{p+1}(baBA)^nb^{q+1}"),
        ("a^1 b^{p}", "ab^p"),
        ("a^{p+0}", "a^p"),
        ("a^0", "a^0"),
        ("((ab)^2B)^q", "((ab)^2B)^q"),
    ],
)
def test_display_form(text, display):
    assert str(parse_expr(text)) == display


def test_blocks_are_top_level_parentheses():
    e = parse_expr("A^{p+1}(baBA)^n b ((ab)^2)^n")
    assert [str(b) for b in e.blocks()] == ["baBA", "(ab)^2"]
    assert e.factors[0].exponent == Exponent("p", 1)


@pytest.mark.parametrize("word, expected", [("AAAb", "A^3b"), ("", ""), ("abAB", "abAB"), ("aabbb", "a^2b^3")])
def test_format_word(word, expected):
    assert format_word(word) == expected


@settings(max_examples=500, deadline=None)
@given(st.text(alphabet="abAB", max_size=20), st.text(alphabet="abAB", max_size=6), st.integers(0, 4))
def test_evaluate_agrees_with_free_reduction(prefix, block, n):
    text = f"{prefix}({block})^n" if block else prefix
    assert evaluate(text, ParamBinding(0, 0, n)) == reduce(prefix + block * n)


exponents = st.one_of(
    st.builds(Exponent, st.none(), st.integers(0, 3)),
    st.builds(Exponent, st.sampled_from(PARAMETERS), st.integers(0, 2)),
)
factors = st.recursive(
    st.builds(Factor, st.sampled_from("abAB"), exponents),
    lambda children: st.builds(Factor, st.lists(children, max_size=3).map(lambda fs: Expr(tuple(fs))), exponents),
    max_leaves=8,
)
exprs = st.lists(factors, max_size=4).map(lambda fs: Expr(tuple(fs)))
bindings = st.builds(ParamBinding, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))


@settings(max_examples=500, deadline=None)
@given(exprs, bindings)
def test_display_form_parses_back(e, binding):
    assert parse_expr(str(e)) == e
    assert evaluate(parse_expr(str(e)), binding) == evaluate(e, binding)


@settings(max_examples=500, deadline=None)
@given(exprs, exprs, bindings)
def test_evaluate_is_a_homomorphism(e1, e2, binding):
    assert evaluate(e1 + e2, binding) == concat(evaluate(e1, binding), evaluate(e2, binding))
    assert str(e1 + e2) == str(e1) + str(e2)


@settings(max_examples=500, deadline=None)
@given(st.text(alphabet="abAB", max_size=30).map(reduce), bindings)
def test_format_word_parses_back(w, binding):
    assert evaluate(parse_expr(format_word(w)), binding) == w
