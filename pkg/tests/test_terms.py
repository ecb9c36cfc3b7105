from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from peakit.terms import (
    Binary,
    Const,
    Defined,
    Eq,
    Law,
    Leq,
    TermSyntaxError,
    Unary,
    Var,
    format_law,
    format_term,
    parse_law,
    parse_law_file,
    parse_term,
)

x, y, z = Var("x"), Var("y"), Var("z")


def test_product_with_implication_argument():
    assert parse_term("x . (x ~> y)") == Binary("circ", x, Binary("squiggle", x, y))


def test_postfix_on_parenthesised_term():
    assert parse_term("(x . y)^~") == Unary("til", Binary("circ", x, y))
    assert parse_term("x^-^~") == Unary("til", Unary("neg", x))


def test_equation_with_implication():
    law = parse_law("x -> y = (x . y^~)^-")
    assert law == Law((), Eq(Binary("arrow", x, y),
                             Unary("neg", Binary("circ", x, Unary("til", y)))))


def test_hypotheses_and_atoms():
    law = parse_law("x <= y ; def(x (+) y) => x \\ 0 = x")
    assert law.hypotheses == (Leq(x, y), Defined(Binary("oplus", x, y)))
    assert law.conclusion == Eq(Binary("ldiff", x, Const(0)), x)
    assert law.variables == ("x", "y")


def test_precedence_levels():
    assert parse_term("x . y /\\ z") == Binary("meet", Binary("circ", x, y), z)
    assert parse_term("x /\\ y -> z") == Binary("arrow", Binary("meet", x, y), z)
    assert parse_term("x . y . z") == Binary("circ", Binary("circ", x, y), z)


@pytest.mark.parametrize("text, pos", [
    ("x . y * z", 6),          # mixing product operators
    ("x /\\ y \\/ z", 7),       # mixing lattice operators
    ("x -> y -> z", 7),        # chained implication
    ("x . ", 4),
    ("(x . y", 6),
    ("x # y", 2),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(TermSyntaxError) as exc:
        parse_term(text)
    assert exc.value.position == pos


def test_law_variable_limit():
    parse_law("x . y . z . w = x")
    with pytest.raises(ValueError):
        parse_law("x . y . z . w . v = x")


def test_law_file_comments_and_line_numbers():
    text = "# header\nx <= 1\n\n  x . 0 = 0   # trailing\n"
    laws = parse_law_file(text)
    assert [n for n, _ in laws] == [2, 4]


_leaves = st.one_of(st.sampled_from([Const(0), Const(1)]), st.sampled_from("xyzw").map(Var))
_terms = st.recursive(
    _leaves,
    lambda inner: st.one_of(
        st.builds(Unary, st.sampled_from(["neg", "til"]), inner),
        st.builds(Binary, st.sampled_from(["circ", "star", "oplus", "ldiff", "rdiff", "meet",
                                            "join", "arrow", "squiggle"]), inner, inner),
    ),
    max_leaves=8,
)


@settings(max_examples=400, deadline=None)
@given(_terms)
def test_printer_round_trips(t):
    assert parse_term(format_term(t)) == t


@settings(max_examples=100, deadline=None)
@given(_terms, _terms, _terms)
def test_law_printer_round_trips(a, b, c):
    law = Law((Leq(a, b),), Eq(b, c))
    if len(law.variables) <= 4:
        assert parse_law(format_law(law)) == law
