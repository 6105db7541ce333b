import pytest
from hypothesis import given

from nes import (
    Abs,
    App,
    Atom,
    ESub,
    Lit,
    Meta,
    ParseError,
    Var,
    aeq,
    eval_meta,
    parse,
    render,
)
from strategies import terms

x, y, z, a, b = Atom("x"), Atom("y"), Atom("z"), Atom("a"), Atom("b")


def test_parse_abstraction():
    assert parse("\\x. x") == Lit(Abs(x, Var(x)))
    assert parse("λx. x") == Lit(Abs(x, Var(x)))


def test_parse_application_left_associative():
    assert parse("x y z") == Lit(App(App(Var(x), Var(y)), Var(z)))
    assert parse("x (y z)") == Lit(App(Var(x), App(Var(y), Var(z))))


def test_parse_redex():
    expected = App(Abs(x, Abs(y, App(Var(x), Var(y)))), Var(y))
    assert parse("(\\x. \\y. x y) y") == Lit(expected)


def test_parse_explicit_substitution_extends_right():
    assert parse("[x := y] x") == Lit(ESub(Var(x), x, Var(y)))
    assert parse("[x := y z] x w") == Lit(
        ESub(App(Var(x), Var(Atom("w"))), x, App(Var(y), Var(z)))
    )


def test_parse_meta():
    assert parse("{x := y} (\\y. x y)") == Meta(
        Lit(Abs(y, App(Var(x), Var(y)))), x, Lit(Var(y))
    )


def test_parse_nested_meta():
    got = parse("{x := {a := b} a} x")
    assert got == Meta(Lit(Var(x)), x, Meta(Lit(Var(a)), a, Lit(Var(b))))


def test_parse_trailing_digits_are_indices():
    assert parse("y0") == Lit(Var(Atom("y", 0)))
    assert parse("foo12 bar") == Lit(App(Var(Atom("foo", 12)), Var(Atom("bar"))))


def test_parse_whitespace_insensitive():
    assert parse("  \\x .\n  x\ty ") == Lit(Abs(x, App(Var(x), Var(y))))


def test_parse_error_unclosed_bracket():
    with pytest.raises(ParseError) as info:
        parse("[x := y x")
    err = info.value
    assert (err.line, err.column) == (1, 10)
    assert "']'" in err.expected
    assert "end of input" in str(err)


def test_parse_error_empty_input():
    with pytest.raises(ParseError) as info:
        parse("")
    assert (info.value.line, info.value.column) == (1, 1)
    assert "name" in info.value.expected


def test_parse_error_positions_are_line_based():
    with pytest.raises(ParseError) as info:
        parse("\\x.\n  (x y")
    assert info.value.line == 2
    assert "')'" in info.value.expected


def test_parse_error_cases():
    for bad in ("(", "x)", "\\. x", "\\x x", "[x = y] x", "{x := y}", "x : y", "π"):
        with pytest.raises(ParseError):
            parse(bad)


def test_parse_error_trailing_input():
    with pytest.raises(ParseError) as info:
        parse("x \\y. y z )")
    assert "end of input" in info.value.expected


def test_eval_meta():
    assert eval_meta(Lit(Var(x))) == Var(x)
    assert eval_meta(Meta(Lit(Var(x)), x, Lit(Var(y)))) == Var(y)
    got = eval_meta(parse("{x := y} (\\y. x y)"))
    assert aeq(got, Abs(z, App(Var(y), Var(z))))


def test_eval_meta_innermost_first():
    # {x := b} ({a := x} a) must substitute a first, then x
    got = eval_meta(parse("{x := b} {a := x} a"))
    assert got == Var(b)


def test_roundtrip_examples():
    for text in ("x", "x y z", "\\x. x y", "[x := y] x z", "(\\x. x) (\\y. y)"):
        assert render(eval_meta(parse(text))) == text


@given(terms)
def test_roundtrip_random(t):
    assert parse(render(t)) == Lit(t)
