import itertools

from hypothesis import given

from nes import (
    Abs,
    App,
    Atom,
    BVar,
    CApp,
    CLam,
    CSub,
    ESub,
    FVar,
    Var,
    aeq,
    canonicalize,
    enumerate_terms,
    fv_nom,
    render_canonical,
    size,
    swap,
)
from strategies import atoms, terms

x, y, z = Atom("x"), Atom("y"), Atom("z")


def test_aeq_identity_functions():
    assert aeq(Abs(x, Var(x)), Abs(y, Var(y)))


def test_aeq_free_variable_mismatch():
    assert not aeq(Abs(x, Var(y)), Abs(y, Var(y)))


def test_aeq_esub_binders():
    t1 = ESub(Var(x), x, Var(z))
    t2 = ESub(Var(y), y, Var(z))
    assert aeq(t1, t2)
    assert canonicalize(t1) == canonicalize(t2)


def test_aeq_different_shapes():
    assert not aeq(Var(x), Abs(x, Var(x)))
    assert not aeq(App(Var(x), Var(x)), ESub(Var(x), x, Var(x)))


def test_canonicalize():
    assert canonicalize(Abs(x, Var(x))) == CLam(BVar(0))
    assert canonicalize(Abs(x, Var(y))) == CLam(FVar(y))
    assert canonicalize(ESub(Var(x), x, Var(x))) == CSub(BVar(0), FVar(x))


def test_canonicalize_nested_binders():
    t = Abs(x, Abs(y, App(Var(x), Var(y))))
    assert canonicalize(t) == CLam(CLam(CApp(BVar(1), BVar(0))))
    shadow = Abs(x, Abs(x, Var(x)))
    assert canonicalize(shadow) == CLam(CLam(BVar(0)))


def test_render_canonical():
    assert render_canonical(canonicalize(Abs(x, Var(x)))) == "\\. #0"
    assert render_canonical(canonicalize(ESub(Var(x), x, Var(x)))) == "[:= x] #0"
    t = App(Abs(x, Var(x)), Var(y))
    assert render_canonical(canonicalize(t)) == "(\\. #0) y"


def test_oracle_agreement_exhaustive_small():
    pool = (x, y)
    universe = enumerate_terms(3, pool)
    for t1, t2 in itertools.product(universe, repeat=2):
        assert aeq(t1, t2) == (canonicalize(t1) == canonicalize(t2))


@given(terms, terms)
def test_oracle_agreement_random_pairs(t1, t2):
    assert aeq(t1, t2) == (canonicalize(t1) == canonicalize(t2))


@given(terms, atoms, atoms)
def test_oracle_agreement_on_swapped_variants(t, a, b):
    if a not in fv_nom(t) and b not in fv_nom(t):
        variant = swap(a, b, t)
        assert aeq(t, variant)
        assert canonicalize(t) == canonicalize(variant)


@given(terms)
def test_aeq_reflexive(t):
    assert aeq(t, t)


@given(terms, terms)
def test_aeq_symmetric(t1, t2):
    assert aeq(t1, t2) == aeq(t2, t1)


@given(terms, terms)
def test_aeq_size_and_fv(t1, t2):
    if aeq(t1, t2):
        assert size(t1) == size(t2)
        assert fv_nom(t1) == fv_nom(t2)


@given(terms, terms, atoms, atoms)
def test_aeq_swap_stability(t1, t2, a, b):
    assert aeq(t1, t2) == aeq(swap(a, b, t1), swap(a, b, t2))
