import pytest
from hypothesis import given
import hypothesis.strategies as st

from nes import Atom, AtomSet, fresh, parse_atom
from strategies import atoms

x, y = Atom("x"), Atom("y")
x0, x1, x2 = Atom("x", 0), Atom("x", 1), Atom("x", 2)


def test_fresh_returns_hint_when_free():
    assert fresh(AtomSet(), x) == x


def test_fresh_forced_to_indexed_names():
    assert fresh(AtomSet([x]), x) == x0
    assert fresh(AtomSet([x, x0, x1]), x) == x2


def test_fresh_indexed_hint_restarts_at_zero():
    assert fresh(AtomSet([Atom("x", 3)]), Atom("x", 3)) == x0


atom_sets = st.lists(atoms, max_size=6).map(AtomSet)


@given(atom_sets, atoms)
def test_fresh_avoids_and_is_deterministic(avoid, hint):
    got = fresh(avoid, hint)
    assert got not in avoid
    assert fresh(avoid, hint) == got


def test_display_and_identity():
    assert str(x) == "x"
    assert str(x0) == "x0"
    assert x != x0  # absent index is not index 0
    assert Atom("x") == Atom("x")
    assert Atom("x", 2) == Atom("x", 2)


@given(atoms, st.one_of(st.none(), st.integers(0, 40)))
def test_display_parse_roundtrip(a, idx):
    atom = Atom(a.base, idx)
    assert parse_atom(str(atom)) == atom


def test_atom_validation():
    with pytest.raises(ValueError):
        Atom("")
    with pytest.raises(ValueError):
        Atom("1x")
    with pytest.raises(ValueError):
        Atom("x0")  # bases may not end in a digit; that spelling is an index
    with pytest.raises(ValueError):
        Atom("x", -1)
    with pytest.raises(AttributeError):
        x.base = "y"


def test_parse_atom_rejects_non_identifiers():
    for bad in ("", " x", "x y", "0", "x-"):
        with pytest.raises(ValueError):
            parse_atom(bad)


def test_atomset_canonical_order():
    s = AtomSet([y, x1, x, x0, x])
    assert list(s) == [x, x0, x1, y]  # absent index sorts before 0
    assert len(s) == 4


@given(st.lists(atoms, max_size=8), st.lists(atoms, max_size=8))
def test_atomset_equality_is_set_equality(a, b):
    sa, sb = AtomSet(a), AtomSet(b)
    assert (sa == sb) == (set(a) == set(b))
    # same elements in any order build the identical representation
    assert AtomSet(reversed(a)) == sa
    assert hash(AtomSet(reversed(a))) == hash(sa)


@given(st.lists(atoms, max_size=8), st.lists(atoms, max_size=8), atoms)
def test_atomset_laws(a, b, c):
    sa, sb = AtomSet(a), AtomSet(b)
    union = sa | sb
    assert all(e in union for e in list(sa) + list(sb))
    assert set(union) == set(a) | set(b)
    assert set(sa.remove(c)) == set(a) - {c}
    assert (c in sa) == (c in set(a))


def test_atomset_remove_absent_is_noop():
    s = AtomSet([x, y])
    assert s.remove(x1) == s
