"""Capture-avoiding substitution of a term for a free variable.

``msubst(t, u, x)`` replaces the free occurrences of ``x`` in ``t`` by
``u``, renaming every binder it crosses to a name that avoids the free
atoms of ``u``, the free atoms of the binder's own term, and ``x``:

    x            ->  u
    y            ->  y                                (x != y)
    t1 t2        ->  {x := u}t1  {x := u}t2
    \\x. t1       ->  \\x. t1
    \\y. t1       ->  \\z. {x := u}(swap y z t1)       (x != y, z fresh)
    [x := t2]t1  ->  [x := {x := u}t2] t1
    [y := t2]t1  ->  [z := {x := u}t2] {x := u}(swap y z t1)
                                                      (x != y, z fresh)

Fresh names come from :func:`nes.atoms.fresh` with the original binder as
the hint, so the result is a pure function of the inputs.  The recursion
terminates because swapping preserves size, so every call strictly
decreases it.
"""

from __future__ import annotations

from .atoms import Atom, fresh
from .term import Abs, App, ESub, Term, Var, _fv, swap


def msubst(t: Term, u: Term, x: Atom) -> Term:
    fv_u = frozenset(_fv(u))

    def go(t: Term) -> Term:
        tp = type(t)
        if tp is Var:
            return u if t.atom == x else t
        if tp is App:
            return App(go(t.fun), go(t.arg))
        if tp is Abs:
            y = t.binder
            if y == x:
                return t
            # The avoid set is fv(u) | fv(t) | {x}; y itself is never free
            # in its own abstraction and y != x here, so the hint y is
            # accepted exactly when it avoids fv(u).  Materialize the set
            # only when the hint fails.
            if y not in fv_u:
                return Abs(y, go(t.body))
            avoid = _fv(t.body)
            avoid.discard(y)
            avoid |= fv_u
            avoid.add(x)
            z = fresh(avoid, y)
            return Abs(z, go(swap(y, z, t.body)))
        if tp is ESub:
            y = t.binder
            if y == x:
                return ESub(t.body, y, go(t.arg))
            fv_arg = _fv(t.arg)
            if y not in fv_u and y not in fv_arg:
                return ESub(go(t.body), y, go(t.arg))
            avoid = _fv(t.body)
            avoid.discard(y)
            avoid |= fv_arg
            avoid |= fv_u
            avoid.add(x)
            z = fresh(avoid, y)
            return ESub(go(swap(y, z, t.body)), z, go(t.arg))
        raise TypeError(f"not a term: {t!r}")

    return go(t)
