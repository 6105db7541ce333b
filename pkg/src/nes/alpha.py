"""Alpha-equivalence: a rule-based decision procedure plus an independent
nameless (index-based) normal form used to cross-check it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .atoms import Atom
from .term import Abs, App, ESub, Term, Var, _fv, swap


@dataclass(frozen=True, slots=True)
class BVar:
    index: int


@dataclass(frozen=True, slots=True)
class FVar:
    atom: Atom


@dataclass(frozen=True, slots=True)
class CLam:
    body: "CanonicalTerm"


@dataclass(frozen=True, slots=True)
class CApp:
    fun: "CanonicalTerm"
    arg: "CanonicalTerm"


@dataclass(frozen=True, slots=True)
class CSub:
    """Nameless explicit substitution: ``body`` sits under one binder,
    ``arg`` does not."""

    body: "CanonicalTerm"
    arg: "CanonicalTerm"


CanonicalTerm = Union[BVar, FVar, CLam, CApp, CSub]


def canonicalize(t: Term) -> CanonicalTerm:
    """Replace bound atoms by binder-distance indices (innermost = 0).

    Abstractions and the body position of an explicit substitution each
    introduce one binder; the substitution's argument stays outside it.
    Free atoms are kept by name, so two terms are alpha-equivalent exactly
    when their canonical forms are structurally equal.
    """
    bound: list[Atom] = []

    def go(t: Term) -> CanonicalTerm:
        match t:
            case Var(a):
                for i in range(len(bound) - 1, -1, -1):
                    if bound[i] == a:
                        return BVar(len(bound) - 1 - i)
                return FVar(a)
            case Abs(x, body):
                bound.append(x)
                out = CLam(go(body))
                bound.pop()
                return out
            case App(fun, arg):
                return CApp(go(fun), go(arg))
            case ESub(body, x, arg):
                carg = go(arg)
                bound.append(x)
                cbody = go(body)
                bound.pop()
                return CSub(cbody, carg)
        raise TypeError(f"not a term: {t!r}")

    return go(t)


def aeq(t1: Term, t2: Term) -> bool:
    """Decide alpha-equivalence.

    Syntax-directed: variables by atom equality, applications component-wise,
    binder forms by direct body comparison when the binders coincide, and
    otherwise by ``x not free in the other body`` plus comparison against the
    swapped body.  For explicit substitutions with distinct binders the
    arguments are compared first (the cheaper premise).  Every recursive call
    strictly decreases term size, since swapping preserves it.
    """
    tp = type(t1)
    if tp is not type(t2):
        return False
    if tp is Var:
        return t1.atom == t2.atom
    if tp is App:
        return aeq(t1.fun, t2.fun) and aeq(t1.arg, t2.arg)
    if tp is Abs:
        x, y = t1.binder, t2.binder
        if x == y:
            return aeq(t1.body, t2.body)
        return x not in _fv(t2.body) and aeq(t1.body, swap(y, x, t2.body))
    if tp is ESub:
        x, y = t1.binder, t2.binder
        if x == y:
            return aeq(t1.body, t2.body) and aeq(t1.arg, t2.arg)
        return (
            aeq(t1.arg, t2.arg)
            and x not in _fv(t2.body)
            and aeq(t1.body, swap(y, x, t2.body))
        )
    raise TypeError(f"not a term: {t1!r}")


def render_canonical(c: CanonicalTerm) -> str:
    """Concrete syntax for a nameless term: bound indices print as ``#k``,
    binders as ``\\.`` and ``[:= arg]``."""
    return _render(c, 0)


def _render(c: CanonicalTerm, ctx: int) -> str:
    match c:
        case BVar(k):
            return f"#{k}"
        case FVar(a):
            return str(a)
        case CApp(fun, arg):
            s = f"{_render(fun, 1)} {_render(arg, 2)}"
            return f"({s})" if ctx == 2 else s
        case CLam(body):
            s = f"\\. {_render(body, 0)}"
            return f"({s})" if ctx >= 1 else s
        case CSub(body, arg):
            s = f"[:= {_render(arg, 0)}] {_render(body, 0)}"
            return f"({s})" if ctx >= 1 else s
    raise TypeError(f"not a canonical term: {c!r}")
