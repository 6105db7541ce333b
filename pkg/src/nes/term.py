"""The term datatype and its structural operations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .atoms import Atom, AtomSet


@dataclass(frozen=True, slots=True)
class Var:
    atom: Atom


@dataclass(frozen=True, slots=True)
class Abs:
    binder: Atom
    body: "Term"


@dataclass(frozen=True, slots=True)
class App:
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class ESub:
    """``[binder := arg] body``: an object-level substitution constructor.

    It carries no evaluation rules here; it only binds ``binder`` in
    ``body`` (the argument is outside the binder's scope).
    """

    body: "Term"
    binder: Atom
    arg: "Term"


Term = Union[Var, Abs, App, ESub]


def size(t: Term) -> int:
    """Node count; always at least 1."""
    n = 0
    stack = [t]
    while stack:
        node = stack.pop()
        n += 1
        tp = type(node)
        if tp is Abs:
            stack.append(node.body)
        elif tp is App:
            stack.append(node.fun)
            stack.append(node.arg)
        elif tp is ESub:
            stack.append(node.body)
            stack.append(node.arg)
        elif tp is not Var:
            raise TypeError(f"not a term: {node!r}")
    return n


def _fv(t: Term) -> set[Atom]:
    # One pass with shadow counts per atom: entries on the stack are either
    # a term to visit or (atom,) marking the end of that binder's scope.
    out: set[Atom] = set()
    shadow: dict[Atom, int] = {}
    stack: list = [t]
    while stack:
        node = stack.pop()
        tp = type(node)
        if tp is Var:
            a = node.atom
            if not shadow.get(a):
                out.add(a)
        elif tp is App:
            stack.append(node.fun)
            stack.append(node.arg)
        elif tp is Abs:
            x = node.binder
            shadow[x] = shadow.get(x, 0) + 1
            stack.append((x,))
            stack.append(node.body)
        elif tp is ESub:
            x = node.binder
            stack.append(node.arg)  # the argument sits outside the binder
            shadow[x] = shadow.get(x, 0) + 1
            stack.append((x,))
            stack.append(node.body)
        elif tp is tuple:
            shadow[node[0]] -= 1
        else:
            raise TypeError(f"not a term: {node!r}")
    return out


def fv_nom(t: Term) -> AtomSet:
    """Free atoms of ``t``.  Both binder forms remove their bound name from
    the body's contribution; an explicit substitution's argument is free."""
    return AtomSet(_fv(t))


def all_atoms(t: Term) -> AtomSet:
    """Every atom occurring in ``t``, bound or free, binders included."""
    out: set[Atom] = set()
    stack = [t]
    while stack:
        match stack.pop():
            case Var(a):
                out.add(a)
            case Abs(x, body):
                out.add(x)
                stack.append(body)
            case App(fun, arg):
                stack.append(fun)
                stack.append(arg)
            case ESub(body, x, arg):
                out.add(x)
                stack.append(body)
                stack.append(arg)
    return AtomSet(out)


def vswap(x: Atom, y: Atom, z: Atom) -> Atom:
    """Exchange x and y: returns y if z is x, x if z is y, else z itself."""
    if z == x:
        return y
    if z == y:
        return x
    return z


def swap(x: Atom, y: Atom, t: Term) -> Term:
    """Exchange x and y at every atom position of ``t``, binders included."""
    tp = type(t)
    if tp is Var:
        return Var(vswap(x, y, t.atom))
    if tp is Abs:
        return Abs(vswap(x, y, t.binder), swap(x, y, t.body))
    if tp is App:
        return App(swap(x, y, t.fun), swap(x, y, t.arg))
    if tp is ESub:
        return ESub(swap(x, y, t.body), vswap(x, y, t.binder), swap(x, y, t.arg))
    raise TypeError(f"not a term: {t!r}")


def render(t: Term) -> str:
    """Concrete syntax for ``t``.

    Single spaces between applicands, ``\\x. body`` for abstractions,
    ``[x := u] t`` for explicit substitutions; parentheses only where the
    grammar requires them (binder forms used as applicands, applications
    used as arguments).
    """
    return _render(t, 0)


# Context: 0 = unconstrained (bodies, bracket interiors, top level),
# 1 = function position of an application, 2 = argument position.
def _render(t: Term, ctx: int) -> str:
    match t:
        case Var(a):
            return str(a)
        case App(fun, arg):
            s = f"{_render(fun, 1)} {_render(arg, 2)}"
            return f"({s})" if ctx == 2 else s
        case Abs(x, body):
            s = f"\\{x}. {_render(body, 0)}"
            return f"({s})" if ctx >= 1 else s
        case ESub(body, x, arg):
            s = f"[{x} := {_render(arg, 0)}] {_render(body, 0)}"
            return f"({s})" if ctx >= 1 else s
    raise TypeError(f"not a term: {t!r}")
