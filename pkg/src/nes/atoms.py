"""Variable names ("atoms") and canonical finite sets of them."""

from __future__ import annotations

import re
from typing import Iterable, Iterator

# A base is an ASCII identifier that does not end in a digit, so that the
# display form "base + decimal index" can be decoded unambiguously.
_BASE_RE = re.compile(r"[A-Za-z](?:[A-Za-z0-9]*[A-Za-z])?")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")


class Atom:
    """A variable name: a base identifier plus an optional numeric index.

    ``Atom("x")`` and ``Atom("x", 0)`` are distinct atoms; the latter
    displays as ``x0``.  Immutable; equality is structural on
    (base, index).  Comparison and hashing sit on the hot path of every
    term traversal, so both are hand-rolled.
    """

    __slots__ = ("base", "index", "_hash")

    base: str
    index: int | None

    def __init__(self, base: str, index: int | None = None):
        if not _BASE_RE.fullmatch(base):
            raise ValueError(f"bad atom base: {base!r}")
        if index is not None and index < 0:
            raise ValueError(f"negative atom index: {index}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "_hash", hash((base, index)))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("atoms are immutable")

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            type(other) is Atom
            and self.index == other.index
            and self.base == other.base
        )

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple[str, int]:
        # Total order: lexicographic on base, then index with "absent" first.
        return (self.base, -1 if self.index is None else self.index)

    def __str__(self) -> str:
        return self.base if self.index is None else f"{self.base}{self.index}"

    def __repr__(self) -> str:
        return f"Atom({str(self)!r})"


def parse_atom(text: str) -> Atom:
    """Decode the display form of an atom: trailing digits are the index."""
    if not _IDENT_RE.fullmatch(text):
        raise ValueError(f"not a variable name: {text!r}")
    stripped = text.rstrip("0123456789")
    if stripped == text:
        return Atom(text)
    return Atom(stripped, int(text[len(stripped):]))


class AtomSet:
    """An immutable set of atoms kept duplicate-free and sorted.

    Because the representation is canonical, ``==`` is simultaneously
    structural and extensional, and iteration order is the (base, index)
    order.
    """

    __slots__ = ("_items", "_members")

    def __init__(self, atoms: Iterable[Atom] = ()):
        members = frozenset(atoms)
        self._members = members
        self._items = tuple(sorted(members, key=Atom.sort_key))

    def __contains__(self, atom: Atom) -> bool:
        return atom in self._members

    def __iter__(self) -> Iterator[Atom]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AtomSet):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __or__(self, other: "AtomSet") -> "AtomSet":
        if not isinstance(other, AtomSet):
            return NotImplemented
        return AtomSet(self._items + other._items)

    union = __or__

    def remove(self, atom: Atom) -> "AtomSet":
        """This set without ``atom`` (no error if absent)."""
        if atom not in self._members:
            return self
        return AtomSet(a for a in self._items if a != atom)

    def __repr__(self) -> str:
        return "{%s}" % ", ".join(str(a) for a in self._items)


def fresh(avoid: AtomSet | frozenset[Atom] | set[Atom], hint: Atom) -> Atom:
    """The first atom not in ``avoid``: the hint itself, then the hint's
    base with indices 0, 1, 2, ... in order.

    Total and deterministic; the indices are unbounded so some candidate is
    always free.
    """
    if hint not in avoid:
        return hint
    i = 0
    while True:
        candidate = Atom(hint.base, i)
        if candidate not in avoid:
            return candidate
        i += 1
