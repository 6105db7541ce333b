"""Random term generation and the executable catalogue of term-calculus laws.

Everything here is deterministic: a generated term is a pure function of
(seed, stream position), and a report is a pure function of (law name,
configuration).  Laws with hypotheses use generate-and-repair (offending
atoms are swapped out or replaced by fresh ones), and the repaired inputs
are re-checked against the hypothesis before the conclusion is evaluated,
so a broken repair fails loudly instead of weakening the law.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .alpha import aeq, canonicalize
from .atoms import Atom, AtomSet, fresh
from .parser import Lit, parse
from .term import (
    Abs,
    App,
    ESub,
    Term,
    Var,
    all_atoms,
    fv_nom,
    render,
    size,
    swap,
    vswap,
)
from .msubst import msubst

DEFAULT_POOL: tuple[Atom, ...] = (
    Atom("x"), Atom("y"), Atom("z"), Atom("w"), Atom("v"),
)

_M64 = (1 << 64) - 1


def _mix(a: int, b: int) -> int:
    # splitmix64 finalizer over a simple combine; keeps streams independent
    # without relying on salted hashing.
    x = (a * 0x9E3779B97F4A7C15 + b) & _M64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _M64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _M64
    return x ^ (x >> 31)


class _Stream:
    """Deterministic 64-bit random stream (splitmix-style counter).

    Much cheaper to fork per case than reseeding a Mersenne generator, and
    its output is a pure function of the initial state.
    """

    __slots__ = ("_counter",)

    def __init__(self, state: int):
        self._counter = state

    def next64(self) -> int:
        self._counter = c = (self._counter + 0x9E3779B97F4A7C15) & _M64
        c ^= c >> 30
        c = (c * 0xBF58476D1CE4E5B9) & _M64
        c ^= c >> 27
        c = (c * 0x94D049BB133111EB) & _M64
        return c ^ (c >> 31)

    def below(self, n: int) -> int:
        return self.next64() % n

    def choice(self, seq):
        return seq[self.next64() % len(seq)]

    def coin(self) -> bool:
        return bool(self.next64() & 1)


@dataclass(frozen=True)
class GenConfig:
    """Parameters for term generation and law checking."""

    max_size: int = 20
    atom_pool: tuple[Atom, ...] = DEFAULT_POOL
    seed: int = 0
    cases: int = 10_000

    def __post_init__(self) -> None:
        object.__setattr__(self, "atom_pool", tuple(self.atom_pool))
        if self.max_size < 1:
            raise ValueError("max_size must be at least 1")
        if not self.atom_pool:
            raise ValueError("atom_pool must be nonempty")
        if not 0 <= self.seed <= _M64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.cases < 1:
            raise ValueError("cases must be at least 1")


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of checking one named law."""

    name: str
    cases_run: int
    failures: int
    seed: int
    counterexample: tuple[tuple[str, str], ...] | None = None

    def tsv_lines(self) -> list[str]:
        lines = [f"{self.name}\t{self.cases_run}\t{self.failures}\t{self.seed}"]
        if self.counterexample is not None:
            lines.append("# counterexample:")
            lines.extend(f"#   {k} = {v}" for k, v in self.counterexample)
        return lines


class UnknownPropertyError(ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(
            f"unknown property {name!r}; valid names: {', '.join(PROPERTY_NAMES)}"
        )


def gen_term(config: GenConfig, position: int) -> Term:
    """Deterministic random term: size at most ``config.max_size``, atoms
    drawn uniformly from the pool (small pools force binder collisions)."""
    rng = _Stream(_mix(config.seed, position))
    return _gen(rng, config.max_size, config.atom_pool)


def _gen(rng: _Stream, budget: int, pool: Sequence[Atom]) -> Term:
    if budget <= 1:
        return Var(rng.choice(pool))
    if budget == 2:
        if rng.below(4) == 0:
            return Var(rng.choice(pool))
        return Abs(rng.choice(pool), Var(rng.choice(pool)))
    # weights 1 : 3 : 3 : 3 keep leaves rare, so the expected size tracks
    # the budget
    r = rng.below(10)
    if r == 0:
        return Var(rng.choice(pool))
    if r <= 3:
        return Abs(rng.choice(pool), _gen(rng, budget - 1, pool))
    left = 1 + rng.below(budget - 2)
    right = budget - 1 - left
    if r <= 6:
        return App(_gen(rng, left, pool), _gen(rng, right, pool))
    return ESub(_gen(rng, left, pool), rng.choice(pool), _gen(rng, right, pool))


def enumerate_terms(max_size: int, pool: Sequence[Atom]) -> list[Term]:
    """Every term of size at most ``max_size`` over ``pool``, smallest
    first.  Intended for exhaustive cross-checks at small sizes."""
    pool = tuple(pool)
    by_size: list[list[Term]] = [[], [Var(a) for a in pool]]
    for n in range(2, max_size + 1):
        bucket: list[Term] = []
        bucket.extend(Abs(a, t) for a in pool for t in by_size[n - 1])
        for i in range(1, n - 1):
            bucket.extend(
                App(f, g) for f in by_size[i] for g in by_size[n - 1 - i]
            )
            bucket.extend(
                ESub(b, a, u)
                for b in by_size[i]
                for a in pool
                for u in by_size[n - 1 - i]
            )
        by_size.append(bucket)
    return [t for bucket in by_size[1:] for t in bucket]


# --------------------------------------------------------------------------
# Input drawing


class _Draw:
    """Hands one case its random inputs.  Terms come from the shared
    generation stream (4 slots per case); atoms and coins come from a
    per-(law, case) generator."""

    _STRIDE = 4

    def __init__(self, config: GenConfig, name_digest: int, case: int):
        self.rng = _Stream(_mix(_mix(config.seed, name_digest), case))
        self.config = config
        self._base = case * self._STRIDE
        self._slot = 0

    def term(self) -> Term:
        t = gen_term(self.config, self._base + self._slot)
        self._slot += 1
        return t

    def atom(self) -> Atom:
        return self.rng.choice(self.config.atom_pool)


def _distinct_from(a: Atom, b: Atom) -> Atom:
    """``b`` itself, or a deterministic replacement differing from ``a``."""
    if b != a:
        return b
    return fresh(AtomSet((a,)), b)


def _swap_out(t: Term, a: Atom) -> Term:
    """A term alpha-equal in shape to ``t`` in which ``a`` is not free
    (``a`` is swapped with an entirely fresh atom when necessary)."""
    if a not in fv_nom(t):
        return t
    c = fresh(all_atoms(t) | AtomSet((a,)), a)
    return swap(a, c, t)


def _not_free(d: _Draw, t: Term) -> Atom:
    """An atom that is not free in ``t``: one of the pool or bound atoms
    when possible, otherwise a fresh one."""
    free = fv_nom(t)
    candidates = [a for a in d.config.atom_pool if a not in free]
    candidates.extend(
        a for a in all_atoms(t) if a not in free and a not in candidates
    )
    if candidates:
        return d.rng.choice(candidates)
    return fresh(all_atoms(t), d.config.atom_pool[0])


def _alpha_variant(d: _Draw, t: Term) -> Term:
    """Rename bound atoms of ``t`` by swapping atoms that are not free in
    it; the result is always alpha-equivalent to ``t``."""
    for _ in range(1 + d.rng.below(3)):
        x = _not_free(d, t)
        if d.rng.coin():
            y = fresh(all_atoms(t) | AtomSet((x,)), x)
        else:
            y = _not_free(d, t)
        t = swap(x, y, t)
    return t


def _variant_or_fresh(d: _Draw, t: Term) -> Term:
    if d.rng.coin():
        return _alpha_variant(d, t)
    return d.term()


def _pick_avoiding(d: _Draw, avoid: AtomSet) -> Atom:
    """An atom outside ``avoid``: a pool atom when one qualifies, else a
    fresh one seeded by a random pool hint."""
    candidates = [a for a in d.config.atom_pool if a not in avoid]
    if candidates:
        return d.rng.choice(candidates)
    return fresh(avoid, d.atom())


# --------------------------------------------------------------------------
# The catalogue


@dataclass(frozen=True)
class _Prop:
    draw: Callable[[_Draw], dict]
    body: Callable[..., bool]
    pre: Callable[..., bool] | None = None


def _d_vswap_id(d: _Draw) -> dict:
    return {"x": d.atom(), "y": d.atom()}


def _d_atom_term(d: _Draw) -> dict:
    return {"x": d.atom(), "t": d.term()}


def _d_swap_neq(d: _Draw) -> dict:
    x, y, z = d.atom(), d.atom(), d.atom()
    w = _distinct_from(z, d.atom())
    return {"x": x, "y": y, "z": z, "w": w}


def _d_two_atoms_term(d: _Draw) -> dict:
    return {"x": d.atom(), "y": d.atom(), "t": d.term()}


def _d_shuffle_swap(d: _Draw) -> dict:
    z = d.atom()
    w = _distinct_from(z, d.atom())
    y = _distinct_from(z, d.atom())
    return {"w": w, "y": y, "z": z, "t": d.term()}


def _d_four_atoms_term(d: _Draw) -> dict:
    return {"x": d.atom(), "y": d.atom(), "z": d.atom(), "w": d.atom(), "t": d.term()}


def _d_fv_nom_swap(d: _Draw) -> dict:
    z, y = d.atom(), d.atom()
    return {"z": z, "y": y, "t": _swap_out(d.term(), z)}


def _d_notin_equivariance(d: _Draw) -> dict:
    xp, x, y = d.atom(), d.atom(), d.atom()
    return {"t": _swap_out(d.term(), xp), "xp": xp, "x": x, "y": y}


def _d_notin_remove_swap(d: _Draw) -> dict:
    xp, x, y = d.atom(), d.atom(), d.atom()
    swapped = _swap_out(swap(x, y, d.term()), vswap(x, y, xp))
    return {"t": swap(x, y, swapped), "xp": xp, "x": x, "y": y}


def _d_term(d: _Draw) -> dict:
    return {"t": d.term()}


def _d_pair(d: _Draw) -> dict:
    t1 = d.term()
    return {"t1": t1, "t2": _variant_or_fresh(d, t1)}


def _d_variant_pair(d: _Draw) -> dict:
    t1 = d.term()
    return {"t1": t1, "t2": _alpha_variant(d, t1)}


def _d_trans(d: _Draw) -> dict:
    t1 = d.term()
    t2 = _alpha_variant(d, t1)
    return {"t1": t1, "t2": t2, "t3": _alpha_variant(d, t2)}


def _d_pair_two_atoms(d: _Draw) -> dict:
    t1 = d.term()
    return {
        "t1": t1,
        "t2": _variant_or_fresh(d, t1),
        "x": d.atom(),
        "y": d.atom(),
    }


def _d_swap_reduction(d: _Draw) -> dict:
    t = d.term()
    return {"t": t, "x": _not_free(d, t), "y": _not_free(d, t)}


def _d_aeq_swap_swap(d: _Draw) -> dict:
    t = d.term()
    return {"t": t, "x": _not_free(d, t), "y": d.atom(), "z": _not_free(d, t)}


def _d_m_subst_notin(d: _Draw) -> dict:
    x = d.atom()
    return {"t": _swap_out(d.term(), x), "u": d.term(), "x": x}


def _d_term_term_atom(d: _Draw) -> dict:
    return {"t": d.term(), "u": d.term(), "x": d.atom()}


def _d_sub_eq(d: _Draw) -> dict:
    return {"t1": d.term(), "t2": d.term(), "u": d.term(), "x": d.atom()}


def _d_abs_neq(d: _Draw) -> dict:
    t, u, x = d.term(), d.term(), d.atom()
    y = _distinct_from(x, d.atom())
    z = _pick_avoiding(d, fv_nom(u) | fv_nom(Abs(y, t)) | AtomSet((x,)))
    return {"t": t, "u": u, "x": x, "y": y, "z": z}


def _d_sub_neq(d: _Draw) -> dict:
    t1, t2, u, x = d.term(), d.term(), d.term(), d.atom()
    y = _distinct_from(x, d.atom())
    z = _pick_avoiding(d, fv_nom(u) | fv_nom(ESub(t1, y, t2)) | AtomSet((x,)))
    return {"t1": t1, "t2": t2, "u": u, "x": x, "y": y, "z": z}


def _d_subst_in(d: _Draw) -> dict:
    u = d.term()
    return {"t": d.term(), "u": u, "up": _alpha_variant(d, u), "x": d.atom()}


def _d_subst_out(d: _Draw) -> dict:
    t = d.term()
    return {"t": t, "tp": _alpha_variant(d, t), "u": d.term(), "x": d.atom()}


def _d_subst_eq(d: _Draw) -> dict:
    t, u = d.term(), d.term()
    return {
        "t": t,
        "tp": _alpha_variant(d, t),
        "u": u,
        "up": _alpha_variant(d, u),
        "x": d.atom(),
    }


def _d_swap_subst(d: _Draw) -> dict:
    return {
        "x": d.atom(),
        "y": d.atom(),
        "z": d.atom(),
        "t": d.term(),
        "u": d.term(),
    }


def _d_subst_lemma(d: _Draw) -> dict:
    t1, t2, t3 = d.term(), d.term(), d.term()
    x = d.atom()
    y = _distinct_from(x, d.atom())
    return {"t1": t1, "t2": t2, "t3": _swap_out(t3, x), "x": x, "y": y}


_CATALOGUE: dict[str, _Prop] = {
    "vswap_id": _Prop(
        _d_vswap_id,
        lambda x, y: vswap(x, x, y) == y,
    ),
    "swap_id": _Prop(
        _d_atom_term,
        lambda x, t: swap(x, x, t) == t,
    ),
    "swap_neq": _Prop(
        _d_swap_neq,
        lambda x, y, z, w: vswap(x, y, z) != vswap(x, y, w),
        pre=lambda x, y, z, w: z != w,
    ),
    "swap_size_eq": _Prop(
        _d_two_atoms_term,
        lambda x, y, t: size(swap(x, y, t)) == size(t),
    ),
    "swap_symmetric": _Prop(
        _d_two_atoms_term,
        lambda x, y, t: swap(x, y, t) == swap(y, x, t),
    ),
    "swap_involutive": _Prop(
        _d_two_atoms_term,
        lambda x, y, t: swap(x, y, swap(x, y, t)) == t,
    ),
    "shuffle_swap": _Prop(
        _d_shuffle_swap,
        lambda w, y, z, t: swap(w, y, swap(y, z, t)) == swap(w, z, swap(w, y, t)),
        pre=lambda w, y, z, t: w != z and y != z,
    ),
    "swap_equivariance": _Prop(
        _d_four_atoms_term,
        lambda x, y, z, w, t: swap(x, y, swap(z, w, t))
        == swap(vswap(x, y, z), vswap(x, y, w), swap(x, y, t)),
    ),
    "fv_nom_swap": _Prop(
        _d_fv_nom_swap,
        lambda z, y, t: y not in fv_nom(swap(y, z, t)),
        pre=lambda z, y, t: z not in fv_nom(t),
    ),
    "notin_fv_nom_equivariance": _Prop(
        _d_notin_equivariance,
        lambda t, xp, x, y: vswap(x, y, xp) not in fv_nom(swap(x, y, t)),
        pre=lambda t, xp, x, y: xp not in fv_nom(t),
    ),
    "notin_fv_nom_remove_swap": _Prop(
        _d_notin_remove_swap,
        lambda t, xp, x, y: xp not in fv_nom(t),
        pre=lambda t, xp, x, y: vswap(x, y, xp) not in fv_nom(swap(x, y, t)),
    ),
    "aeq_refl": _Prop(
        _d_term,
        lambda t: aeq(t, t),
    ),
    "aeq_sym": _Prop(
        _d_pair,
        lambda t1, t2: aeq(t1, t2) == aeq(t2, t1),
    ),
    "aeq_trans": _Prop(
        _d_trans,
        lambda t1, t2, t3: aeq(t1, t3),
        pre=lambda t1, t2, t3: aeq(t1, t2) and aeq(t2, t3),
    ),
    "aeq_size": _Prop(
        _d_variant_pair,
        lambda t1, t2: size(t1) == size(t2),
        pre=lambda t1, t2: aeq(t1, t2),
    ),
    "aeq_fv_nom": _Prop(
        _d_variant_pair,
        lambda t1, t2: fv_nom(t1) == fv_nom(t2),
        pre=lambda t1, t2: aeq(t1, t2),
    ),
    "aeq_swap": _Prop(
        _d_pair_two_atoms,
        lambda t1, t2, x, y: aeq(t1, t2) == aeq(swap(x, y, t1), swap(x, y, t2)),
    ),
    "swap_reduction": _Prop(
        _d_swap_reduction,
        lambda t, x, y: aeq(swap(x, y, t), t),
        pre=lambda t, x, y: x not in fv_nom(t) and y not in fv_nom(t),
    ),
    "aeq_swap_swap": _Prop(
        _d_aeq_swap_swap,
        lambda t, x, y, z: aeq(swap(z, x, swap(x, y, t)), swap(z, y, t)),
        pre=lambda t, x, y, z: z not in fv_nom(t) and x not in fv_nom(t),
    ),
    "aeq_oracle": _Prop(
        _d_pair,
        lambda t1, t2: aeq(t1, t2) == (canonicalize(t1) == canonicalize(t2)),
    ),
    "m_subst_notin": _Prop(
        _d_m_subst_notin,
        lambda t, u, x: aeq(msubst(t, u, x), t),
        pre=lambda t, u, x: x not in fv_nom(t),
    ),
    "m_subst_abs_eq": _Prop(
        _d_term_term_atom,
        lambda t, u, x: msubst(Abs(x, t), u, x) == Abs(x, t),
    ),
    "m_subst_sub_eq": _Prop(
        _d_sub_eq,
        lambda t1, t2, u, x: msubst(ESub(t1, x, t2), u, x)
        == ESub(t1, x, msubst(t2, u, x)),
    ),
    "m_subst_abs_neq": _Prop(
        _d_abs_neq,
        lambda t, u, x, y, z: aeq(
            msubst(Abs(y, t), u, x), Abs(z, msubst(swap(y, z, t), u, x))
        ),
        pre=lambda t, u, x, y, z: x != y
        and z not in fv_nom(u) | fv_nom(Abs(y, t)) | AtomSet((x,)),
    ),
    "m_subst_sub_neq": _Prop(
        _d_sub_neq,
        lambda t1, t2, u, x, y, z: aeq(
            msubst(ESub(t1, y, t2), u, x),
            ESub(msubst(swap(y, z, t1), u, x), z, msubst(t2, u, x)),
        ),
        pre=lambda t1, t2, u, x, y, z: x != y
        and z not in fv_nom(u) | fv_nom(ESub(t1, y, t2)) | AtomSet((x,)),
    ),
    "aeq_m_subst_in": _Prop(
        _d_subst_in,
        lambda t, u, up, x: aeq(msubst(t, u, x), msubst(t, up, x)),
        pre=lambda t, u, up, x: aeq(u, up),
    ),
    "aeq_m_subst_out": _Prop(
        _d_subst_out,
        lambda t, tp, u, x: aeq(msubst(t, u, x), msubst(tp, u, x)),
        pre=lambda t, tp, u, x: aeq(t, tp),
    ),
    "aeq_m_subst_eq": _Prop(
        _d_subst_eq,
        lambda t, tp, u, up, x: aeq(msubst(t, u, x), msubst(tp, up, x)),
        pre=lambda t, tp, u, up, x: aeq(t, tp) and aeq(u, up),
    ),
    "swap_subst_rec_fun": _Prop(
        _d_swap_subst,
        lambda x, y, z, t, u: aeq(
            swap(x, y, msubst(t, u, z)),
            msubst(swap(x, y, t), swap(x, y, u), vswap(x, y, z)),
        ),
    ),
    "m_subst_lemma": _Prop(
        _d_subst_lemma,
        lambda t1, t2, t3, x, y: aeq(
            msubst(msubst(t1, t2, x), t3, y),
            msubst(msubst(t1, t3, y), msubst(t2, t3, y), x),
        ),
        pre=lambda t1, t2, t3, x, y: x != y and x not in fv_nom(t3),
    ),
    "parse_roundtrip": _Prop(
        _d_term,
        lambda t: parse(render(t)) == Lit(t),
    ),
}

PROPERTY_NAMES: tuple[str, ...] = tuple(_CATALOGUE)


# --------------------------------------------------------------------------
# Running and shrinking


def _holds(prop: _Prop, inputs: dict) -> bool:
    # an exception from the law's body is a failing case, not a crash of
    # the whole run
    try:
        return bool(prop.body(**inputs))
    except Exception:
        return False


def run_property(name: str, config: GenConfig) -> PropertyReport:
    """Check the named law on ``config.cases`` drawn inputs.

    All cases are evaluated; the report counts every failure (a False
    conclusion or an exception from it) and carries the first (lowest
    stream position) counterexample, shrunk.
    """
    prop = _CATALOGUE.get(name)
    if prop is None:
        raise UnknownPropertyError(name)
    digest = zlib.crc32(name.encode())
    failures = 0
    first_failure: dict | None = None
    for case in range(config.cases):
        inputs = prop.draw(_Draw(config, digest, case))
        if prop.pre is not None and not prop.pre(**inputs):
            raise RuntimeError(
                f"input repair for {name} (case {case}) left its hypothesis unsatisfied"
            )
        if not _holds(prop, inputs):
            failures += 1
            if first_failure is None:
                first_failure = inputs
    counterexample = None
    if first_failure is not None:
        shrunk = _shrink(first_failure, prop, config.atom_pool)
        counterexample = tuple(
            (k, str(v) if isinstance(v, Atom) else render(v))
            for k, v in shrunk.items()
        )
    return PropertyReport(
        name=name,
        cases_run=config.cases,
        failures=failures,
        seed=config.seed,
        counterexample=counterexample,
    )


def _shrink_moves(t: Term) -> Iterable[Term]:
    """All terms obtained by replacing one composite node of ``t`` with its
    largest immediate subterm; every move strictly decreases the size."""
    match t:
        case Var(_):
            return
        case Abs(x, body):
            yield body
            for b in _shrink_moves(body):
                yield Abs(x, b)
        case App(fun, arg):
            yield fun if size(fun) >= size(arg) else arg
            for f in _shrink_moves(fun):
                yield App(f, arg)
            for a in _shrink_moves(arg):
                yield App(fun, a)
        case ESub(body, x, arg):
            yield body if size(body) >= size(arg) else arg
            for b in _shrink_moves(body):
                yield ESub(b, x, arg)
            for a in _shrink_moves(arg):
                yield ESub(body, x, a)


def _shrink(inputs: dict, prop: _Prop, pool: Sequence[Atom]) -> dict:
    """Greedy shrink to a fixpoint: subterm replacement on term inputs,
    then renaming stray atoms down to unused pool atoms (applied to every
    input at once so relationships between them survive).  Candidates must
    still satisfy the hypothesis and still fail."""

    def still_fails(candidate: dict) -> bool:
        if prop.pre is not None and not prop.pre(**candidate):
            return False
        return not _holds(prop, candidate)

    changed = True
    while changed:
        changed = False
        for key, value in inputs.items():
            if isinstance(value, Atom):
                continue
            for smaller in _shrink_moves(value):
                candidate = dict(inputs)
                candidate[key] = smaller
                if still_fails(candidate):
                    inputs = candidate
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        occurring: set[Atom] = set()
        for value in inputs.values():
            if isinstance(value, Atom):
                occurring.add(value)
            else:
                occurring.update(all_atoms(value))
        # Preference position: earlier pool atoms are "smaller"; anything
        # outside the pool reduces to any unused pool atom.
        position = {a: i for i, a in enumerate(pool)}.get
        fallback = len(pool)
        for a in sorted(
            occurring,
            key=lambda a: (position(a, fallback), a.sort_key()),
            reverse=True,
        ):
            for i, b in enumerate(pool):
                if i >= position(a, fallback) or b in occurring:
                    continue
                candidate = {
                    k: (vswap(a, b, v) if isinstance(v, Atom) else swap(a, b, v))
                    for k, v in inputs.items()
                }
                if still_fails(candidate):
                    inputs = candidate
                    changed = True
                    break
            if changed:
                break
    return inputs
