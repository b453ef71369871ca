"""omega-primality and tame degree."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import diophantine as dio
from .errors import NotMinimalGenerating
from .fibers import distance
from .semigroup import AffineSemigroup, lift_hom


def _require_atoms(S: AffineSemigroup):
    if not S.atoms_verified:
        raise NotMinimalGenerating(
            "omega-primality and tame degree need the generators to be the atoms; "
            "minimize the generating set first"
        )


@dataclass(frozen=True)
class MinimalFiberCover:
    """The ``<=``-minimal ``u`` with ``uA - target`` in the monoid."""

    target: tuple[int, ...]
    minimals: tuple[tuple[int, ...], ...]


def _generator_cover(S: AffineSemigroup, i: int, graver) -> tuple[tuple[int, ...], ...]:
    # u != e_i minimal forces a factorization v with v_i > 0 and support disjoint
    # from u; a Graver element g conformal to u - v with g_i < 0 then has g+ = u
    unit = tuple(int(j == i) for j in range(S.n))
    cands = [unit]
    for g in graver:
        if g[i] < 0:
            cands.append(tuple(max(x, 0) for x in g))
    return tuple(dio.minimal_elements(cands))


def minimal_fiber_cover(
    S: AffineSemigroup, a: Sequence[int], budget: int | None = None, method: str = "auto"
) -> MinimalFiberCover:
    """The minimal ``u`` with ``pi(u) - a`` in the monoid.

    ``method="diophantine"`` solves ``uA - wA = a`` for minimal ``(u, w)`` and
    keeps the minimal u-parts.  ``method="graver"`` only applies when ``a`` is a
    generator and reads the answer off the Graver basis; ``"auto"`` picks it
    whenever it applies.
    """
    a = tuple(a)
    n = S.n
    if not any(a):
        return MinimalFiberCover(a, ((0,) * n,))
    if method not in ("auto", "graver", "diophantine"):
        raise ValueError(f"unknown method {method!r}")
    if method != "diophantine" and a in S.generators:
        i = S.generators.index(a)
        return MinimalFiberCover(a, _generator_cover(S, i, dio.graver_basis(S.generators, budget)))
    if method == "graver":
        raise ValueError("the Graver route needs a generator")
    C = list(S.generators) + [tuple(-x for x in g) for g in S.generators]
    sols = dio.minimal_nonneg_solutions(C, a, budget)
    return MinimalFiberCover(a, tuple(dio.minimal_elements(s[:n] for s in sols)))


def omega_element(S: AffineSemigroup, a: Sequence[int], budget: int | None = None) -> int:
    _require_atoms(S)
    cover = minimal_fiber_cover(S, a, budget)
    return max(sum(u) for u in cover.minimals)


def omega_monoid(S: AffineSemigroup, budget: int | None = None) -> int:
    _require_atoms(S)
    graver = dio.graver_basis(S.generators, budget)
    return max(sum(u) for i in range(S.n) for u in _generator_cover(S, i, graver))


def tame_element(S: AffineSemigroup, a: Sequence[int], fiber=None) -> int:
    """Largest distance needed to bring a prescribed applicable atom into a factorization."""
    _require_atoms(S)
    fib = list(fiber) if fiber is not None else S.factorizations(a)
    if not fib:
        raise ValueError(f"{tuple(a)} is not an element of {S}")
    worst = 0
    for i in range(S.n):
        with_i = [v for v in fib if v[i]]
        if not with_i:
            continue  # a - a_i is not in the monoid
        for u in fib:
            if u[i]:
                continue
            worst = max(worst, min(distance(u, v) for v in with_i))
    return worst


def tame_candidates(S: AffineSemigroup, budget: int | None = None) -> list[tuple[int, ...]]:
    """Images of the minimal elements of ``pi^-1(a_i + S)`` over every generator."""
    _require_atoms(S)
    graver = dio.graver_basis(S.generators, budget)
    cands = set()
    for i in range(S.n):
        for u in _generator_cover(S, i, graver):
            cands.add(S.project(u))
    return sorted(cands, key=lambda x: (S.degree(x), x))


def tame_monoid(S: AffineSemigroup, budget: int | None = None) -> int:
    """Tame degree of the monoid, from the finite candidate set.

    Any factorization avoiding ``a_i`` of an element divisible by ``a_i``
    dominates some minimal ``u`` of ``pi^-1(a_i + S)``, and the common part can
    be carried along a best move for ``u``, so the maximum is attained on the
    candidates.
    """
    return max((tame_element(S, c) for c in tame_candidates(S, budget)), default=0)


def tame_monoid_scan(S: AffineSemigroup, degree_bound) -> int:
    """Tame degree maximised over every element of degree ``<= degree_bound``."""
    _require_atoms(S)
    return max((tame_element(S, a, fib) for a, fib in S.elements_up_to(degree_bound).items()), default=0)


def tame_lift_bound_check(S: AffineSemigroup, budget: int | None = None) -> tuple[int, int]:
    """Tame degree of ``S`` and of its homogeneous lift; the first never exceeds the second."""
    t = tame_monoid(S, budget)
    t_hom = tame_monoid(lift_hom(S), budget)
    if t > t_hom:
        raise AssertionError(f"tame degree {t} exceeds that of the homogeneous lift ({t_hom})")
    return t, t_hom
