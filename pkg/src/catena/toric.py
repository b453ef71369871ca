"""Binomial generators of the toric ideal, Betti elements and minimal presentations.

Only binomials ``X^u - X^v`` ever occur, so a binomial is stored as its two
exponent vectors and every Groebner step (S-pairs, reduction) is vector
arithmetic.  The toric ideal is obtained from a lattice basis ideal by
saturating one variable at a time: under a graded reverse-lexicographic order
with ``x_k`` cheapest, dividing every element of a Groebner basis by its
largest power of ``x_k`` yields generators of the saturation by ``x_k``.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from typing import Sequence

from . import diophantine as dio
from .errors import BudgetExceeded
from .fibers import UnionFind, shares_support
from .semigroup import AffineSemigroup

DEFAULT_COMPLETION_BUDGET = 200_000

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Binomial:
    """``X^plus - X^minus`` with ``pi(plus) == pi(minus) == degree``."""

    plus: Monomial
    minus: Monomial
    degree: tuple[int, ...]

    @property
    def total_degree(self) -> int:
        return max(sum(self.plus), sum(self.minus))

    def text(self, names: Sequence[str] | None = None, start: int = 1) -> str:
        names = names or [f"X{i + start}" for i in range(len(self.plus))]
        return f"{_mono_text(self.plus, names)} - {_mono_text(self.minus, names)}"

    def as_dict(self) -> dict:
        return {"plus": list(self.plus), "minus": list(self.minus), "degree": list(self.degree)}


def _mono_text(u: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(u, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def make_binomial(S: AffineSemigroup, u: Sequence[int], v: Sequence[int]) -> Binomial:
    """Orient so the lexicographically larger factorization is the plus side."""
    u, v = tuple(u), tuple(v)
    deg = S.project(u)
    if S.project(v) != deg:
        raise ValueError(f"{u} and {v} are not factorizations of the same element")
    if u < v:
        u, v = v, u
    return Binomial(u, v, deg)


def normalized_binomial(S: AffineSemigroup, b: Binomial) -> Binomial:
    """``b`` with the common factor of its two monomials divided out."""
    c = tuple(min(x, y) for x, y in zip(b.plus, b.minus))
    return make_binomial(S, tuple(x - y for x, y in zip(b.plus, c)), tuple(x - y for x, y in zip(b.minus, c)))


# --------------------------------------------------------------------------
# binomial Groebner bases


class _Order:
    """Weighted degree first, then reverse lexicographic with ``last`` cheapest."""

    def __init__(self, weights: Sequence[int], last: int):
        n = len(weights)
        self.weights = tuple(weights)
        rev = [last] + [j for j in range(n - 1, -1, -1) if j != last]
        self.rev = tuple(rev)

    def key(self, m: Monomial):
        return (sum(a * w for a, w in zip(m, self.weights)), tuple(-m[j] for j in self.rev))


def _normal_form(m: Monomial, G: list[tuple[Monomial, Monomial]]) -> Monomial:
    changed = True
    while changed:
        changed = False
        for lead, trail in G:
            if dio.leq(lead, m):
                m = tuple(dio.checked(a - b + c) for a, b, c in zip(m, lead, trail))
                changed = True
                break
    return m


def _orient(p: Monomial, q: Monomial, order: _Order):
    return (p, q) if order.key(p) > order.key(q) else (q, p)


def groebner_basis(gens: Sequence[tuple[Monomial, Monomial]], order: _Order, budget: int = DEFAULT_COMPLETION_BUDGET):
    """Reduced Groebner basis of a homogeneous binomial ideal.

    Each generator is a pair of exponent vectors; the result is a list of
    ``(lead, trail)`` pairs.
    """
    G: list[tuple[Monomial, Monomial]] = []
    pairs: list = []
    steps = 0

    def insert(p, q):
        p, q = _normal_form(p, G), _normal_form(q, G)
        if p == q:
            return
        lead, trail = _orient(p, q, order)
        G.append((lead, trail))
        i = len(G) - 1
        for j in range(i):
            lj = G[j][0]
            if not any(a and b for a, b in zip(lead, lj)):
                continue  # coprime leading terms reduce to zero
            lcm = tuple(max(a, b) for a, b in zip(lead, lj))
            heapq.heappush(pairs, (order.key(lcm)[0], j, i))

    for p, q in gens:
        insert(tuple(p), tuple(q))
    while pairs:
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"binomial completion exceeded {budget} S-pairs")
        _, i, j = heapq.heappop(pairs)
        (li, ti), (lj, tj) = G[i], G[j]
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        s1 = tuple(m - a + b for m, a, b in zip(lcm, li, ti))
        s2 = tuple(m - a + b for m, a, b in zip(lcm, lj, tj))
        insert(s1, s2)
    return _reduce_basis(G, order)


def _reduce_basis(G, order: _Order):
    G = sorted(set(G), key=lambda g: order.key(g[0]))
    minimal = []
    for idx, (lead, trail) in enumerate(G):
        if any(dio.leq(l2, lead) for k, (l2, _) in enumerate(G) if k != idx and (l2 != lead or k < idx)):
            continue
        minimal.append((lead, trail))
    out = []
    for idx, (lead, trail) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        out.append((lead, _normal_form(trail, others)))
    return out


def toric_generators(S: AffineSemigroup, budget: int = DEFAULT_COMPLETION_BUDGET) -> list[Binomial]:
    """A finite generating set of the toric ideal of ``S`` (a reduced Groebner basis).

    Seeds with the binomials ``X^{z+} - X^{z-}`` of a kernel lattice basis,
    then saturates by each variable in turn.
    """
    n = S.n
    basis = dio.kernel_lattice_basis(S.generators)
    if not basis:
        return []
    weights = S._int_degrees
    gens = [
        (tuple(max(x, 0) for x in z), tuple(max(-x, 0) for x in z))
        for z in basis
    ]
    G = gens
    for k in range(n):
        G = groebner_basis(G, _Order(weights, k), budget)
        G = [
            (tuple(a - c * (j == k) for j, a in enumerate(p)), tuple(b - c * (j == k) for j, b in enumerate(q)))
            for p, q in G
            for c in [min(p[k], q[k])]
        ]
    G = groebner_basis(G, _Order(weights, n - 1), budget)
    out = [make_binomial(S, p, q) for p, q in G]
    return sorted(out, key=lambda b: (S.degree(b.degree), b.degree, b.plus, b.minus))


# --------------------------------------------------------------------------
# Betti elements and presentations


@dataclass(frozen=True)
class BettiElement:
    element: tuple[int, ...]
    components: int
    fiber: tuple[tuple[int, ...], ...] = field(repr=False, default=())


def _components(fiber: Sequence[tuple[int, ...]]) -> list[list[int]]:
    uf = UnionFind(len(fiber))
    for i in range(len(fiber)):
        for j in range(i + 1, len(fiber)):
            if shares_support(fiber[i], fiber[j]):
                uf.union(i, j)
    return uf.groups()


def betti_elements(S: AffineSemigroup) -> list[BettiElement]:
    """Elements whose shared-support graph is disconnected, sorted by degree.

    The candidates are the degrees of a homogeneous generating set of the
    toric ideal; every minimal generator degree occurs among them.
    """
    cands = {b.degree for b in toric_generators(S)}
    out = []
    for c in cands:
        fib = tuple(S.factorizations(c))
        k = len(_components(fib))
        if k >= 2:
            out.append(BettiElement(c, k, fib))
    return sorted(out, key=lambda b: (S.degree(b.element), b.element))


def betti_oracle(S: AffineSemigroup, degree_bound) -> list[BettiElement]:
    """Betti elements of degree ``<= degree_bound`` found by exhaustive enumeration."""
    out = []
    for a, fib in S.elements_up_to(degree_bound).items():
        k = len(_components(fib))
        if k >= 2:
            out.append(BettiElement(a, k, tuple(fib)))
    return sorted(out, key=lambda b: (S.degree(b.element), b.element))


@dataclass(frozen=True)
class Presentation:
    relations: tuple[Binomial, ...]
    betti: tuple[BettiElement, ...]

    @property
    def max_total_degree(self) -> int:
        return max((r.total_degree for r in self.relations), default=0)

    def as_dict(self) -> dict:
        return {
            "relations": [r.as_dict() for r in self.relations],
            "betti": [{"element": list(b.element), "components": b.components} for b in self.betti],
            "max_total_degree": self.max_total_degree,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)

    def text(self, start: int = 1) -> str:
        return "\n".join(r.text(start=start) for r in self.relations)


def minimal_generators(S: AffineSemigroup, betti: Sequence[BettiElement] | None = None) -> Presentation:
    """A minimal presentation: at each Betti element, join the component of the
    lexicographically least factorization to every other component."""
    if betti is None:
        betti = betti_elements(S)
    rels = []
    for b in betti:
        fib = b.fiber or tuple(S.factorizations(b.element))
        comps = _components(fib)  # sorted, so comps[0] holds the least factorization
        reps = [fib[c[0]] for c in comps]
        rels.extend(make_binomial(S, reps[0], r) for r in reps[1:])
    return Presentation(tuple(rels), tuple(betti))
