"""Ordinary, equal, monotone and homogeneous catenary degrees.

Per element every variant is a bottleneck problem on the complete graph over
the fiber weighted by distance.  Per monoid the ordinary degree is read off the
Betti elements and the equal/homogeneous degrees off the two lifted monoids.
"""
from __future__ import annotations

import heapq
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .fibers import Factorization, UnionFind, distance
from .semigroup import AffineSemigroup, lift_eq, lift_hom
from .toric import betti_elements, minimal_generators

VARIANTS = ("ordinary", "equal", "monotone", "homogeneous")
_INF = np.iinfo(np.int64).max


@dataclass(frozen=True)
class CatenaryResult:
    """Value of a catenary degree of one element with a witnessing pair.

    ``chain`` joins ``pair[0]`` to ``pair[1]`` with every step at most
    ``value`` and respecting the variant's length constraint; no admissible
    chain between the pair does better.
    """

    value: int
    variant: str = "ordinary"
    pair: tuple[Factorization, Factorization] | None = None
    chain: tuple[Factorization, ...] = field(default=())

    def __int__(self):
        return self.value


def _pair_edges(fiber: Sequence[Factorization], idx: Sequence[int]):
    edges = [(distance(fiber[i], fiber[j]), i, j) for i, j in combinations(idx, 2)]
    edges.sort()
    return edges


def _threshold(fiber, idx, edges=None):
    """Connectivity threshold of the induced complete graph on ``idx``.

    Returns ``(value, (i, j))`` where ``(i, j)`` is the edge whose addition
    connected the graph in Kruskal order, or ``(0, None)`` for at most one vertex.
    """
    if len(idx) <= 1:
        return 0, None
    if edges is None:
        edges = _pair_edges(fiber, idx)
    local = {v: k for k, v in enumerate(idx)}
    uf = UnionFind(len(idx))
    for w, i, j in edges:
        if i in local and j in local and uf.union(local[i], local[j]):
            if uf.count == 1:
                return w, (i, j)
    raise AssertionError("complete graph must become connected")


def _bottleneck_chain(fiber, idx, src: int, dst: int) -> tuple[Factorization, ...]:
    """A path from src to dst inside ``idx`` minimising the largest step."""
    best = {src: 0}
    prev = {src: None}
    heap = [(0, src)]
    allowed = set(idx)
    while heap:
        b, x = heapq.heappop(heap)
        if x == dst:
            break
        if b > best.get(x, b):
            continue
        for y in allowed:
            if y == x:
                continue
            nb = max(b, distance(fiber[x], fiber[y]))
            if nb < best.get(y, float("inf")):
                best[y] = nb
                prev[y] = x
                heapq.heappush(heap, (nb, y))
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return tuple(fiber[i] for i in reversed(path))


def _fiber(S: AffineSemigroup, a, fiber):
    return list(fiber) if fiber is not None else S.factorizations(a)


def catenary_element(S: AffineSemigroup, a: Sequence[int], fiber=None) -> CatenaryResult:
    """``c(a)``: the least N joining any two factorizations by an N-chain."""
    fib = _fiber(S, a, fiber)
    w, e = _threshold(fib, range(len(fib)))
    if e is None:
        return CatenaryResult(0, "ordinary")
    i, j = e
    return CatenaryResult(w, "ordinary", (fib[i], fib[j]), _bottleneck_chain(fib, range(len(fib)), i, j))


def equal_catenary_element(S: AffineSemigroup, a: Sequence[int], fiber=None) -> CatenaryResult:
    """Chains stay inside one length class; maximum over the classes."""
    fib = _fiber(S, a, fiber)
    classes: dict[int, list[int]] = {}
    for k, u in enumerate(fib):
        classes.setdefault(sum(u), []).append(k)
    best = CatenaryResult(0, "equal")
    for idx in classes.values():
        w, e = _threshold(fib, idx)
        if e is not None and w > best.value:
            i, j = e
            best = CatenaryResult(w, "equal", (fib[i], fib[j]), _bottleneck_chain(fib, idx, i, j))
    return best


def homogeneous_catenary_element(S: AffineSemigroup, a: Sequence[int], fiber=None) -> CatenaryResult:
    """Chains between u and v may only use factorizations of length at most
    ``max(|u|, |v|)``.

    For a length cap L every pair with larger end of length L must be joined
    inside ``{|w| <= L}``, so the value at L is the connectivity threshold of
    that induced subgraph; the degree is the maximum over L.
    """
    fib = _fiber(S, a, fiber)
    edges = _pair_edges(fib, range(len(fib)))
    best = CatenaryResult(0, "homogeneous")
    for L in sorted({sum(u) for u in fib}):
        idx = [k for k, u in enumerate(fib) if sum(u) <= L]
        w, e = _threshold(fib, idx, edges)
        if e is None or w <= best.value:
            continue
        # make the witness pair contain a factorization of length L
        uf = UnionFind(len(fib))
        for ww, i, j in edges:
            if ww >= w:
                break
            if sum(fib[i]) <= L and sum(fib[j]) <= L:
                uf.union(i, j)
        top = next(k for k in idx if sum(fib[k]) == L)
        other = next(k for k in idx if uf.find(k) != uf.find(top))
        best = CatenaryResult(w, "homogeneous", (fib[top], fib[other]), _bottleneck_chain(fib, idx, top, other))
    return best


def distance_matrix(fib: Sequence[Factorization]) -> np.ndarray:
    """All pairwise distances of a fiber as an int64 array."""
    U = np.array(fib, dtype=np.int64).reshape(len(fib), -1)
    lens = U.sum(axis=1)
    common = np.minimum(U[:, None, :], U[None, :, :]).sum(axis=2)
    return np.maximum(lens[:, None], lens[None, :]) - common


def _prim_threshold(D: np.ndarray, idx: Sequence[int]) -> tuple[int, tuple[int, int] | None]:
    """Largest edge of a minimum spanning tree on ``idx``: the connectivity threshold."""
    idx = list(idx)
    if len(idx) <= 1:
        return 0, None
    sub = D[np.ix_(idx, idx)]
    k = len(idx)
    inside = np.zeros(k, dtype=bool)
    inside[0] = True
    best = sub[0].copy()
    src = np.zeros(k, dtype=np.int64)
    worst, arg = -1, None
    for _ in range(k - 1):
        cand = np.where(inside, _INF, best)
        y = int(cand.argmin())
        if int(cand[y]) > worst:
            worst, arg = int(cand[y]), (idx[int(src[y])], idx[y])
        inside[y] = True
        closer = sub[y] < best
        best = np.where(closer, sub[y], best)
        src = np.where(closer, y, src)
    return worst, arg


def monotone_catenary_element(S: AffineSemigroup, a: Sequence[int], fiber=None) -> CatenaryResult:
    """For ``|u| <= |v|`` only chains with non-decreasing lengths count.

    A chain between two factorizations of equal length never leaves their
    length class, so each class must be connected on its own; between classes
    a chain climbs through the classes in increasing order, and once the
    classes are internally connected only the cheapest step between each pair
    of classes matters.  The value is the larger of the two thresholds.
    """
    fib = _fiber(S, a, fiber)
    if len(fib) <= 1:
        return CatenaryResult(0, "monotone")
    lens = np.array([sum(u) for u in fib], dtype=np.int64)
    order = np.argsort(lens, kind="stable")
    fib = [fib[k] for k in order]
    lens = lens[order]
    D = distance_matrix(fib)
    starts = np.flatnonzero(np.r_[True, lens[1:] != lens[:-1]])
    bounds = list(starts) + [len(fib)]
    classes = [list(range(bounds[k], bounds[k + 1])) for k in range(len(starts))]
    K = len(classes)

    value, arg = 0, None
    for c in classes:
        w, e = _prim_threshold(D, c)
        if e is not None and w > value:
            value, arg = w, ("inside", c, e)

    # cheapest step between classes, then minimax over increasing class paths
    step = np.minimum.reduceat(np.minimum.reduceat(D, starts, axis=0), starts, axis=1)
    reach = np.full((K, K), _INF, dtype=np.int64)
    via = np.full((K, K), -1, dtype=np.int64)
    np.fill_diagonal(reach, 0)
    for m in range(1, K):
        cand = np.maximum(reach[:, :m], step[:m, m][None, :])
        j = cand.argmin(axis=1)
        rows = np.arange(m)
        reach[rows, m] = cand[rows, j[:m]]
        via[rows, m] = j[:m]
    upper = np.triu(reach, 1)
    if K > 1 and int(upper.max()) > value:
        k, m = np.unravel_index(int(upper.argmax()), upper.shape)
        value, arg = int(upper[k, m]), ("across", int(k), int(m))

    if arg is None:
        return CatenaryResult(0, "monotone")
    if arg[0] == "inside":
        _, c, (i, j) = arg
        return CatenaryResult(value, "monotone", (fib[i], fib[j]), _bottleneck_chain(fib, c, i, j))
    _, k, m = arg
    hops = []
    while m != k:
        j = int(via[k, m])
        sub = D[np.ix_(classes[j], classes[m])]
        r, c = np.unravel_index(int(sub.argmin()), sub.shape)
        hops.append((classes[j][r], classes[m][c], j))
        m = j
    hops.reverse()
    last = hops[0][0]
    path = [fib[last]]
    for x, y, cls in hops:
        if last != x:
            path.extend(_bottleneck_chain(fib, classes[cls], last, x)[1:])
        path.append(fib[y])
        last = y
    return CatenaryResult(value, "monotone", (path[0], path[-1]), tuple(path))


ELEMENT_FUNCTIONS = {
    "ordinary": catenary_element,
    "equal": equal_catenary_element,
    "monotone": monotone_catenary_element,
    "homogeneous": homogeneous_catenary_element,
}


def check_chain(result: CatenaryResult) -> bool:
    """Replay a witness chain against its value and variant constraint."""
    if result.pair is None:
        return result.value == 0
    chain = result.chain
    if chain[0] != result.pair[0] or chain[-1] != result.pair[1]:
        return False
    if any(distance(x, y) > result.value for x, y in zip(chain, chain[1:])):
        return False
    lens = [sum(u) for u in chain]
    if result.variant == "equal":
        return len(set(lens)) == 1
    if result.variant == "monotone":
        return all(x <= y for x, y in zip(lens, lens[1:]))
    if result.variant == "homogeneous":
        return max(lens) <= max(lens[0], lens[-1])
    return True


# --------------------------------------------------------------------------
# monoid level


def catenary_monoid(S: AffineSemigroup) -> int:
    """Maximum of ``c(b)`` over the Betti elements (0 when there are none)."""
    return max((catenary_element(S, b.element, b.fiber).value for b in betti_elements(S)), default=0)


def _lifted(T: AffineSemigroup) -> int:
    by_betti = catenary_monoid(T)
    by_degree = minimal_generators(T).max_total_degree
    # the lift is half-factorial, so both routes must agree
    if by_betti != by_degree:
        raise AssertionError(f"catenary degree {by_betti} differs from max total degree {by_degree}")
    return by_betti


def equal_catenary_monoid(S: AffineSemigroup) -> int:
    return _lifted(lift_eq(S))


def homogeneous_catenary_monoid(S: AffineSemigroup) -> int:
    return _lifted(lift_hom(S))


@dataclass(frozen=True)
class BoundedScan:
    """A maximum taken over finitely many elements; a lower bound, not an invariant."""

    value: int
    bound: int
    element: tuple[int, ...] | None
    variant: str
    method: str = "bounded-scan"

    def __int__(self):
        return self.value


def scan_elements(S: AffineSemigroup, degree_bound, variant: str = "ordinary", threads: int = 1) -> BoundedScan:
    """Maximum of a per-element catenary degree over all elements of degree ``<= degree_bound``."""
    fn = ELEMENT_FUNCTIONS[variant]
    table = S.elements_up_to(degree_bound)
    items = sorted((k, v) for k, v in table.items() if len(v) >= 2)

    def one(item):
        return fn(S, item[0], item[1]).value

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            values = list(pool.map(one, items))
    else:
        values = [one(it) for it in items]
    best, where = 0, None
    for (a, _), v in zip(items, values):
        if v > best:
            best, where = v, a
    return BoundedScan(best, degree_bound, where, variant)


def monotone_catenary_monoid_bounded(S: AffineSemigroup, degree_bound, threads: int = 1) -> BoundedScan:
    return scan_elements(S, degree_bound, "monotone", threads)
