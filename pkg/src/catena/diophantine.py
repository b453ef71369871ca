"""Exact integer and rational linear algebra.

Everything here works on plain tuples of Python ints and
:class:`fractions.Fraction`.  Python ints never wrap, so the 64-bit contract
is enforced explicitly: every intermediate quantity that could grow is passed
through :func:`checked`, which raises :class:`ArithmeticOverflow` instead of
letting values leave the signed 64-bit range.
"""
from __future__ import annotations

import heapq
import math
import os
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import ArithmeticOverflow, BudgetExceeded

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

DEFAULT_NODE_BUDGET = 10**7

IntVector = tuple[int, ...]
IntMatrix = Sequence[Sequence[int]]


def checked(x: int) -> int:
    if x < INT64_MIN or x > INT64_MAX:
        raise ArithmeticOverflow(f"value {x} does not fit in a signed 64-bit integer")
    return x


def checked_frac(q: Fraction) -> Fraction:
    checked(q.numerator)
    checked(q.denominator)
    return q


def node_budget() -> int:
    """Default Contejean-Devie budget, overridable through ``CATENA_BUDGET``."""
    env = os.environ.get("CATENA_BUDGET")
    if env:
        return int(env)
    return DEFAULT_NODE_BUDGET


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Componentwise order: ``u <= v`` iff ``v - u`` is nonnegative."""
    return all(a <= b for a, b in zip(u, v))


def vec_mat(u: Sequence[int], A: IntMatrix) -> IntVector:
    """Row vector times matrix, ``uA``."""
    if not A:
        return ()
    d = len(A[0])
    out = [0] * d
    for ui, row in zip(u, A):
        if ui:
            for k in range(d):
                out[k] += ui * row[k]
    return tuple(checked(x) for x in out)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def minimal_elements(vectors: Iterable[Sequence[int]]) -> list[IntVector]:
    """The ``<=``-minimal members of a finite collection, deduplicated and sorted."""
    vs = sorted(set(map(tuple, vectors)), key=lambda v: (sum(v), v))
    kept: list[IntVector] = []
    for v in vs:
        # anything dominated by v has smaller or equal total, so it is already in kept
        if not any(leq(k, v) for k in kept):
            kept.append(v)
    return sorted(kept)


# --------------------------------------------------------------------------
# kernel lattice


def _hermite_with_transform(A: IntMatrix) -> tuple[list[list[int]], list[list[int]], int]:
    n = len(A)
    d = len(A[0]) if n else 0
    H = [list(map(checked, row)) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    pivot = 0
    for col in range(d):
        if pivot == n:
            break
        while True:
            rows = [r for r in range(pivot, n) if H[r][col] != 0]
            if not rows:
                break
            best = min(rows, key=lambda r: abs(H[r][col]))
            H[pivot], H[best] = H[best], H[pivot]
            U[pivot], U[best] = U[best], U[pivot]
            p = H[pivot][col]
            done = True
            for r in range(pivot + 1, n):
                if H[r][col]:
                    q = H[r][col] // p
                    H[r] = [checked(a - q * b) for a, b in zip(H[r], H[pivot])]
                    U[r] = [checked(a - q * b) for a, b in zip(U[r], U[pivot])]
                    if H[r][col]:
                        done = False
            if done:
                pivot += 1
                break
    return H, U, pivot


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> list[IntVector]:
    """Exact LLL reduction of an integer lattice basis (rows)."""
    b = [list(v) for v in basis]
    k = len(b)
    if k <= 1:
        return [tuple(v) for v in b]

    def gram_schmidt():
        bstar: list[list[Fraction]] = []
        mu = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                denom = dot(bstar[j], bstar[j])
                mu[i][j] = dot(b[i], bstar[j]) / denom
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
        return bstar, mu

    bstar, mu = gram_schmidt()
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                b[i] = [checked(x - q * y) for x, y in zip(b[i], b[j])]
                bstar, mu = gram_schmidt()
        if dot(bstar[i], bstar[i]) >= (delta - mu[i][i - 1] ** 2) * dot(bstar[i - 1], bstar[i - 1]):
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            bstar, mu = gram_schmidt()
            i = max(i - 1, 1)
    return [tuple(v) for v in b]


def kernel_lattice_basis(A: IntMatrix, reduce: bool = True) -> list[IntVector]:
    """Basis of the integer lattice ``{z : zA = 0}``.

    Unimodular row operations bring ``A`` to echelon form; the transform rows
    that end up against zero rows of the echelon form span the kernel.  Unless
    ``reduce`` is false the basis is LLL-reduced, which keeps the binomials
    built from it of small degree.
    """
    H, U, rank = _hermite_with_transform(A)
    basis = [tuple(U[r]) for r in range(rank, len(A))]
    if reduce and len(basis) > 1:
        basis = lll_reduce(basis)
    return basis


# --------------------------------------------------------------------------
# rational systems


def rational_solve_all_ones(A: IntMatrix) -> tuple[Fraction, ...] | None:
    """Solve ``A w^T = (1, ..., 1)^T`` over the rationals.

    Returns ``None`` for an inconsistent system.  Pivots are taken leftmost and
    free coordinates are set to zero, so the answer is deterministic.
    """
    n = len(A)
    if n == 0:
        return None
    d = len(A[0])
    M = [[Fraction(x) for x in row] + [Fraction(1)] for row in A]
    pivots = []
    r = 0
    for c in range(d):
        p = next((i for i in range(r, n) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [checked_frac(x * inv) for x in M[r]]
        for i in range(n):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [checked_frac(x - f * y) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    if any(M[i][d] != 0 for i in range(r, n)):
        return None
    w = [Fraction(0)] * d
    for i, c in enumerate(pivots):
        w[c] = M[i][d]
    return tuple(w)


def _normalize_ineq(coeffs: list[int], rhs: int) -> tuple[tuple[int, ...], int]:
    g = math.gcd(*coeffs, rhs)
    if g > 1:
        coeffs = [c // g for c in coeffs]
        rhs //= g
    return tuple(coeffs), rhs


def fourier_motzkin(rows: Sequence[tuple[Sequence[int], int]], nvars: int) -> tuple[Fraction, ...] | None:
    """Find a rational point of ``{x : c.x >= b for (c, b) in rows}``.

    Variables are eliminated from index 0 upward; back substitution then picks,
    for each variable, 0 if it is feasible and otherwise the nearest bound.
    Returns ``None`` when the system is infeasible.
    """
    systems = [sorted({_normalize_ineq(list(c), b) for c, b in rows})]
    for k in range(nvars):
        pos, neg, rest = [], [], []
        for c, b in systems[-1]:
            (pos if c[k] > 0 else neg if c[k] < 0 else rest).append((c, b))
        new = set(rest)
        for cp, bp in pos:
            for cn, bn in neg:
                fp, fn = -cn[k], cp[k]
                c = [checked(fp * x + fn * y) for x, y in zip(cp, cn)]
                b = checked(fp * bp + fn * bn)
                new.add(_normalize_ineq(c, b))
        # drop trivially true constraints 0 >= b with b <= 0
        new = {(c, b) for c, b in new if any(c) or b > 0}
        systems.append(sorted(new))
    if any(b > 0 for c, b in systems[-1]):
        return None

    x = [Fraction(0)] * nvars
    for k in range(nvars - 1, -1, -1):
        lo = hi = None
        for c, b in systems[k]:
            if c[k] == 0:
                continue
            rest = sum(c[j] * x[j] for j in range(k + 1, nvars))
            bound = Fraction(b - rest) / c[k]
            if c[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if (lo is None or lo <= 0) and (hi is None or hi >= 0):
            x[k] = Fraction(0)
        elif lo is not None and lo > 0:
            x[k] = lo
        else:
            x[k] = hi
        checked_frac(x[k])
    return tuple(x)


def positivity_witness(A: IntMatrix) -> tuple[Fraction, ...] | None:
    """A rational ``rho`` with ``a_i . rho >= 1`` for every row, or ``None``.

    By Gordan's alternative ``None`` means some nonzero ``u >= 0`` has
    ``uA = 0``, i.e. the monoid generated by the rows is not reduced.
    """
    if not A:
        return None
    d = len(A[0])
    return fourier_motzkin([(row, 1) for row in A], d)


# --------------------------------------------------------------------------
# Contejean-Devie


def _unique_rows(Y: np.ndarray) -> np.ndarray:
    """Indices of the first occurrence of each distinct row of a nonnegative array."""
    radix = [int(c) + 1 for c in Y.max(axis=0)]
    if math.prod(radix) < (1 << 62):
        weights = np.ones(Y.shape[1], dtype=np.int64)
        for k in range(Y.shape[1] - 2, -1, -1):
            weights[k] = weights[k + 1] * radix[k + 1]
        _, keep = np.unique(Y @ weights, return_index=True)
    else:
        _, keep = np.unique(Y, axis=0, return_index=True)
    return keep


def _contejean_devie(C: Sequence[Sequence[int]], caps: Sequence[int | None], budget: int) -> list[IntVector]:
    """Minimal nonzero nonnegative solutions of ``uC = 0`` inside a box.

    Breadth-first over total degree: a non-solution ``x`` with residual ``r =
    xC`` is only extended along directions ``j`` with ``r . C_j < 0``, and any
    vector dominating a solution already found is dropped.  ``caps[j]`` bounds
    coordinate ``j`` (``None`` = unbounded); completeness survives the box
    because every minimal solution is reached by a chain of unit increments
    that stays below it.  Each level is processed as one int64 array.
    """
    m = len(C)
    Cm = np.array(C, dtype=np.int64).reshape(m, -1)
    cap = np.array([np.iinfo(np.int64).max if c is None else c for c in caps], dtype=np.int64)
    limit = np.int64(1 << 61)

    start = np.flatnonzero(cap >= 1)
    X = np.zeros((len(start), m), dtype=np.int64)
    X[np.arange(len(start)), start] = 1
    R = Cm[start]
    found = np.zeros((0, m), dtype=np.int64)
    visited = 0
    while len(X):
        visited += len(X)
        if visited > budget:
            raise BudgetExceeded(f"Contejean-Devie frontier exceeded {budget} nodes")
        solved = ~R.any(axis=1)
        if solved.any():
            found = np.vstack([found, X[solved]])
            X, R = X[~solved], R[~solved]
        if not len(X):
            break
        grow = (R @ Cm.T < 0) & (X < cap)
        node, j = np.nonzero(grow)
        Y = X[node]
        Y[np.arange(len(j)), j] += 1
        RY = R[node] + Cm[j]
        if len(Y):
            if np.abs(RY).max() >= limit or Y.max() >= limit:
                raise ArithmeticOverflow("residual left the safe 64-bit range")
            keep = _unique_rows(Y)
            Y, RY = Y[keep], RY[keep]
            if len(found):
                dominated = np.zeros(len(Y), dtype=bool)
                for f in found:
                    dominated |= (Y >= f).all(axis=1)
                Y, RY = Y[~dominated], RY[~dominated]
        X, R = Y, RY
    return [tuple(int(v) for v in row) for row in found]


def minimal_nonneg_solutions(C: IntMatrix, b: Sequence[int], budget: int | None = None) -> list[IntVector]:
    """The ``<=``-minimal ``u`` in ``N^m`` with ``uC = b``.

    For ``b = 0`` the nonzero minimal solutions (the Hilbert basis of the
    solution monoid) are returned.  Otherwise the system is homogenised with an
    extra variable ``t`` carrying ``-b`` and capped at ``t <= 1``; minimal
    homogeneous solutions with ``t = 1`` are exactly the minimal solutions of
    the original system.  Raises :class:`BudgetExceeded` when the search
    visits more than ``budget`` frontier nodes.
    """
    if budget is None:
        budget = node_budget()
    C = [tuple(map(checked, row)) for row in C]
    b = tuple(map(checked, b))
    m = len(C)
    if not any(b):
        return sorted(_contejean_devie(C, [None] * m, budget))
    ext = C + [tuple(-x for x in b)]
    sols = _contejean_devie(ext, [None] * m + [1], budget)
    return minimal_elements(s[:m] for s in sols if s[m] == 1)


# --------------------------------------------------------------------------
# Graver basis


def conformal_leq(g: Sequence[int], z: Sequence[int]) -> bool:
    """``g`` lies in the same orthant as ``z`` and ``|g_j| <= |z_j|`` throughout."""
    for a, b in zip(g, z):
        if a > 0:
            if b < a:
                return False
        elif a < 0:
            if b > a:
                return False
    return True


def graver_basis(A: IntMatrix, budget: int | None = None) -> list[IntVector]:
    """The conformally minimal nonzero ``z`` with ``zA = 0``, both signs included.

    Completion from a lattice basis: every sum of two current elements is
    reduced by conformal subtraction and kept if it does not vanish.  Sums are
    processed by increasing 1-norm.  ``budget`` bounds the number of sums
    examined.
    """
    if budget is None:
        budget = node_budget()
    basis = kernel_lattice_basis(A)
    G: list[IntVector] = []
    seen: set[IntVector] = set()
    pending: list[tuple[int, IntVector]] = []

    def reduce(s: IntVector) -> IntVector:
        changed = True
        while changed and any(s):
            changed = False
            for g in G:
                if conformal_leq(g, s):
                    s = tuple(checked(a - b) for a, b in zip(s, g))
                    changed = True
                    break
        return s

    def add(f: IntVector):
        for g in G:
            s = tuple(checked(a + b) for a, b in zip(f, g))
            heapq.heappush(pending, (sum(map(abs, s)), s))
        G.append(f)
        seen.add(f)

    for z in basis:
        for f in (z, tuple(-x for x in z)):
            if f not in seen:
                add(f)
    steps = 0
    while pending:
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"Graver completion exceeded {budget} critical sums")
        _, s = heapq.heappop(pending)
        f = reduce(s)
        if any(f) and f not in seen:
            add(f)
    minimal = [g for g in G if not any(h != g and conformal_leq(h, g) for h in G)]
    return sorted(minimal)
