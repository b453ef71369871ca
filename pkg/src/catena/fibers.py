"""Factorizations, lengths, distances and the graph of shared supports."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .semigroup import AffineSemigroup

Factorization = tuple[int, ...]


def length(u: Sequence[int]) -> int:
    return sum(u)


def common_part(u: Sequence[int], v: Sequence[int]) -> Factorization:
    """Componentwise minimum, the exponent vector of ``gcd(X^u, X^v)``."""
    return tuple(min(a, b) for a, b in zip(u, v))


def distance(u: Sequence[int], v: Sequence[int]) -> int:
    """``max(|u|, |v|) - |min(u, v)|``."""
    if len(u) != len(v):
        raise ValueError("factorizations must have equal width")
    return max(sum(u), sum(v)) - sum(common_part(u, v))


def shares_support(u: Sequence[int], v: Sequence[int]) -> bool:
    return any(a and b for a, b in zip(u, v))


def factorizations(S: AffineSemigroup, a: Sequence[int]) -> list[Factorization]:
    """All factorizations of ``a`` in lexicographic order (empty for non-members)."""
    return S.factorizations(a)


def lengths(S: AffineSemigroup, a: Sequence[int]) -> list[int]:
    return sorted({sum(u) for u in S.factorizations(a)})


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.count -= 1
        return True

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return sorted(out.values())


@dataclass(frozen=True)
class FiberGraph:
    """The 1-skeleton of the Eliahou complex of an element.

    Vertices are the factorizations in lexicographic order; ``edges`` maps an
    index pair ``(i, j)``, ``i < j``, to the distance between its ends and is
    present exactly when the two factorizations share a generator.
    """

    element: tuple[int, ...]
    vertices: tuple[Factorization, ...]
    edges: dict[tuple[int, int], int]
    components: tuple[tuple[int, ...], ...]

    @property
    def is_betti(self) -> bool:
        return len(self.components) >= 2

    def missing_pairs(self) -> list[tuple[int, int, int]]:
        return [
            (i, j, distance(self.vertices[i], self.vertices[j]))
            for i, j in combinations(range(len(self.vertices)), 2)
            if (i, j) not in self.edges
        ]

    def to_dot(self, show_missing: bool = False, names: Sequence[str] | None = None) -> str:
        """Graphviz text; non-edges are drawn dashed when ``show_missing``."""
        names = names or default_variable_names(len(self.vertices[0]) if self.vertices else 0)
        elem = " ".join(map(str, self.element))
        lines = [f'graph "nabla_{elem}" {{']
        for i, u in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{monomial(u, names)}"];')
        for (i, j), w in sorted(self.edges.items()):
            lines.append(f'  v{i} -- v{j} [label="{w}"];')
        if show_missing:
            for i, j, w in self.missing_pairs():
                lines.append(f'  v{i} -- v{j} [label="{w}", style=dashed];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def nabla_graph(S: AffineSemigroup, a: Sequence[int], fiber: Sequence[Factorization] | None = None) -> FiberGraph:
    verts = tuple(sorted(fiber)) if fiber is not None else tuple(S.factorizations(a))
    uf = UnionFind(len(verts))
    edges = {}
    for i, j in combinations(range(len(verts)), 2):
        if shares_support(verts[i], verts[j]):
            edges[(i, j)] = distance(verts[i], verts[j])
            uf.union(i, j)
    comps = tuple(tuple(g) for g in uf.groups())
    return FiberGraph(tuple(a), verts, edges, comps)


def fiber_components(fiber: Sequence[Factorization]) -> int:
    """Number of connected components of the shared-support graph on ``fiber``."""
    uf = UnionFind(len(fiber))
    for i, j in combinations(range(len(fiber)), 2):
        if shares_support(fiber[i], fiber[j]):
            uf.union(i, j)
    return uf.count


def default_variable_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def monomial(u: Sequence[int], names: Sequence[str]) -> str:
    """``(13, 1, 2)`` with names x, y, z becomes ``"x^13 y z^2"``."""
    parts = []
    for e, name in zip(u, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return " ".join(parts) if parts else "1"
