"""Simple graphs and trees: spiders, components, bipartitions, colorings, stable partitions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from csfkit.partitions import Partition, partitions_of
from csfkit.symfunc import SymPoly

MAX_STABLE_VERTICES = 12


class UnsupportedSizeError(ValueError):
    """Input is larger than an enumeration routine is designed to handle."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        seen = set()
        for a, b in edges:
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge {(a, b)} out of range for {self.vertex_count} vertices")
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", edges)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(component_size_partition(self, range(len(self.edges)))) == 1

    def is_tree(self) -> bool:
        return self.vertex_count >= 1 and len(self.edges) == self.vertex_count - 1 and self.is_connected()

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [[a, b] for a, b in self.edges]}

    @classmethod
    def from_json(cls, doc: dict) -> "Graph":
        return cls(int(doc["vertices"]), tuple(tuple(e) for e in doc["edges"]))


def path_graph(m: int) -> Graph:
    return Graph(m, tuple((i, i + 1) for i in range(m - 1)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


def complete_graph(m: int) -> Graph:
    return Graph(m, tuple((i, j) for i in range(m) for j in range(i + 1, m)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise ValueError("perm must be a permutation of the vertices")
    return Graph(g.vertex_count, tuple((perm[a], perm[b]) for a, b in g.edges))


def spider(nu: Iterable[int]) -> Graph:
    """The tree T(nu) on 2n vertices, n = |nu| + 1.

    Vertex 0 is the hub, 1..n are its neighbours, and the nu_i pendant leaves
    of neighbour i are numbered consecutively from n + 1.
    """
    nu = Partition(nu)
    n = nu.n + 1
    edges = [(0, i) for i in range(1, n + 1)]
    nxt = n + 1
    for i, legs in enumerate(nu, start=1):
        for _ in range(legs):
            edges.append((i, nxt))
            nxt += 1
    return Graph(2 * n, tuple(edges))


def component_size_partition(g: Graph, kept_edges: Iterable[int]) -> Partition:
    """Component sizes of the spanning subgraph on the given edge indices."""
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx in kept_edges:
        a, b = g.edges[idx]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    sizes: dict[int, int] = {}
    for v in range(g.vertex_count):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return Partition.from_unsorted(sizes.values())


def bipartition_type(g: Graph) -> Partition | None:
    """Type of the unique bipartition of a connected graph, or None if not bipartite."""
    if not g.is_connected():
        raise ValueError("bipartition_type needs a connected graph")
    if g.vertex_count == 0:
        return Partition(())
    adj = g.neighbors()
    side = [-1] * g.vertex_count
    side[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if side[w] < 0:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                return None
    ones = sum(side)
    return Partition.from_unsorted([g.vertex_count - ones, ones])


def coloring_monomial_expansion(g: Graph, k: int) -> SymPoly:
    """Monomial expansion of X_G in ``k`` variables by counting proper colourings.

    For each mu the coefficient of m_mu is the number of proper colourings
    using colour i exactly mu_i times.
    """
    if k < 1:
        raise ValueError("k must be positive")
    adj = g.neighbors()
    nv = g.vertex_count
    coloring = [-1] * nv

    def count(v: int, left: list[int]) -> int:
        if v == nv:
            return 1
        total = 0
        for c in range(len(left)):
            if left[c] and all(coloring[w] != c for w in adj[v]):
                left[c] -= 1
                coloring[v] = c
                total += count(v + 1, left)
                coloring[v] = -1
                left[c] += 1
        return total

    coeffs = {mu: count(0, list(mu)) for mu in partitions_of(nv) if len(mu) <= k}
    return SymPoly("monomial", nv, coeffs)


def independence_number(g: Graph) -> int:
    adj = g.neighbors()
    best = 0

    def grow(v: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) + (g.vertex_count - v) <= best:
            return
        if v == g.vertex_count:
            best = len(chosen)
            return
        if all(w not in adj[v] for w in chosen):
            chosen.append(v)
            grow(v + 1, chosen)
            chosen.pop()
        grow(v + 1, chosen)

    grow(0, [])
    return best


def stable_partition_types(g: Graph) -> set[Partition]:
    """Types of all partitions of V into independent sets.

    Vertices are placed in index order. Two partial placements behave the same
    from vertex i onward when they have the same multiset of (block size,
    later vertices adjacent to the block), so results are memoized on that.
    """
    nv = g.vertex_count
    if nv > MAX_STABLE_VERTICES:
        raise UnsupportedSizeError(f"stable partition enumeration supports at most {MAX_STABLE_VERTICES} vertices")
    later_nbrs = [0] * nv
    for a, b in g.edges:
        lo, hi = min(a, b), max(a, b)
        later_nbrs[lo] |= 1 << hi

    @lru_cache(maxsize=None)
    def rec(i: int, blocks: tuple[tuple[int, int], ...]) -> frozenset[tuple[int, ...]]:
        if i == nv:
            return frozenset([tuple(sorted((s for s, _ in blocks), reverse=True))])
        bit = 1 << i
        drop = ~((bit << 1) - 1)
        out: set[tuple[int, ...]] = set()
        options = []
        for j, (size, forbid) in enumerate(blocks):
            if not forbid & bit:
                options.append(blocks[:j] + ((size + 1, (forbid | later_nbrs[i]) & drop),) + blocks[j + 1:])
        options.append(blocks + ((1, later_nbrs[i] & drop),))
        for nxt in options:
            nxt = tuple(sorted((s, f & drop) for s, f in nxt))
            out |= rec(i + 1, nxt)
        return frozenset(out)

    return {Partition(t) for t in rec(0, ())}
