"""Chromatic symmetric functions of graphs.

X_G = sum over edge subsets S of (-1)^|S| p_{lambda(S)}, where lambda(S) lists
the component sizes of the spanning subgraph (V, S).
"""

from __future__ import annotations

from functools import lru_cache

from csfkit import kernels
from csfkit.graphs import Graph, UnsupportedSizeError
from csfkit.partitions import Partition, partitions_of
from csfkit.symfunc import CharacterTable, SymPoly, p_to_s

MAX_EDGES = 25


def csf_power_basis(g: Graph, *, backend: str | None = None) -> SymPoly:
    if len(g.edges) > MAX_EDGES:
        raise UnsupportedSizeError(f"{len(g.edges)} edges exceeds the 2^{MAX_EDGES} subset budget")
    counts = kernels.edge_subset_histogram(g.vertex_count, g.edges, backend=backend)
    parts = partitions_of(g.vertex_count)
    return SymPoly("power", g.vertex_count, {parts[i]: int(c) for i, c in enumerate(counts) if c})


def csf_schur(g: Graph, table: CharacterTable | None = None, *, backend: str | None = None) -> SymPoly:
    return p_to_s(csf_power_basis(g, backend=backend), table)


def negative_schur_coefficients(f: SymPoly) -> list[tuple[Partition, int]]:
    return [(lam, c) for lam, c in f.items() if c < 0]


@lru_cache(maxsize=4096)
def _dc(nv: int, edges: frozenset, k: int) -> int:
    if not edges:
        return k**nv
    a, b = min(edges)
    rest = edges - {(a, b)}
    # contract b into a, then shift labels above b down by one; parallel edges merge in the set
    merged = set()
    for u, v in rest:
        u = a if u == b else u
        v = a if v == b else v
        u -= u > b
        v -= v > b
        merged.add((min(u, v), max(u, v)))
    return _dc(nv, rest, k) - _dc(nv - 1, frozenset(merged), k)


def chromatic_polynomial_at(g: Graph, k: int, *, method: str = "auto") -> int:
    """Number of proper colourings of ``g`` with ``k`` colours.

    ``method`` is ``"deletion_contraction"``, ``"tree"`` (closed form, trees
    only) or ``"auto"`` (closed form when ``g`` is a tree).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if method == "auto":
        method = "tree" if g.is_tree() else "deletion_contraction"
    if method == "tree":
        if not g.is_tree():
            raise ValueError("closed form applies to trees only")
        return k * (k - 1) ** (g.vertex_count - 1)
    if method != "deletion_contraction":
        raise ValueError(f"unknown method {method!r}")
    edges = frozenset((min(a, b), max(a, b)) for a, b in g.edges)
    return _dc(g.vertex_count, edges, k)
