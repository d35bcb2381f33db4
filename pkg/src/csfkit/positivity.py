"""Schur-positivity verdicts, the dominance screen, and the spider-tree driver."""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass

from csfkit.csf import csf_schur, negative_schur_coefficients
from csfkit.graphs import Graph, spider, stable_partition_types
from csfkit.partitions import Partition, dominates, partitions_of
from csfkit.symfunc import CharacterTable, SymPoly

log = logging.getLogger(__name__)

VERIFIED = "VERIFIED"
WITNESS_FOUND = "COUNTEREXAMPLE-ABSENT"
LARGE_N = 11


class LargeComputationWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ScreenCertificate:
    """A stable-partition type that is realised, and a dominated type that is not.

    Either one is enough to rule out Schur positivity.
    """

    achieved: Partition
    missing: Partition


@dataclass
class PositivityReport:
    nu: Partition
    graph: Graph
    schur: SymPoly
    negative: list[tuple[Partition, int]]
    schur_positive: bool

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "vertices": self.graph.vertex_count,
            "schur": [{"lambda": list(lam), "coeff": c} for lam, c in self.schur.items()],
            "negative": [{"lambda": list(lam), "coeff": c} for lam, c in self.negative],
            "schur_positive": self.schur_positive,
        }


def is_schur_positive(f: SymPoly) -> bool:
    if f.basis != "schur":
        raise ValueError(f"expected a schur-basis SymPoly, got {f.basis}")
    return all(c >= 0 for c in f.coeffs.values())


def dominance_screen(g: Graph) -> ScreenCertificate | None:
    """First (achieved, missing) pair in enumeration order, if any."""
    types = stable_partition_types(g)
    parts = partitions_of(g.vertex_count)
    for lam in parts:
        if lam not in types:
            continue
        for mu in parts:
            if mu != lam and mu not in types and dominates(lam, mu):
                return ScreenCertificate(lam, mu)
    return None


def hub_leaf_reduction_check(g: Graph, hub: int, *, strict: bool = False) -> bool:
    """True iff every vertex other than ``hub`` and its neighbours is a leaf.

    With ``strict`` the tree must also have 2n vertices with ``hub`` of degree n.
    """
    if not g.is_tree():
        raise ValueError("hub_leaf_reduction_check needs a tree")
    if not 0 <= hub < g.vertex_count:
        raise ValueError(f"hub {hub} is not a vertex")
    adj = g.neighbors()
    if strict and (g.vertex_count % 2 or 2 * len(adj[hub]) != g.vertex_count):
        raise ValueError("expected a tree on 2n vertices whose hub has degree n")
    near = {hub, *adj[hub]}
    return all(len(adj[x]) == 1 for x in range(g.vertex_count) if x not in near)


def candidate_trees(n: int) -> list[tuple[Partition, Graph]]:
    if n < 1:
        raise ValueError("n must be positive")
    return [(nu, spider(nu)) for nu in partitions_of(n - 1)]


def positivity_report(nu: Partition, g: Graph, table: CharacterTable | None = None) -> PositivityReport:
    schur = csf_schur(g, table)
    negative = negative_schur_coefficients(schur)
    return PositivityReport(nu, g, schur, negative, not negative)


def verify_theorem(n: int, table: CharacterTable | None = None) -> list[PositivityReport]:
    """Full Schur expansions for every spider T(nu), nu a partition of n - 1."""
    if n >= LARGE_N:
        warnings.warn(
            f"n={n} enumerates 2^{2 * n - 1} edge subsets per tree", LargeComputationWarning, stacklevel=2
        )
    if table is None:
        table = CharacterTable(2 * n)
    if table.n != 2 * n:
        raise ValueError(f"character table has degree {table.n}, need {2 * n}")
    table.build()
    reports = []
    for nu, g in candidate_trees(n):
        rep = positivity_report(nu, g, table)
        log.info("nu=%s: %d negative coefficients", nu.text() or "()", len(rep.negative))
        reports.append(rep)
    return reports


def theorem_verdict(reports: list[PositivityReport]) -> str:
    return VERIFIED if all(not r.schur_positive for r in reports) else WITNESS_FOUND
