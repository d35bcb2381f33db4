"""Chromatic symmetric functions, Schur expansions and the spider-tree positivity check."""

from csfkit.csf import chromatic_polynomial_at, csf_power_basis, csf_schur, negative_schur_coefficients
from csfkit.graphs import Graph, spider, stable_partition_types
from csfkit.partitions import Partition, conjugate, dominates, partitions_of
from csfkit.positivity import dominance_screen, is_schur_positive, verify_theorem
from csfkit.symfunc import CharacterTable, SymPoly, kostka, mn_character, p_to_s, s_to_m

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "Graph",
    "Partition",
    "SymPoly",
    "chromatic_polynomial_at",
    "conjugate",
    "csf_power_basis",
    "csf_schur",
    "dominance_screen",
    "dominates",
    "is_schur_positive",
    "kostka",
    "mn_character",
    "negative_schur_coefficients",
    "p_to_s",
    "partitions_of",
    "s_to_m",
    "spider",
    "stable_partition_types",
    "verify_theorem",
]
