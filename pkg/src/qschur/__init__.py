"""Graded decomposition numbers of cyclotomic quiver Schur algebras in the
regime e = 0 or e >= n, computed from tableau combinatorics."""

__version__ = "0.1.0"

from .combinatorics import (
    Multicharge,
    Multipartition,
    Node,
    StandardTableau,
    degree_codegree,
    dominates,
    enumerate_multipartitions,
    enumerate_standard,
    initial_final_tableaux,
    node_degree_stats,
    residue_sequence,
    std_relative,
    tableau_dominates,
)
from .errors import (
    InvalidNode,
    NonUniqueTableau,
    NotLevelTwo,
    OddNorm,
    PositivityViolation,
    QSchurError,
    SizeMismatch,
    Unsupported,
    ZeroPolynomial,
)
from .fock import (
    FockVector,
    GradedMatrix,
    cartan_matrix,
    cellular_degree,
    decomposition_matrix,
    dim_hecke_block,
    dim_lower,
    dim_schur_block,
    dim_upper,
    emu_expansion,
    hecke_submatrix,
    is_kleshchev,
    level2_decomposition,
    straighten_canonical,
    straighten_tilting,
    tilting_matrix,
    zmu_expansion,
)
from .laurent import LaurentPoly, q
from .roots import Block, RootVector, blocks, content, defect, find_block

__all__ = [
    "Block",
    "blocks",
    "cartan_matrix",
    "cellular_degree",
    "content",
    "decomposition_matrix",
    "defect",
    "degree_codegree",
    "dim_hecke_block",
    "dim_lower",
    "dim_schur_block",
    "dim_upper",
    "dominates",
    "emu_expansion",
    "enumerate_multipartitions",
    "enumerate_standard",
    "find_block",
    "FockVector",
    "GradedMatrix",
    "hecke_submatrix",
    "initial_final_tableaux",
    "InvalidNode",
    "is_kleshchev",
    "LaurentPoly",
    "level2_decomposition",
    "Multicharge",
    "Multipartition",
    "Node",
    "node_degree_stats",
    "NonUniqueTableau",
    "NotLevelTwo",
    "OddNorm",
    "PositivityViolation",
    "q",
    "QSchurError",
    "residue_sequence",
    "RootVector",
    "SizeMismatch",
    "StandardTableau",
    "std_relative",
    "straighten_canonical",
    "straighten_tilting",
    "tableau_dominates",
    "tilting_matrix",
    "Unsupported",
    "ZeroPolynomial",
    "zmu_expansion",
]
