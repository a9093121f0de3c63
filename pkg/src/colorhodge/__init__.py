"""Coloring complexes of graph sequences, their Hodge decomposition by
Eulerian idempotents, and chromatic polynomials, all in exact arithmetic."""

from .chromatic import (
    IntegerPolynomial,
    chromatic_polynomial,
    count_colorings_proper_for_some,
    count_proper_colorings,
    sequence_chromatic_polynomial,
    verify_recursion,
)
from .complex import (
    ChainComplexData,
    betti_numbers,
    build_chain_complex,
    enumerate_ordered_partitions,
    is_face,
)
from .errors import BudgetExceeded, InputError, InvariantViolation
from .eulerian import GroupAlgebraElement, action_matrix, convolve, descent_count, eulerian_idempotents
from .graphs import (
    Graph,
    GraphSequence,
    count_acyclic_orientations,
    diagonals,
    is_diagonally_cycle_free,
    union,
)
from .hodge import (
    HodgeDecomposition,
    HodgeTable,
    euler_characteristics,
    hodge_chain_dimensions,
    hodge_homology_dimensions,
    hodge_subcomplex,
    hodge_table,
)
from .verify import (
    VerificationReport,
    scan_corpus,
    verify_corollary,
    verify_hanlon,
    verify_jonsson_wedge,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ChainComplexData",
    "Graph",
    "GraphSequence",
    "GroupAlgebraElement",
    "HodgeDecomposition",
    "HodgeTable",
    "InputError",
    "IntegerPolynomial",
    "InvariantViolation",
    "VerificationReport",
    "action_matrix",
    "betti_numbers",
    "build_chain_complex",
    "chromatic_polynomial",
    "convolve",
    "count_acyclic_orientations",
    "count_colorings_proper_for_some",
    "count_proper_colorings",
    "descent_count",
    "diagonals",
    "enumerate_ordered_partitions",
    "euler_characteristics",
    "eulerian_idempotents",
    "hodge_chain_dimensions",
    "hodge_homology_dimensions",
    "hodge_subcomplex",
    "hodge_table",
    "is_diagonally_cycle_free",
    "is_face",
    "scan_corpus",
    "sequence_chromatic_polynomial",
    "union",
    "verify_corollary",
    "verify_hanlon",
    "verify_jonsson_wedge",
    "verify_recursion",
    "verify_theorem",
]
