"""Rauzy-Veech induction on labeled permutations, pseudo-Anosov
certification via primitive path matrices, and bounds on stretch-factor
and curve-graph translation lengths."""

from .diagram import AllowedPath, RauzyDiagram, build_path, explore, injectivity_check, to_dot
from .errors import (
    ConvergenceError,
    EnumerationCapError,
    NotAllowedError,
    NotPrimitiveError,
    PermutationParseError,
    RauzyError,
    ReducibleError,
)
from .induction import EdgeRecord, Move, apply_bottom, apply_flip, apply_top, edge_matrix
from .linalg import (
    IntMatrix,
    SpectralBracket,
    det,
    min_positive_power,
    min_row_sum,
    path_matrix,
    relabel_matrix,
    spectral_radius,
)
from .pa import PACertificate, certify, lc_lower_bound, lc_upper_bound
from .perm import (
    LabeledPermutation,
    UnlabeledPermutation,
    central,
    equal_unlabeled,
    fg_start,
    is_irreducible,
    parse,
    unlabeled,
)
from .surface import GluedSurface, glue, side_homology_nonzero, stratum_of_central

__version__ = "0.1.0"

__all__ = [
    "AllowedPath",
    "ConvergenceError",
    "EdgeRecord",
    "EnumerationCapError",
    "GluedSurface",
    "IntMatrix",
    "LabeledPermutation",
    "Move",
    "NotAllowedError",
    "NotPrimitiveError",
    "PACertificate",
    "PermutationParseError",
    "RauzyDiagram",
    "RauzyError",
    "ReducibleError",
    "SpectralBracket",
    "UnlabeledPermutation",
    "apply_bottom",
    "apply_flip",
    "apply_top",
    "build_path",
    "central",
    "certify",
    "det",
    "edge_matrix",
    "equal_unlabeled",
    "explore",
    "fg_start",
    "glue",
    "injectivity_check",
    "is_irreducible",
    "lc_lower_bound",
    "lc_upper_bound",
    "min_positive_power",
    "min_row_sum",
    "parse",
    "path_matrix",
    "relabel_matrix",
    "side_homology_nonzero",
    "spectral_radius",
    "stratum_of_central",
    "to_dot",
    "unlabeled",
]
