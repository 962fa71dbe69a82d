"""When is a skew Schur function equal to a Schur function?

Exact decision procedures over infinitely many and over ``n`` variables,
Littlewood-Richardson expansions, and a brute-force polynomial oracle.
"""

from .equality import (
    EqualityVerdict,
    FatteningParams,
    eta_partition,
    fattening,
    schur_equal_finite,
    schur_equal_infinite,
    second_witness_bounded,
    second_witness_infinite,
    shearings,
    structural_closure_contains,
)
from .errors import (
    ContainmentViolation,
    DisconnectedShape,
    EmptyShape,
    InvalidFattening,
    ParseError,
    PreconditionViolation,
    SchurEqError,
    VariableCountMismatch,
)
from .littlewood_richardson import (
    SchurExpansion,
    enumerate_lattice_fillings,
    expand_skew_schur,
    lr_coefficient,
    restrict_expansion,
)
from .shapes import (
    Orientation,
    Partition,
    SkewShape,
    as_straight_or_rotated,
    conjugate,
    connected_skew_shapes,
    parse_shape,
    rotate180,
    skew_shape,
)
from .tableaux import Tableau, content, is_lattice_word, is_semistandard, reading_word, superstandard_filling

__version__ = "0.1.0"
