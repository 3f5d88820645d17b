"""sesquimat: sigma-symmetric matrices over small finite fields.

Exact, table-driven toolkit for the calculus of matrices that are symmetric
up to a sesqui-morphism and a sign function: chain groups of K-vector
spaces, eulerian chains and the matrix/chain-group correspondence, principal
pivot transforms and pivot classes of colored graphs, rank-width via exact
branch decomposition, and the delta-matroids of principal non-singular
submatrices.  Everything is deterministic and works over GF(p^k), q <= 512.
"""

from .errors import (
    FieldMismatch,
    GroundMismatch,
    IncompatibleScalingPair,
    InvalidSupplementaryPair,
    NonPrimeCharacteristic,
    NotEulerian,
    NotInvolution,
    NotLagrangian,
    NotSigmaEpsSymmetric,
    NotSpecialChain,
    OverlappingMinorSets,
    ReducibleModulus,
    SesquimatError,
    SingularMatrix,
    SingularPivotBlock,
    SizeLimitExceeded,
    ZeroVector,
)
from .field import (
    Field,
    SesquiMorphism,
    default_modulus,
    field_make,
    identity_sesqui,
    sesqui_make,
    sesqui_morphisms,
)
from .matrix import (
    DiagonalTransform,
    EpsilonSign,
    LabeledMatrix,
    apply_transform,
    canonical_entries,
    cut_rank,
    matrix_isomorphic,
    ppt,
    random_sigma_eps_matrix,
    schur_complement,
    sigma_eps_check,
    tucker_check,
)
from .chaingroup import (
    Chain,
    ChainGroup,
    SupplementaryPair,
    b_sigma,
    clear_diagonal,
    eulerian_chain,
    inner,
    is_eulerian,
    special_eulerian_check,
    standard_pair,
    to_matrix,
    transform_ppt,
    transform_scale,
    transform_sign,
)
from .width import CutFunction, Layout, enumerate_layouts, layout_width, min_width
from .graphs import (
    DirectedGraph,
    FStarGraph,
    PivotClassResult,
    PivotMinorWitness,
    digraph_from_gf4,
    digraph_to_gf4,
    embed_quadratic,
    loop_pivot,
    pivot,
    pivot_class,
    pivot_minor_check,
    rank_width,
    rank_width_layout,
    sigma4,
)
from .deltamatroid import DeltaMatroid, branch_width_bound
from .verify import CHECKS, CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "Field",
    "SesquiMorphism",
    "field_make",
    "default_modulus",
    "identity_sesqui",
    "sesqui_make",
    "sesqui_morphisms",
    "LabeledMatrix",
    "EpsilonSign",
    "DiagonalTransform",
    "sigma_eps_check",
    "schur_complement",
    "ppt",
    "tucker_check",
    "cut_rank",
    "apply_transform",
    "matrix_isomorphic",
    "canonical_entries",
    "random_sigma_eps_matrix",
    "Chain",
    "ChainGroup",
    "SupplementaryPair",
    "b_sigma",
    "inner",
    "standard_pair",
    "is_eulerian",
    "eulerian_chain",
    "to_matrix",
    "transform_ppt",
    "transform_sign",
    "transform_scale",
    "clear_diagonal",
    "special_eulerian_check",
    "CutFunction",
    "Layout",
    "layout_width",
    "min_width",
    "enumerate_layouts",
    "FStarGraph",
    "DirectedGraph",
    "digraph_to_gf4",
    "digraph_from_gf4",
    "embed_quadratic",
    "pivot",
    "loop_pivot",
    "pivot_class",
    "PivotClassResult",
    "pivot_minor_check",
    "PivotMinorWitness",
    "rank_width",
    "rank_width_layout",
    "sigma4",
    "DeltaMatroid",
    "branch_width_bound",
    "CHECKS",
    "CheckResult",
    "run_checks",
    "SesquimatError",
    "NonPrimeCharacteristic",
    "ReducibleModulus",
    "FieldMismatch",
    "NotInvolution",
    "GroundMismatch",
    "SingularMatrix",
    "SingularPivotBlock",
    "IncompatibleScalingPair",
    "SizeLimitExceeded",
    "NotSigmaEpsSymmetric",
    "InvalidSupplementaryPair",
    "NotEulerian",
    "NotLagrangian",
    "NotSpecialChain",
    "ZeroVector",
    "OverlappingMinorSets",
]
