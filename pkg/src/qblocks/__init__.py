"""Exact weight and character combinatorics behind the block equivalence of
category O for gl_n and the queer superalgebra q_n: Weyl group actions,
subset-sum multisets of positive roots, truncated Verma characters, and
filtration multiplicities, all in exact rational arithmetic."""

from qblocks.charring import (
    FormalCharacter,
    Truncation,
    ext_neg,
    full_support_height,
    k_dim,
    subset_sum_P,
    subset_sum_P_by_enumeration,
    subset_sum_Pw,
    super_verma_char,
    thick_dim,
    verma_char,
)
from qblocks.filtration import (
    FlagExtractionError,
    FlagMultiset,
    LinkageReport,
    PreconditionError,
    ind_block_mult,
    ind_block_mult_split,
    induction_flag,
    linkage_check,
    res_block_mult,
    restriction_flag,
    verma_flag_extract,
)
from qblocks.lattice import (
    ClassifyReport,
    Root,
    Scalar,
    Weight,
    classify,
    height,
    leq,
    positive_roots,
    rho,
    simple_root_coefficients,
    weight_from_simple_coefficients,
)
from qblocks.sampling import sample_weights
from qblocks.weyl import (
    GuardError,
    Perm,
    all_perms,
    dot_orbit,
    inversion_roots,
    orbit,
    rho_defect,
    same_block,
)

__version__ = "0.1.0"

__all__ = [
    "ClassifyReport",
    "FlagExtractionError",
    "FlagMultiset",
    "FormalCharacter",
    "GuardError",
    "LinkageReport",
    "Perm",
    "PreconditionError",
    "Root",
    "Scalar",
    "Truncation",
    "Weight",
    "all_perms",
    "classify",
    "dot_orbit",
    "ext_neg",
    "full_support_height",
    "height",
    "ind_block_mult",
    "ind_block_mult_split",
    "induction_flag",
    "inversion_roots",
    "k_dim",
    "leq",
    "linkage_check",
    "orbit",
    "positive_roots",
    "res_block_mult",
    "restriction_flag",
    "rho",
    "rho_defect",
    "same_block",
    "sample_weights",
    "simple_root_coefficients",
    "subset_sum_P",
    "subset_sum_P_by_enumeration",
    "subset_sum_Pw",
    "super_verma_char",
    "thick_dim",
    "verma_char",
    "verma_flag_extract",
    "weight_from_simple_coefficients",
]
