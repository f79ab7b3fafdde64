"""Exact characters and branching rules for the classical groups."""

from .laurent import (
    ExpVec,
    HalfInt,
    InexactDivisionError,
    LaurentPoly,
    lp_add,
    lp_coeff_sum,
    lp_det,
    lp_div_exact,
    lp_embed,
    lp_mul,
    lp_substitute_one,
    parse_half,
)
from .weights import (
    B,
    BranchingPair,
    C,
    D,
    DominantWeight,
    GL,
    GroupFamily,
    doubly_interlaces_c,
    enumerate_dominant,
    enumerate_interlacing,
    interlaces_bd,
    interlaces_db,
    interlaces_gl,
    is_dominant,
    lex_cmp,
)
from .sl2 import (
    AsymmetricInputError,
    SL2Module,
    sl2_add,
    sl2_char_poly,
    sl2_decompose,
    sl2_dim,
    sl2_mul,
    sl2_sub,
)
from .characters import (
    GradedTerm,
    RelWeylData,
    assemble_terms,
    char_b,
    char_c,
    char_d,
    char_gl,
    char_of,
    d_minus,
    d_plus,
    dim_weight,
    even_sign_det_sum,
    gl_alternant,
    graded_term_poly,
    pair_denominator,
    rel_weyl_bd,
    rel_weyl_c,
    rel_weyl_gl,
    rel_weyl_of,
    weyl_denominator_product,
)
from .pieri import (
    GradedVirtualSum,
    dual_pieri_gl,
    halfspin_tensor,
    rel_pieri_gl,
    rel_pieri_sp,
    rel_pieri_spin,
)
from .branching import (
    BranchingTable,
    branch_bd,
    branch_db,
    branch_gl,
    branch_of,
    branch_sp,
    shift_count,
    signed_shift_sum,
    sp_rearrangement,
)
from .oracle import (
    DecompositionError,
    VirtualCharacter,
    decompose,
    decompose_h_pair,
    restrict_char,
    verify_branching,
    verify_pieri,
    verify_rel_weyl,
)

__all__ = [
    "AsymmetricInputError",
    "B",
    "BranchingPair",
    "BranchingTable",
    "C",
    "D",
    "DecompositionError",
    "DominantWeight",
    "ExpVec",
    "GL",
    "GradedTerm",
    "GradedVirtualSum",
    "GroupFamily",
    "HalfInt",
    "InexactDivisionError",
    "LaurentPoly",
    "RelWeylData",
    "SL2Module",
    "VirtualCharacter",
    "assemble_terms",
    "branch_bd",
    "branch_db",
    "branch_gl",
    "branch_of",
    "branch_sp",
    "char_b",
    "char_c",
    "char_d",
    "char_gl",
    "char_of",
    "d_minus",
    "d_plus",
    "decompose",
    "decompose_h_pair",
    "dim_weight",
    "doubly_interlaces_c",
    "dual_pieri_gl",
    "enumerate_dominant",
    "enumerate_interlacing",
    "even_sign_det_sum",
    "gl_alternant",
    "graded_term_poly",
    "halfspin_tensor",
    "interlaces_bd",
    "interlaces_db",
    "interlaces_gl",
    "is_dominant",
    "lex_cmp",
    "lp_add",
    "lp_coeff_sum",
    "lp_det",
    "lp_div_exact",
    "lp_embed",
    "lp_mul",
    "lp_substitute_one",
    "pair_denominator",
    "parse_half",
    "rel_pieri_gl",
    "rel_pieri_sp",
    "rel_pieri_spin",
    "rel_weyl_bd",
    "rel_weyl_c",
    "rel_weyl_gl",
    "rel_weyl_of",
    "restrict_char",
    "shift_count",
    "signed_shift_sum",
    "sl2_add",
    "sl2_char_poly",
    "sl2_decompose",
    "sl2_dim",
    "sl2_mul",
    "sl2_sub",
    "sp_rearrangement",
    "verify_branching",
    "verify_pieri",
    "verify_rel_weyl",
    "weyl_denominator_product",
]
