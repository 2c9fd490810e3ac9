"""Exact-arithmetic construction and certification of stretch-factor degrees
for products of multitwists.

The package builds the gram matrices of the twist families, certifies
irreducibility of their characteristic polynomials through factor-degree
obstructions mod p, and assembles replayable degree certificates for the
stretch factors of the associated twist words. All arithmetic is exact;
every certificate carries the data needed to re-check it.
"""

from .certificates import (
    BipartiteReport,
    BlockWitness,
    BorderedCertificate,
    BorderedRefutation,
    CertificationError,
    DegreeCertificate,
    LLReport,
    NonsplittingExhaustion,
    RefutationError,
    TraceFieldCertificate,
    UnknownVerdictError,
    bipartite_degree,
    certificate_to_json,
    check_bordered_multi,
    check_bordered_single,
    ll_criterion,
    nonsplitting_certificate,
    stretch_min_poly,
    stretch_trace_poly,
    trace_field_degree,
    verify_json,
)
from .families import (
    Block1,
    Block2,
    Block3,
    BorderedGram,
    FamilySpec,
    G1Block,
    Genus3Closed,
    GridUndetermined,
    HilbertResult,
    KBlock,
    KBlockClosed,
    MgNg,
    ParametricGram,
    SmallDegree,
    ThurstonClosed,
    ThurstonInductive,
    TorelliG1Block,
    TorelliG2Block,
    TorelliTower,
    VARIANTS,
    build_bordered,
    build_gram,
    hilbert_search,
    intersection_grid,
    spec_from_json,
    spec_to_json,
    validate,
)
from .matrices import (
    IntMatrix,
    IntersectionGrid,
    SignatureReport,
    bipartite_double,
    char_poly,
    delete_index,
    gram,
    is_irreducible_matrix,
    is_primitive,
    resultant,
    signature_nullity,
)
from .polynomials import (
    IntPoly,
    IrreducibilityVerdict,
    cauchy_root_bound,
    certify_irreducible,
    compose_linear,
    count_real_roots,
    count_roots_greater,
    inverse_trace_transform,
    is_perfect_square,
    is_reciprocal,
    is_squarefree,
    poly_content,
    poly_div_exact,
    poly_gcd,
    primitive_part,
    recheck_witness,
    squarefree_part,
    sturm_count,
    substitute_power,
    trace_transform,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteReport",
    "Block1",
    "Block2",
    "Block3",
    "BlockWitness",
    "BorderedCertificate",
    "BorderedGram",
    "BorderedRefutation",
    "CertificationError",
    "DegreeCertificate",
    "FamilySpec",
    "G1Block",
    "Genus3Closed",
    "GridUndetermined",
    "HilbertResult",
    "IntMatrix",
    "IntPoly",
    "IntersectionGrid",
    "IrreducibilityVerdict",
    "KBlock",
    "KBlockClosed",
    "LLReport",
    "MgNg",
    "NonsplittingExhaustion",
    "ParametricGram",
    "RefutationError",
    "SignatureReport",
    "SmallDegree",
    "ThurstonClosed",
    "ThurstonInductive",
    "TorelliG1Block",
    "TorelliG2Block",
    "TorelliTower",
    "TraceFieldCertificate",
    "UnknownVerdictError",
    "VARIANTS",
    "bipartite_degree",
    "bipartite_double",
    "build_bordered",
    "build_gram",
    "cauchy_root_bound",
    "certificate_to_json",
    "certify_irreducible",
    "char_poly",
    "check_bordered_multi",
    "check_bordered_single",
    "compose_linear",
    "count_real_roots",
    "count_roots_greater",
    "delete_index",
    "gram",
    "hilbert_search",
    "intersection_grid",
    "inverse_trace_transform",
    "is_irreducible_matrix",
    "is_perfect_square",
    "is_primitive",
    "is_reciprocal",
    "is_squarefree",
    "ll_criterion",
    "nonsplitting_certificate",
    "poly_content",
    "poly_div_exact",
    "poly_gcd",
    "primitive_part",
    "recheck_witness",
    "resultant",
    "signature_nullity",
    "spec_from_json",
    "spec_to_json",
    "squarefree_part",
    "stretch_min_poly",
    "stretch_trace_poly",
    "sturm_count",
    "substitute_power",
    "trace_field_degree",
    "trace_transform",
    "validate",
    "verify_json",
]
