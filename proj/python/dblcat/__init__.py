"""Finite strict double category toolkit.

Document-level operations (validation, gamma analysis, horizontalization,
generators) take and return dblcat/1 JSON strings; the finite-field layer
works on structure-constant tables directly.
"""

from dblcat._core import (
    DimensionMismatch,
    EquivariantMorphism,
    F2Algebra,
    F2Bimodule,
    ImageEscape,
    InconsistentTagging,
    InvalidInput,
    LevelOutOfRange,
    MalformedPresentation,
    MiddleMismatch,
    NotLengthOne,
    UnknownIdentifier,
    algebra_as_bimodule,
    boundary,
    check_suite,
    gamma_report,
    gamma_summary,
    gen_product,
    gen_quintet,
    gen_sq,
    hid_morphism,
    horizontalization,
    hstar,
    identity_morphism,
    is_equivariant,
    is_globular,
    is_horizontal_endomorphism,
    is_two_subcyclic,
    length_one_decomposition,
    tensor_bimodules,
    tensor_morphisms,
    trivial_double,
    validate_document,
    vertical_length,
)

__all__ = [
    "DimensionMismatch",
    "EquivariantMorphism",
    "F2Algebra",
    "F2Bimodule",
    "ImageEscape",
    "InconsistentTagging",
    "InvalidInput",
    "LevelOutOfRange",
    "MalformedPresentation",
    "MiddleMismatch",
    "NotLengthOne",
    "UnknownIdentifier",
    "algebra_as_bimodule",
    "boundary",
    "check_suite",
    "gamma_report",
    "gamma_summary",
    "gen_product",
    "gen_quintet",
    "gen_sq",
    "hid_morphism",
    "horizontalization",
    "hstar",
    "identity_morphism",
    "is_equivariant",
    "is_globular",
    "is_horizontal_endomorphism",
    "is_two_subcyclic",
    "length_one_decomposition",
    "tensor_bimodules",
    "tensor_morphisms",
    "trivial_double",
    "validate_document",
    "vertical_length",
]
