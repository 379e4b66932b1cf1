"""Exact Hankel/binomial transforms, series reversion, and identity checks.

Everything computes in exact integer or rational arithmetic; no floats,
no rounding.  The optional :mod:`hankelrev.oeis` module (sequence
identification, network-aware) is deliberately not imported here so the
core stays dependency-free at runtime.
"""

from hankelrev.conjectures import (
    Check,
    ConjectureReport,
    SweepResult,
    prop9_T_matrix,
    prop9_coeff_identity_1,
    prop9_coeff_identity_2,
    prop9_verify,
    report_to_csv,
    report_to_dict,
    report_to_json,
    sweep,
    sweep_to_dict,
    sweep_to_json,
    verify_alpha_shift,
    verify_anchors,
    verify_conjecture4,
    verify_conjecture6,
    verify_conjecture8,
)
from hankelrev.families import (
    FAMILY_A,
    FAMILY_B,
    FAMILY_C,
    FamilyParams,
    catalan,
    family_a_reversion_ogf,
    family_a_reversion_term,
    family_a_term,
    family_b_reversion_ogf,
    family_b_reversion_term,
    family_b_term,
    family_base_ogf,
    family_base_terms,
    family_c_reversion_ogf,
    family_c_term,
    family_reversion_ogf,
    family_reversion_terms,
)
from hankelrev.gf import (
    BinOp,
    GfParseError,
    Lit,
    Pow,
    Sqrt,
    Var,
    eval_gf,
    expand_gf,
    format_gf,
    parse_gf,
)
from hankelrev.hankel import (
    HankelTriple,
    binomial_transform,
    det_exact,
    hankel_matrix,
    hankel_transform,
    hankel_triple,
    inverse_binomial_transform,
    pascal_matrix,
    sequence_from_json,
    sequence_to_json,
)
from hankelrev.series import PowerSeries, coefficient_string

__version__ = "0.1.0"

__all__ = [
    "BinOp",
    "Check",
    "ConjectureReport",
    "FAMILY_A",
    "FAMILY_B",
    "FAMILY_C",
    "FamilyParams",
    "GfParseError",
    "HankelTriple",
    "Lit",
    "Pow",
    "PowerSeries",
    "Sqrt",
    "SweepResult",
    "Var",
    "binomial_transform",
    "catalan",
    "coefficient_string",
    "det_exact",
    "eval_gf",
    "expand_gf",
    "family_a_reversion_ogf",
    "family_a_reversion_term",
    "family_a_term",
    "family_b_reversion_ogf",
    "family_b_reversion_term",
    "family_b_term",
    "family_base_ogf",
    "family_base_terms",
    "family_c_reversion_ogf",
    "family_c_term",
    "family_reversion_ogf",
    "family_reversion_terms",
    "format_gf",
    "hankel_matrix",
    "hankel_transform",
    "hankel_triple",
    "inverse_binomial_transform",
    "parse_gf",
    "pascal_matrix",
    "prop9_T_matrix",
    "prop9_coeff_identity_1",
    "prop9_coeff_identity_2",
    "prop9_verify",
    "report_to_csv",
    "report_to_dict",
    "report_to_json",
    "sequence_from_json",
    "sequence_to_json",
    "sweep",
    "sweep_to_dict",
    "sweep_to_json",
    "verify_alpha_shift",
    "verify_anchors",
    "verify_conjecture4",
    "verify_conjecture6",
    "verify_conjecture8",
]
