"""Exact arithmetic for generalized Stirling triangles, higher-order
geometric polynomial families, exponential (Bell-type) polynomials, and
higher-order Euler polynomials, with a brute-force counting oracle, an
identity conformance harness, and an asymptotic error-decay engine.

Everything except the deliberately floating-point quadrature route and the
asymptotic display columns is computed over Fraction coefficients.
"""

from .asymptotics import (
    DecayReport,
    DecayRow,
    ExpansionInput,
    ExpansionResult,
    a_coefficients,
    closed_form_w_check,
    error_decay_report,
    format_sig,
    hsu_expansion,
    predict_a,
    w_coefficient,
)
from .euler import (
    EulerConvCheck,
    EulerParams,
    EulerRecCheck,
    check_euler_convolutions,
    check_euler_recurrences,
    euler_egf,
    euler_explicit,
    euler_polynomial,
    euler_via_a,
)
from .exppoly import (
    ExpPolyParams,
    SpiveyCheck,
    check_integral_rep,
    check_lemma34,
    check_spivey,
    lemma34_sides,
    s_exp_egf,
    s_exp_eval,
    s_exp_explicit,
)
from .geom import (
    ASequence,
    ConvolutionCheck,
    Eq6Check,
    Eq3132Check,
    Eq37Check,
    PolyParams,
    ShiftCheck,
    Thm2Check,
    a_egf,
    a_eval,
    a_explicit,
    a_recurrence,
    check_31_32,
    check_38,
    check_convolutions,
    check_eq6,
    check_eq7,
    check_shift_theorem,
    check_symmetry_37,
    check_thm2,
    check_thm4,
    check_thm6,
    lam_binom,
    m_numbers,
    m_polynomial,
)
from .harness import (
    ConformanceReport,
    GridSpec,
    IdentityReport,
    ReadingReport,
    counterexample_minimize,
    default_grid,
    run_suite,
)
from .oracle import (
    MAX_ORACLE_N,
    BPAConfig,
    Partition,
    count_bpa,
    count_gamma_cell,
    count_m_sections,
    partitions_with_parts,
    section_poly_value,
)
from .series import Series, binom, binomial_series, falling, gff, rising
from .stirling import (
    StirlingParams,
    param_swap_rhs,
    stirling_dual,
    stirling_egf_check,
    stirling_explicit,
    stirling_rec,
)
from .xpoly import XPolynomial

__version__ = "0.1.0"

__all__ = [
    "ASequence",
    "BPAConfig",
    "ConformanceReport",
    "ConvolutionCheck",
    "DecayReport",
    "DecayRow",
    "Eq3132Check",
    "Eq37Check",
    "Eq6Check",
    "EulerConvCheck",
    "EulerParams",
    "EulerRecCheck",
    "ExpPolyParams",
    "ExpansionInput",
    "ExpansionResult",
    "GridSpec",
    "IdentityReport",
    "MAX_ORACLE_N",
    "Partition",
    "PolyParams",
    "ReadingReport",
    "Series",
    "ShiftCheck",
    "SpiveyCheck",
    "StirlingParams",
    "Thm2Check",
    "XPolynomial",
    "a_coefficients",
    "a_egf",
    "a_eval",
    "a_explicit",
    "a_recurrence",
    "binom",
    "binomial_series",
    "check_31_32",
    "check_38",
    "check_convolutions",
    "check_eq6",
    "check_eq7",
    "check_euler_convolutions",
    "check_euler_recurrences",
    "check_integral_rep",
    "check_lemma34",
    "check_shift_theorem",
    "check_spivey",
    "check_symmetry_37",
    "check_thm2",
    "check_thm4",
    "check_thm6",
    "closed_form_w_check",
    "count_bpa",
    "count_gamma_cell",
    "count_m_sections",
    "counterexample_minimize",
    "default_grid",
    "error_decay_report",
    "euler_egf",
    "euler_explicit",
    "euler_polynomial",
    "euler_via_a",
    "falling",
    "format_sig",
    "gff",
    "hsu_expansion",
    "lam_binom",
    "lemma34_sides",
    "m_numbers",
    "m_polynomial",
    "param_swap_rhs",
    "partitions_with_parts",
    "predict_a",
    "rising",
    "run_suite",
    "s_exp_egf",
    "s_exp_eval",
    "s_exp_explicit",
    "section_poly_value",
    "stirling_dual",
    "stirling_egf_check",
    "stirling_explicit",
    "stirling_rec",
    "w_coefficient",
]
