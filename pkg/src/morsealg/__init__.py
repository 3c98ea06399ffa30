"""Exact ladder-operator algebra for the Morse oscillator.

Scalars are rationals extended by square roots, functions live in the closed
family exp(-y/2) * y^s * P(y) with Laurent P, and operators act on that
family exactly; eigenvalues and ladder relations are therefore verified by
identity, not numerically.
"""

from .functions import Comparison, LaurentPoly, WeightedFunction
from .model import (
    MorseState,
    NonBoundError,
    PhysicalParams,
    QuantumNumbers,
    laguerre,
    make_quantum_numbers,
    make_state,
    normalization,
    physical_map,
)
from .operators import (
    DiffOp,
    OpClass,
    UndefinedOperatorError,
    commutator,
    is_zero_or_undefined,
    k0_diff,
    k0_prime_composed,
    k0_prime_simplified,
    k_minus,
    k_plus,
    naive_commutator,
    naive_commutator_coefficient,
    schrodinger_diff,
)
from .plot import render_plot
from .scalars import (
    NotRationalError,
    RadicalScalar,
    Rational,
    sqrt_of_rational,
)
from .scan import (
    CSV_HEADER,
    CellRecord,
    InvariantResult,
    ScanReport,
    SignClass,
    Summary,
    compute_cell,
    read_report,
    run_invariant_suite,
    scan,
    summarize,
    write_report,
)
from .spectral import (
    EigenResult,
    EigenStatus,
    LadderOutcome,
    ZeroStateError,
    eigenvalue_composed,
    eigenvalue_one,
    eigenvalue_three,
    eigenvalue_two,
    extract_eigenvalue,
    verify_commutator_action,
    verify_lowering,
    verify_raising,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "CellRecord",
    "Comparison",
    "DiffOp",
    "EigenResult",
    "EigenStatus",
    "InvariantResult",
    "LadderOutcome",
    "LaurentPoly",
    "MorseState",
    "NonBoundError",
    "NotRationalError",
    "OpClass",
    "PhysicalParams",
    "QuantumNumbers",
    "Rational",
    "RadicalScalar",
    "ScanReport",
    "SignClass",
    "Summary",
    "UndefinedOperatorError",
    "WeightedFunction",
    "ZeroStateError",
    "commutator",
    "compute_cell",
    "eigenvalue_composed",
    "eigenvalue_one",
    "eigenvalue_three",
    "eigenvalue_two",
    "extract_eigenvalue",
    "is_zero_or_undefined",
    "k0_diff",
    "k0_prime_composed",
    "k0_prime_simplified",
    "k_minus",
    "k_plus",
    "laguerre",
    "make_quantum_numbers",
    "make_state",
    "naive_commutator",
    "naive_commutator_coefficient",
    "normalization",
    "physical_map",
    "read_report",
    "render_plot",
    "run_invariant_suite",
    "scan",
    "schrodinger_diff",
    "sqrt_of_rational",
    "summarize",
    "verify_commutator_action",
    "verify_lowering",
    "verify_raising",
    "write_report",
]
