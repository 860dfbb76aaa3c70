"""Exact invariants of semi-weighted-homogeneous isolated hypersurface
singularities with diagonal (Brieskorn-Pham) principal part.

The package computes, in exact rational arithmetic: the singularity
spectrum, saturation shifts of the reduced root exponents, composition
series lengths of the modules generated by f^{-alpha}, checkable
sufficient conditions for length jumps under perturbation, and symbolic
leading-term expansions with coefficient solving.
"""

from .model import (
    CutoffExhaustedError,
    Monomial,
    NonlinearDependenceError,
    OracleDisagreementError,
    PathUnavailableError,
    SWHSingularity,
    ValidationError,
    rational_from_string,
    rational_to_string,
)
from .spectrum import SpectrumSeries, spectrum, spectrum_from_weights
from .milnor import (
    basis_of_degree,
    class_nonzero_in_grV,
    graded_dimension,
    is_nonzero_in_milnor,
    milnor_basis,
)
from .shifts import (
    root_exponents,
    shift,
    shift_table,
    shifted_entries,
    truncation_bound,
)
from .length import (
    LengthReport,
    branch_count,
    length,
    length_cor41,
    length_table,
    nu_tilde_monomial,
    nu_tilde_wh,
    quotient_length,
    validate_paths,
)
from .witnesses import (
    Condition1Report,
    Thm2Witness,
    check_thm2_i,
    check_thm2_ii,
    corollary1_witness,
)
from .engine import GaussManinEngine, find_cancelling_coefficient
from .anchors import AnchorResult, verify_paper

__version__ = "0.1.0"

__all__ = [
    "AnchorResult",
    "Condition1Report",
    "CutoffExhaustedError",
    "GaussManinEngine",
    "LengthReport",
    "Monomial",
    "NonlinearDependenceError",
    "OracleDisagreementError",
    "PathUnavailableError",
    "SWHSingularity",
    "SpectrumSeries",
    "Thm2Witness",
    "ValidationError",
    "basis_of_degree",
    "branch_count",
    "check_thm2_i",
    "check_thm2_ii",
    "class_nonzero_in_grV",
    "corollary1_witness",
    "find_cancelling_coefficient",
    "graded_dimension",
    "is_nonzero_in_milnor",
    "length",
    "length_cor41",
    "length_table",
    "milnor_basis",
    "nu_tilde_monomial",
    "nu_tilde_wh",
    "quotient_length",
    "rational_from_string",
    "rational_to_string",
    "root_exponents",
    "shift",
    "shift_table",
    "shifted_entries",
    "spectrum",
    "spectrum_from_weights",
    "truncation_bound",
    "validate_paths",
    "verify_paper",
]
