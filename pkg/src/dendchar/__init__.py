"""Exact arithmetic for the Tamari Coxeter transformation and the dendriform operad.

The library verifies, in exact integer and rational arithmetic, the
characteristic polynomial of tau on Dend(n-1), the conjectured characteristic
polynomial of the Tamari Coxeter matrix theta, and the symmetric-function and
power-series identities that connect them.
"""

from .arith import a_val, b_val, bprime_val, catalan, check_crux, lambda_val, mobius, sequence
from .series import RationalSeries, product_form
from .spectra import SpectralReport, tau_matrix, theta_matrix, verify_conjecture, verify_theorem
from .symfunc import PowerSumPoly, plethysm, to_schur
from .tamari import TamariLattice, build_lattice, order_matrix

__version__ = "0.1.0"

__all__ = [
    "a_val",
    "b_val",
    "bprime_val",
    "catalan",
    "check_crux",
    "lambda_val",
    "mobius",
    "sequence",
    "RationalSeries",
    "product_form",
    "SpectralReport",
    "tau_matrix",
    "theta_matrix",
    "verify_conjecture",
    "verify_theorem",
    "PowerSumPoly",
    "plethysm",
    "to_schur",
    "TamariLattice",
    "build_lattice",
    "order_matrix",
]
