"""Exact Dunkl operators, Appell systems and k-Gaussian integration."""

from ._core import (
    CapExceededError,
    Context,
    InvalidMultiplicityError,
    NotDivisibleError,
    Polynomial,
    UnsupportedFamilyError,
    appell_character,
    appell_cocharacter,
    apply_v,
    apply_v_inverse,
    c_k,
    dunkl,
    gaussian_integrate,
    heat,
    heat_kernel,
    hermite_basis,
    kernel,
    kernel_z2_closed,
    laplacian,
    moment,
    pairing,
    rodriguez_cocharacter,
    suite_names,
    taylor_coefficients,
    theta,
    verify,
)

__version__ = "0.1.0"
