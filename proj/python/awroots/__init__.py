"""Brackets, fixed-point approximations, contraction certificates, and
independent verification for Askey-Wilson polynomial root angles."""

from ._awroots import (  # noqa: F401
    BoundsResult,
    IterationTrace,
    KernelParam,
    ParameterSet,
    SpectralCheck,
    VerificationReport,
    bracket_gap,
    chebyshev_init,
    crossover_indices,
    error_certificate,
    first_order_approx,
    fixed_point_map,
    iterate,
    jacobian,
    k_bounds,
    morse_value,
    newton_solve,
    nu_fourier,
    nu_kernel,
    nu_pair,
    product_residual,
    reduce_angle,
    rho,
    root_bounds,
    spectral_norm_check,
    system_residual,
    u_kernel,
    v_integral,
    v_kernel,
    validate,
    verify,
)

__all__ = [
    "BoundsResult",
    "IterationTrace",
    "KernelParam",
    "ParameterSet",
    "SpectralCheck",
    "VerificationReport",
    "bracket_gap",
    "chebyshev_init",
    "crossover_indices",
    "error_certificate",
    "first_order_approx",
    "fixed_point_map",
    "iterate",
    "jacobian",
    "k_bounds",
    "morse_value",
    "newton_solve",
    "nu_fourier",
    "nu_kernel",
    "nu_pair",
    "product_residual",
    "reduce_angle",
    "rho",
    "root_bounds",
    "spectral_norm_check",
    "system_residual",
    "u_kernel",
    "v_integral",
    "v_kernel",
    "validate",
    "verify",
]
