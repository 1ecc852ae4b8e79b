"""Conservative Fourier pseudo-spectral solver for the space-fractional NLS equation."""

from ._fnls import (
    ConfigError,
    FractionalSymbol,
    GridSpec,
    SchemeParams,
    SolverError,
    __version__,
    apply_fractional_laplacian,
    compute_order,
    convergence_space,
    convergence_time,
    energy,
    error_norms,
    forward_dft,
    inner_product,
    inverse_dft,
    mass,
    norm_l2,
    norm_linf,
    norm_lp,
    norm_sobolev,
    oracle_verify,
    plane_wave_exact,
    run,
    seminorm_sobolev,
    sobolev_embedding_constant,
    soliton_initial,
    step,
)

__all__ = [
    "ConfigError",
    "FractionalSymbol",
    "GridSpec",
    "SchemeParams",
    "SolverError",
    "apply_fractional_laplacian",
    "compute_order",
    "convergence_space",
    "convergence_time",
    "energy",
    "error_norms",
    "forward_dft",
    "inner_product",
    "inverse_dft",
    "mass",
    "norm_l2",
    "norm_linf",
    "norm_lp",
    "norm_sobolev",
    "oracle_verify",
    "plane_wave_exact",
    "run",
    "seminorm_sobolev",
    "sobolev_embedding_constant",
    "soliton_initial",
    "step",
]
