"""Strictly localized photon-like states: construction, observables, bounds.

The pipeline: a compactly supported radial seed g(r) is Fourier transformed
to a spectrum G(k); its positive- and negative-wavenumber halves define a
pair of modes that are orthonormalized into a ModePair; closed forms give
the fidelity, photon-number, and energy-density observables of the
resulting states; a truncated Fock-space oracle verifies every closed form;
and tail integrals of a given photon bound how well any strictly localized
state can approximate it.
"""

from .bounds import (
    BoundReport,
    PhotonSpec,
    bound_report,
    consistency_c_xi,
    gaussian_photon,
    lower_bound,
    mu_nu,
    sweep_bounds,
    upper_bound,
)
from .closedform import (
    SqueezeParams,
    fidelity,
    fidelity_n,
    number_expectation,
    polylog_neg_half,
    series_Mn,
)
from .errors import (
    ConvergenceError,
    DegenerateSeedError,
    PhotonlocError,
    ResolutionError,
    TruncationError,
)
from .fields import RadialFieldProfile, dalembert_f, esq_profile, u_of_r, wave_residual
from .fock import (
    TwoModeFockState,
    default_cutoff,
    esq_reconstruction,
    fidelity_oracle,
    localized_state,
    observables,
    squeeze_operator,
    step_operator,
)
from .modes import (
    ModePair,
    OrthoDiagnostics,
    build_mode_pair,
    effective_carrier,
    eta_from_spectrum,
    eta_gaussian_analytic,
    orthogonalize,
)
from .seeds import (
    GaussianFitReport,
    RadialGrid,
    SeedFunction,
    Spectrum,
    forward_transform,
    gaussian_fit_report,
    inverse_transform,
    sampled_seed,
    scale_coordinates,
    tri2_seed,
    truncate_support,
    truncated_gaussian_seed,
)

__version__ = "1.0.0"

__all__ = [
    "BoundReport",
    "ConvergenceError",
    "DegenerateSeedError",
    "GaussianFitReport",
    "ModePair",
    "OrthoDiagnostics",
    "PhotonSpec",
    "PhotonlocError",
    "RadialFieldProfile",
    "RadialGrid",
    "ResolutionError",
    "SeedFunction",
    "Spectrum",
    "SqueezeParams",
    "TruncationError",
    "TwoModeFockState",
    "bound_report",
    "build_mode_pair",
    "consistency_c_xi",
    "dalembert_f",
    "default_cutoff",
    "effective_carrier",
    "esq_profile",
    "esq_reconstruction",
    "eta_from_spectrum",
    "eta_gaussian_analytic",
    "fidelity",
    "fidelity_n",
    "fidelity_oracle",
    "forward_transform",
    "gaussian_fit_report",
    "gaussian_photon",
    "inverse_transform",
    "localized_state",
    "lower_bound",
    "mu_nu",
    "number_expectation",
    "observables",
    "orthogonalize",
    "polylog_neg_half",
    "sampled_seed",
    "scale_coordinates",
    "series_Mn",
    "squeeze_operator",
    "step_operator",
    "sweep_bounds",
    "tri2_seed",
    "truncate_support",
    "truncated_gaussian_seed",
    "u_of_r",
    "upper_bound",
    "wave_residual",
]
