"""Orthonormalized mode pairs from a seed spectrum.

The single-curl basis functions reduce all 3D inner products to 1D
wavenumber integrals: the angular integral of sin^2(theta) contributes
8pi/3, the measure contributes k^2 dk, and the sqrt(k) field normalization
cancels one power of k.  The reduced weights are |G(k)|^2 |k| for norms and
G*(k) G*(-k) k for the cross term.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from scipy.special import erf

from .errors import DegenerateSeedError
from .quadrature import simpson_weights
from .seeds import SeedFunction, Spectrum, forward_transform

ANGULAR_FACTOR = 8.0 * np.pi / 3.0

#: |I| within this distance of the parallel-mode point 1/2 is degenerate
DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class OrthoDiagnostics:
    """Bookkeeping from one orthogonalization step."""

    I: complex
    J: float
    beta: complex
    eta_before: float
    eta_after: float


@dataclass(frozen=True)
class ModePair:
    """Orthonormalized pair represented by its scaled spectrum and constants."""

    spectrum: Spectrum
    C: float
    gamma: float
    eta: float
    norm1: float
    norm2: float
    diagnostics: OrthoDiagnostics | None = None


def reduced_norms(spec: Spectrum) -> tuple[float, float]:
    """(positive-k, negative-k) squared norms: (8pi/3) int |G|^2 |k| dk.

    The k = 0 sample belongs to the positive branch; the integrand vanishes
    there so the choice is inert.
    """
    z = spec.zero_index
    k = spec.k
    w = np.abs(spec.values) ** 2 * np.abs(k)
    # Simpson applied separately to [k_min, 0] and [0, k_max]
    pos = simpson_weights(spec.n_points - z, spec.spacing) @ w[z:]
    neg = simpson_weights(z + 1, spec.spacing) @ w[: z + 1]
    return float(ANGULAR_FACTOR * pos), float(ANGULAR_FACTOR * neg)


def positive_weighted_integral(spec: Spectrum, integrand: np.ndarray) -> complex:
    """Simpson integral of ``integrand`` over the k >= 0 half of the grid."""
    z = spec.zero_index
    return complex(simpson_weights(spec.n_points - z, spec.spacing) @ integrand[z:])


def cross_overlap(spec: Spectrum) -> complex:
    """(xi1, xi2/C) = (8pi/3) int_0^inf G(k) G(-k) k dk.

    Inner product linear in the first argument; with this convention the
    orthogonalizing beta solves beta^2 I* - beta + I = 0 exactly.
    """
    k = spec.k
    g = spec.values
    integrand = g * g[::-1] * k
    return ANGULAR_FACTOR * positive_weighted_integral(spec, integrand)


def eta_from_spectrum(spec: Spectrum, relabel: bool = True) -> float:
    """Relative negative-wavenumber weight of |G|^2 |k|.

    With ``relabel`` the modes are swapped (G mirrored) whenever the raw
    ratio exceeds 1/2, so the result is always in [0, 1/2].
    """
    pos, neg = reduced_norms(spec)
    total = pos + neg
    if total <= 0 or not np.isfinite(total):
        raise ValueError("spectrum carries no weight")
    eta = neg / total
    if relabel and eta > 0.5:
        eta = 1.0 - eta
    return float(eta)


def eta_gaussian_analytic(k0sigma: float) -> float:
    """eta of an untruncated Gaussian spectrum |G|^2 = exp(-(k-k0)^2 sigma^2)."""
    x = float(k0sigma)
    if x < 0:
        raise ValueError("k0*sigma must be nonnegative")
    sp = np.sqrt(np.pi)
    return 0.5 * (1.0 - sp * x / (np.exp(-(x**2)) + sp * x * erf(x)))


def orthogonalize(spec: Spectrum) -> tuple[Spectrum, OrthoDiagnostics]:
    """Modify G so the two basis functions become orthogonal.

    G~(k) = G(k) - beta G*(-k) with beta = (1-J)/(2 I*), J = sqrt(1-4|I|^2).
    The corresponding seed modification g - beta g* preserves the support.
    Raises DegenerateSeedError at the parallel-mode point (eta = 1/2 with
    Cauchy-Schwarz tight), where no beta exists.
    """
    pos, neg = reduced_norms(spec)
    total = pos + neg
    if total <= 0:
        raise ValueError("spectrum carries no weight")
    eta_before = neg / total
    if eta_before > 0.5:
        raise ValueError("relabel the spectrum (eta > 1/2) before orthogonalizing")
    I = cross_overlap(spec) / total
    absI = abs(I)
    if absI >= 0.5 - DEGENERACY_TOL or eta_before >= 0.5 - DEGENERACY_TOL:
        raise DegenerateSeedError(
            "seed leads to (nearly) parallel modes; introduce a harmonic "
            "phase factor (nonzero carrier) to separate them"
        )
    J = float(np.sqrt(1.0 - 4.0 * absI**2))
    # (1-J)/(2 I*) rewritten as 2I/(1+J): avoids the 1-J cancellation at
    # small |I|, which would otherwise cost ~eps/|I| in beta
    beta = 2.0 * I / (1.0 + J)
    modified = replace(spec, values=spec.values - beta * np.conj(spec.values[::-1]))
    eta_after = eta_from_spectrum(modified, relabel=False)
    return modified, OrthoDiagnostics(
        I=complex(I), J=J, beta=complex(beta),
        eta_before=float(eta_before), eta_after=float(eta_after),
    )


def mode_pair_from_spectrum(spec: Spectrum) -> ModePair:
    """Orthogonalize, scale to unit norms, and extract C, gamma, eta."""
    pos, neg = reduced_norms(spec)
    if neg > pos:
        spec = spec.mirrored()
    ortho, diag = orthogonalize(spec)
    pos, neg = reduced_norms(ortho)
    scaled = replace(ortho, values=ortho.values / np.sqrt(pos))
    C = float(np.sqrt(pos / neg))
    gamma = float(np.arctanh(1.0 / C))
    eta = float(neg / (pos + neg))
    pos_s, neg_s = reduced_norms(scaled)
    return ModePair(
        spectrum=scaled, C=C, gamma=gamma, eta=eta,
        norm1=float(np.sqrt(pos_s)), norm2=float(C * np.sqrt(neg_s)),
        diagnostics=diag,
    )


def build_mode_pair(seed: SeedFunction, **transform_kwargs) -> ModePair:
    """Seed -> spectrum -> orthogonalized, normalized mode pair."""
    return mode_pair_from_spectrum(forward_transform(seed, **transform_kwargs))


def effective_carrier(spec: Spectrum) -> float:
    """Mean k weighted by |G(k) k|^2 over k > 0."""
    k = spec.k
    w = np.abs(spec.values * k) ** 2
    denom = positive_weighted_integral(spec, w.astype(complex)).real
    if denom <= 0:
        raise ValueError("spectrum has no positive-wavenumber weight")
    num = positive_weighted_integral(spec, (w * k).astype(complex)).real
    return float(num / denom)
