"""Localization-fidelity bounds for a given single photon.

Upper bound: no state strictly localized inside radius r0 can beat
sqrt(1 - (mu + |nu|)^2 / (2 pi e)), where mu and nu measure the photon's
own tail outside r0.  Lower bound: truncating the photon's radial profile
to [0, r0] yields a valid seed, and the resulting localized state's overlap
with the photon is achievable by construction.

Both reduce to 1D radial quadrature after the angular integrals; the
narrow-band approximation (constant mode normalization across the band)
is assumed and asserted via k0*sigma >= 10.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

import numpy as np

from .closedform import fidelity
from .modes import ANGULAR_FACTOR, build_mode_pair
from .parallel import parallel_map
from .quadrature import simpson_weights, spherical_bessel_sum
from .seeds import RadialGrid, Spectrum, inverse_transform, sampled_seed, truncate_support

#: relative contribution threshold for extending the radial tail window
TAIL_WINDOW_TOL = 1e-13

#: narrow-band validity threshold on k0*sigma
NARROW_BAND_MIN = 10.0


@dataclass(frozen=True)
class PhotonSpec:
    """Single photon with spectrum supported on k >= 0.

    ``normalized`` certifies that the all-space tail integral of the spatial
    mode is unity.  k0, sigma, and r_center are optional descriptors of the
    default truncated-Gaussian family used to pick radial windows.
    """

    spectrum: Spectrum
    normalized: bool = False
    k0: float | None = None
    sigma: float | None = None
    r_center: float | None = None


@dataclass(frozen=True)
class BoundReport:
    """Upper/lower localization-fidelity bounds at one radius."""

    r0: float
    mu: float
    nu: complex
    F_upper: float
    F_lower: float
    overlap: float
    eta_trunc: float
    r_max: float  # radial extent used for the tail quadrature


def gaussian_photon(
    k0: float,
    sigma: float,
    r0: float,
    k_pad: float = 12.0,
    n_points: int = 2**13 + 1,
) -> PhotonSpec:
    """Photon with G(k) = exp(-sigma^2 (k-k0)^2 / 2) exp(-i k r0/2) for k >= 0.

    The harmonic factor centers the spatial mode at r = r0/2.  Returned
    normalized so the all-space tail integral is unity.
    """
    if k0 <= 0 or sigma <= 0:
        raise ValueError("k0 and sigma must be positive")
    if k0 * sigma < NARROW_BAND_MIN:
        warnings.warn(
            f"k0*sigma = {k0 * sigma:g} is below {NARROW_BAND_MIN:g}; the "
            "narrow-band bounds may be inaccurate",
            stacklevel=2,
        )
    k_half = k0 + k_pad / sigma
    k = np.linspace(-k_half, k_half, n_points)
    values = np.where(
        k >= 0,
        np.exp(-0.5 * sigma**2 * (k - k0) ** 2) * np.exp(-1j * k * r0 / 2.0),
        0.0,
    )
    spec = Spectrum(-k_half, k_half, n_points, values.astype(complex))
    photon = PhotonSpec(spec, normalized=False, k0=k0, sigma=sigma, r_center=r0 / 2.0)
    return normalize_photon(photon)


def _positive_band(spec: Spectrum, cut: float = 1e-14):
    """Simpson-weighted (k, G) samples on the k >= 0 band that carries weight."""
    z = spec.zero_index
    k = spec.k[z:]
    g = spec.values[z:]
    w = simpson_weights(k.size, spec.spacing) * g
    mag = np.abs(g)
    keep = mag > cut * mag.max()
    if keep.sum() < 8:
        raise ValueError("photon spectrum carries no usable positive-k weight")
    lo, hi = np.argmax(keep), len(keep) - np.argmax(keep[::-1])
    return k[lo:hi], w[lo:hi]


def xi_prime(photon: PhotonSpec, r: np.ndarray) -> np.ndarray:
    """Radial derivative of the photon's scalar spatial mode.

    xi(r) is the d'Alembert-style profile of the spectrum G(k)/sqrt(k)
    (the sqrt removes the per-mode field normalization), so
    xi'(r) = -4 pi int_0^inf G(k) k^{3/2} j1(k r) dk.
    """
    k, wg = _positive_band(photon.spectrum)
    return -4.0 * np.pi * spherical_bessel_sum(wg * k**1.5, k, np.asarray(r, float), 1)


def _radial_window(photon: PhotonSpec, r0: float) -> float:
    """Outer radius beyond which the mode's tail is numerically negligible."""
    center = photon.r_center if photon.r_center is not None else r0 / 2.0
    if photon.sigma is not None:
        width = photon.sigma
    else:
        k, wg = _positive_band(photon.spectrum)
        width = 1.0 / (k.max() - k.min())
    r_max = max(r0, center) + 10.0 * width
    # extend by windows until the added tail is negligible
    for _ in range(16):
        probe = np.linspace(r_max, 2.0 * r_max, 257)
        q = xi_prime(photon, probe)
        body = np.linspace(0.0, r_max, 1025)
        qb = xi_prime(photon, body)
        add = simpson_weights(257, probe[1] - probe[0]) @ (np.abs(q) ** 2 * probe**2)
        tot = simpson_weights(1025, body[1] - body[0]) @ (np.abs(qb) ** 2 * body**2)
        if add <= TAIL_WINDOW_TOL * tot:
            return float(r_max)
        r_max *= 2.0
    raise ValueError("radial tail window failed to converge")


def _tail_grids(photon: PhotonSpec, r0: float, points_per_cycle: int = 24):
    """((r_in, w_in, q_in), (r_out, w_out, q_out)) split exactly at r0."""
    if r0 < 0:
        raise ValueError("r0 must be nonnegative")
    r_max = _radial_window(photon, r0)
    k, _ = _positive_band(photon.spectrum)
    h = 2.0 * np.pi / (points_per_cycle * k.max())

    def seg(a, b):
        n = max(int(np.ceil((b - a) / h)) + 1, 9)
        n += 1 - n % 2  # odd point count for plain Simpson
        r = np.linspace(a, b, n)
        w = simpson_weights(n, r[1] - r[0])
        return r, w, xi_prime(photon, r)

    inner = seg(0.0, r0) if r0 > 0 else None
    outer = seg(r0, r_max)
    return inner, outer, r_max


def mu_nu(photon: PhotonSpec, r0: float) -> tuple[float, complex]:
    """Tail weight mu and tail anomaly nu of the photon outside radius r0.

    mu = (8 pi/3) int_{r>r0} |xi'|^2 r^2 dr, nu = -(8 pi/3) int_{r>r0}
    (xi')^2 r^2 dr, normalized so mu at r0 = 0 equals 1.
    """
    if not photon.normalized:
        raise ValueError("photon must be normalized (see normalize_photon)")
    inner, outer, _ = _tail_grids(photon, r0)
    r, w, q = outer
    mu = ANGULAR_FACTOR * (w @ (np.abs(q) ** 2 * r**2))
    nu = -ANGULAR_FACTOR * (w @ (q**2 * r**2))
    total = mu
    if inner is not None:
        ri, wi, qi = inner
        total = mu + ANGULAR_FACTOR * (wi @ (np.abs(qi) ** 2 * ri**2))
    return float(mu / total), complex(nu / total)


def normalize_photon(photon: PhotonSpec) -> PhotonSpec:
    """Scale the spectrum so the all-space tail integral equals one."""
    inner, outer, _ = _tail_grids(photon, 0.0)
    r, w, q = outer
    total = ANGULAR_FACTOR * (w @ (np.abs(q) ** 2 * r**2))
    scale = 1.0 / np.sqrt(total)
    spec = replace(photon.spectrum, values=photon.spectrum.values * scale)
    return replace(photon, spectrum=spec, normalized=True)


def upper_bound(mu: float, nu: complex) -> float:
    """sqrt(1 - (mu + |nu|)^2 / (2 pi e)): the localization-fidelity ceiling."""
    if not 0.0 <= mu <= 1.0 + 1e-12:
        raise ValueError("mu must lie in [0, 1]")
    if abs(nu) > mu * (1.0 + 1e-9) + 1e-15:
        raise ValueError("|nu| cannot exceed mu")
    arg = 1.0 - (mu + abs(nu)) ** 2 / (2.0 * np.pi * np.e)
    if arg < 0:
        raise ValueError("tail weights out of range")
    return float(np.sqrt(arg))


def lower_bound(
    photon: PhotonSpec,
    r0: float,
    seed_points: int = 2049,
    k_half_factor: float = 4.0,
    spectral_points: int = 2**13 + 1,
) -> dict:
    """Achievable fidelity: truncate the photon's profile into a seed.

    Pipeline: inverse transform G to g(r), truncate outside [0, r0], build
    the orthonormalized mode pair from the truncated seed, evaluate the
    localization fidelity at its eta, and multiply by the photon overlap
    |(G_xi, G~)_k| of the single-photon components.

    The truncated seed has edge discontinuities whose spectral tails decay
    like 1/k, so the forward transform uses a fixed spectral half-width
    (``k_half_factor`` times the carrier) rather than tail-driven growth.
    """
    if r0 <= 0:
        raise ValueError("r0 must be positive")
    grid = RadialGrid(r0, seed_points)
    g = inverse_transform(photon.spectrum, grid)
    seed, _ = truncate_support(g, grid, r0)
    k0 = photon.k0 if photon.k0 is not None else photon.spectrum.k_max / 2.0
    seed = sampled_seed(seed.samples, grid, r0, k0=k0)
    mp = build_mode_pair(
        seed, k_half=k_half_factor * k0, n_points=spectral_points, tail_tol=1.0
    )

    # overlap of the photon with the construction's first mode, in the
    # reduced positive-k inner product with weight k
    spec = mp.spectrum
    z = spec.zero_index
    k = spec.k[z:]
    w = simpson_weights(k.size, spec.spacing)
    gxi = _photon_values(photon, k)
    num = abs(w @ (np.conj(gxi) * spec.values[z:] * k))
    den = np.sqrt(
        (w @ (np.abs(gxi) ** 2 * k)) * (w @ (np.abs(spec.values[z:]) ** 2 * k))
    )
    overlap = float(num / den)
    F_eta = fidelity(mp.eta)
    return {
        "F_lower": overlap * F_eta,
        "overlap": overlap,
        "eta_trunc": mp.eta,
        "tail_fraction": spec.tail_fraction,
    }


def _photon_values(photon: PhotonSpec, k: np.ndarray) -> np.ndarray:
    """Photon spectrum sampled at arbitrary k >= 0 (analytic when Gaussian)."""
    if photon.k0 is not None and photon.sigma is not None:
        rc = photon.r_center if photon.r_center is not None else 0.0
        return np.exp(-0.5 * photon.sigma**2 * (k - photon.k0) ** 2) * np.exp(
            -1.0j * k * rc
        )
    return np.interp(k, photon.spectrum.k, photon.spectrum.values.real) + 1j * np.interp(
        k, photon.spectrum.k, photon.spectrum.values.imag
    )


def consistency_c_xi(photon: PhotonSpec, r0: float) -> float:
    """Residual between the smearing-route coupling and (mu + |nu|)/2.

    Builds the real smearing profile z(r) = -2 Im(e^{i phi/2} xi'(r)) outside
    r0 with phi = -arg(nu), normalizes it, and quadratures the coupling
    directly; analytically both routes give |c_xi|^2 = (mu + |nu|)/2.
    """
    inner, outer, _ = _tail_grids(photon, r0)
    r, w, q = outer
    total = ANGULAR_FACTOR * (w @ (np.abs(q) ** 2 * r**2))
    if inner is not None:
        ri, wi, qi = inner
        total += ANGULAR_FACTOR * (wi @ (np.abs(qi) ** 2 * ri**2))
    q = q / np.sqrt(total)
    mu = ANGULAR_FACTOR * (w @ (np.abs(q) ** 2 * r**2))
    nu = -ANGULAR_FACTOR * (w @ (q**2 * r**2))
    phi = -np.angle(nu)
    z = -2.0 * np.imag(np.exp(0.5j * phi) * q)
    f0_sq = 1.0 / (ANGULAR_FACTOR * (w @ (z**2 * r**2)))
    coupling = f0_sq * ANGULAR_FACTOR**2 * abs(w @ (z * q * r**2)) ** 2
    return float(abs(coupling - 0.5 * (mu + abs(nu))))


def bound_report(photon: PhotonSpec, r0: float) -> BoundReport:
    """Evaluate both bounds at one localization radius."""
    mu, nu = mu_nu(photon, r0)
    _, _, r_max = _tail_grids(photon, r0)
    low = lower_bound(photon, r0)
    return BoundReport(
        r0=float(r0),
        mu=mu,
        nu=nu,
        F_upper=upper_bound(mu, nu),
        F_lower=low["F_lower"],
        overlap=low["overlap"],
        eta_trunc=low["eta_trunc"],
        r_max=r_max,
    )


def sweep_bounds(
    k0sigma: float = 20.0, ratios=None, sigma: float = 1.0
) -> list[BoundReport]:
    """Bound reports over a grid of localization radii r0/sigma."""
    if ratios is None:
        ratios = np.linspace(0.25, 4.0, 31)

    def one(ratio: float) -> BoundReport:
        r0 = float(ratio) * sigma
        photon = gaussian_photon(k0sigma / sigma, sigma, r0)
        return bound_report(photon, r0)

    return parallel_map(one, ratios)
