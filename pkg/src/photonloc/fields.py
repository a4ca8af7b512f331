"""Radial field profiles: d'Alembert solutions and energy densities.

After the angular reduction the scalar generating function is

    f(r, t) = 4pi int G(k) k j0(k r) exp(-i k c t) dk

over the full k axis (negative k carries the exp(+i omega t) mode), which
equals -(2 pi i / r) [g(r - ct) - g(-r - ct)] and is regular at r = 0.
Derivatives use d/dr j0(kr) = -k j1(kr), so no small-r special casing is
needed.  Units: c = 1.

Profile convention: a scalar profile p stands for the vector field
i sin(theta) p(r) phi_hat.  The stored E2 is defined through the split
f' = E1 + E2*/C (conjugation applied at the scalar level), which makes the
quadratic energy-density combinations directly usable with scalar products.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .closedform import series_Mn
from .errors import ResolutionError
from .modes import ModePair, reduced_norms
from .quadrature import spherical_bessel_sum
from .seeds import RadialGrid, Spectrum, evaluate_seed


@dataclass(frozen=True)
class RadialFieldProfile:
    """Scalar radial samples of f, f', and the two mode-field profiles."""

    time: float
    grid: RadialGrid
    f: np.ndarray
    df_dr: np.ndarray
    E1: np.ndarray
    E2: np.ndarray


def _halves(spec: Spectrum):
    """(k, weighted G) for the k >= 0 and k < 0 branches, Simpson-weighted."""
    from .quadrature import simpson_weights

    z = spec.zero_index
    k = spec.k
    wp = simpson_weights(spec.n_points - z, spec.spacing)
    wn = simpson_weights(z + 1, spec.spacing)
    return (k[z:], wp * spec.values[z:]), (k[: z + 1], wn * spec.values[: z + 1])


def u_of_r(spec: Spectrum, r) -> np.ndarray:
    """u(r) = int_0^inf zeta(k) k e^{ikr} dk = int_0^inf G(k) e^{ikr} dk.

    Uses the positive-k restriction of the spectrum; r may be any array.
    """
    from .quadrature import fourier_sum_direct

    (kp, gp), _ = _halves(spec)
    return fourier_sum_direct(gp, kp, np.asarray(r, dtype=float), sign=+1)


def _mode_profiles(spec: Spectrum, t: float, r: np.ndarray):
    """(f_plus, f_minus, dfp_dr, dfm_dr): the k>=0 / k<0 d'Alembert pieces."""
    (kp, gp), (kn, gn) = _halves(spec)
    phase_p = gp * np.exp(-1j * kp * t)
    phase_n = gn * np.exp(-1j * kn * t)  # k<0: equals exp(+i omega t)
    fp = 4.0 * np.pi * spherical_bessel_sum(phase_p * kp, kp, r, 0)
    fm = 4.0 * np.pi * spherical_bessel_sum(phase_n * kn, kn, r, 0)
    dfp = -4.0 * np.pi * spherical_bessel_sum(phase_p * kp**2, kp, r, 1)
    dfm = -4.0 * np.pi * spherical_bessel_sum(phase_n * kn**2, kn, r, 1)
    return fp, fm, dfp, dfm


def dalembert_f(spec: Spectrum, t: float, grid: RadialGrid) -> RadialFieldProfile:
    """Evaluate f(r, t), its radial derivative, and the E1/E2 mode split.

    E1 is the k >= 0 piece of f'; E2 satisfies f' = E1 + E2*/C with C fixed
    by the spectrum's norm ratio.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    r = grid.r
    fp, fm, dfp, dfm = _mode_profiles(spec, t, r)
    pos, neg = reduced_norms(spec)
    C = np.sqrt(pos / neg) if neg > 0 else np.inf
    E1 = dfp
    E2 = C * np.conj(dfm) if np.isfinite(C) else np.zeros_like(dfm)
    return RadialFieldProfile(
        time=float(t), grid=grid, f=fp + fm, df_dr=dfp + dfm, E1=E1, E2=E2
    )


def wave_residual(spec: Spectrum, t: float, grid: RadialGrid) -> float:
    """Finite-difference residual of (1/c^2) d_tt (r f) - d_rr (r f).

    Second differences use the grid spacing in r and half that step in t
    (distinct steps, so the two truncation errors cannot cancel and the
    residual converges at second order).  Normalized by the peak of the
    spatial second difference.
    """
    h = grid.spacing
    dt = 0.5 * h
    if t - dt < 0:
        t = dt
    n = grid.n_points
    if n < 5:
        raise ResolutionError("grid too coarse for second differences")

    def w_of(tau):
        # r*f = -2 pi i [g(r - tau) - g(-r - tau)]
        g1 = evaluate_seed(spec, -tau, h, n)
        g2 = evaluate_seed(spec, -tau, -h, n)
        return -2.0j * np.pi * (g1 - g2)

    w0, wm, wp = w_of(t), w_of(t - dt), w_of(t + dt)
    wtt = (wp - 2.0 * w0 + wm) / dt**2
    wrr = (w0[2:] - 2.0 * w0[1:-1] + w0[:-2]) / h**2
    res = np.abs(wtt[1:-1] - wrr)
    peak = np.abs(wrr).max()
    if peak == 0:
        return 0.0
    return float(res.max() / peak)


def esq_profile(mp: ModePair, n: int, t: float, grid: RadialGrid) -> np.ndarray:
    """Normal-ordered <:E^2:>/sin^2(theta) of the n-photon localized state.

    Closed form in the generating-function combinations
    f1 = E1 + E2* tanh(g), f2 = E2 + E1* tanh(g), f1m = E1 - E2* tanh(g):

        2|f1|^2 (n + cosh 2g) cosh^2 g - 2 Re(f1* f1m) cosh^2 g
        - 4 Re(f1 f2) M_n(tanh^2 g)/tanh(g)

    where products follow the scalar-profile convention (the vector cross
    term E_i . E_j carries a minus sign absorbed into f2's definition).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    prof = dalembert_f(mp.spectrum, t, grid)
    th = np.tanh(mp.gamma)
    ch2 = np.cosh(mp.gamma) ** 2
    f1 = prof.E1 + np.conj(prof.E2) * th
    f2 = prof.E2 + np.conj(prof.E1) * th
    f1m = prof.E1 - np.conj(prof.E2) * th
    out = 2.0 * np.abs(f1) ** 2 * (n + np.cosh(2.0 * mp.gamma)) * ch2
    out -= 2.0 * np.real(np.conj(f1) * f1m) * ch2
    if th > 0:
        out -= 4.0 * np.real(f1 * f2) * series_Mn(n, th**2) / th
    return out


def energy_norm(spec: Spectrum, t: float, grid: RadialGrid) -> float:
    """int |d_r (r f)|^2 dr, conserved under free propagation."""
    h = grid.spacing
    n = grid.n_points
    # d_r(r f) = -2 pi i [g'(r-t) + g'(-r-t)]; evaluate g' spectrally
    from dataclasses import replace

    dspec = replace(spec, values=spec.values * (1j * spec.k))
    g1 = evaluate_seed(dspec, -t, h, n)
    g2 = evaluate_seed(dspec, -t, -h, n)
    drf = -2.0j * np.pi * (g1 + g2)
    return float(grid.weights() @ np.abs(drf) ** 2)
