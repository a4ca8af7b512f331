"""Closed-form observables of the localized photon-like states.

Every quantity here depends on the seed only through the squeezing
parameter gamma (equivalently t = tanh^2 gamma or eta = t/(1+t)), so these
functions take scalars and are cheap enough for dense parameter sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, zeta

from .errors import ConvergenceError

#: terms of the zeta-coefficient expansion of Li_{-1/2} near x = 1
_LI_NEAR_ONE_TERMS = 40

#: switch point between direct summation and the near-one expansion
_LI_SWITCH = 0.9


@dataclass(frozen=True)
class SqueezeParams:
    """Scalar parameters of a two-mode squeezed photon pair."""

    gamma: float

    @property
    def t(self) -> float:
        """tanh^2(gamma), the geometric ratio of the pair amplitudes."""
        return float(np.tanh(self.gamma) ** 2)

    @property
    def eta(self) -> float:
        """Negative-wavenumber weight t/(1+t) in [0, 1/2)."""
        t = self.t
        return t / (1.0 + t)

    @classmethod
    def from_eta(cls, eta: float) -> "SqueezeParams":
        if not 0.0 <= eta < 0.5:
            raise ValueError("eta must lie in [0, 1/2)")
        t = eta / (1.0 - eta)
        return cls(gamma=float(np.arctanh(np.sqrt(t))))


def polylog_neg_half(x: float, tol: float = 1e-15) -> float:
    """Li_{-1/2}(x) = sum_{i>=1} sqrt(i) x^i for 0 <= x < 1.

    Direct summation below x = 0.9; above that the series converges too
    slowly and the expansion around the x = 1 singularity is used,

        Li_{-1/2}(e^-u) = sqrt(pi)/(2 u^{3/2})
                          + sum_{j>=0} zeta(-1/2 - j) (-u)^j / j!
    """
    x = float(x)
    if not 0.0 <= x < 1.0:
        raise ValueError("argument must lie in [0, 1)")
    if x == 0.0:
        return 0.0
    if x <= _LI_SWITCH:
        total = 0.0
        term_base = 1.0
        for i in range(1, 100000):
            term_base *= x
            term = np.sqrt(i) * term_base
            total += term
            if term < tol * max(total, 1.0):
                return total
        raise ConvergenceError("direct polylog series did not converge")
    u = -np.log(x)
    total = np.sqrt(np.pi) / (2.0 * u**1.5)
    mu = 1.0
    for j in range(_LI_NEAR_ONE_TERMS):
        total += zeta(-0.5 - j) * mu
        mu *= -u / (j + 1)
    return float(total)


def fidelity(eta: float) -> float:
    """Max fidelity to a single photon at negative-wavenumber weight eta.

        F = sqrt((1-2 eta)^3 / (eta^2 - eta^3)) Li_{-1/2}(eta/(1-eta))

    Continuous limits: F(0) = 1 and F -> 0 as eta -> 1/2.
    """
    eta = float(eta)
    if not 0.0 <= eta <= 0.5:
        raise ValueError("eta must lie in [0, 1/2]")
    if eta == 0.0:
        return 1.0
    if eta == 0.5:
        return 0.0
    pref = np.sqrt((1.0 - 2.0 * eta) ** 3 / (eta**2 * (1.0 - eta)))
    return float(pref * polylog_neg_half(eta / (1.0 - eta)))


def _sqrt_binom(n: int, i: int) -> float:
    """sqrt(C(n+i, i)) via log-gamma, stable for large orders."""
    return float(
        np.exp(0.5 * (gammaln(n + i + 1) - gammaln(i + 1) - gammaln(n + 1)))
    )


def fidelity_n(n: int, params: SqueezeParams, tol: float = 1e-15) -> float:
    """Max fidelity of the strictly localized state to the n-photon target.

        F_n = cosh(gamma)^-(n+2) sum_i sqrt(C(n+i, i)) t^i,  t = tanh^2 gamma

    For n = 1 this reduces to ``fidelity`` evaluated at eta = t/(1+t).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = params.t
    pref = float(np.cosh(params.gamma) ** -(n + 2))
    if t == 0.0:
        return pref
    total = 0.0
    ti = 1.0
    for i in range(200000):
        term = _sqrt_binom(n, i) * ti
        total += term
        # remaining terms bounded by a geometric series with ratio
        # t * sqrt((n+i+1)/(i+1)) < 1 once i is large enough
        ratio = t * np.sqrt((n + i + 1) / (i + 1))
        if ratio < 1.0 and term * ratio / (1.0 - ratio) < tol * total:
            return pref * total
        ti *= t
    raise ConvergenceError("fidelity series did not converge")


def series_Mn(n: int, a: float, tol: float = 1e-15) -> float:
    """M_n(a) = sum_{i>=1} sqrt(i (i+n)) a^i for 0 <= a < 1.

    M_0(a) = a/(1-a)^2 in closed form; other orders are summed with a
    geometric tail bound.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = float(a)
    if not 0.0 <= a < 1.0:
        raise ValueError("argument must lie in [0, 1)")
    if a == 0.0:
        return 0.0
    if n == 0:
        return a / (1.0 - a) ** 2
    total = 0.0
    ai = 1.0
    for i in range(1, 500000):
        ai *= a
        term = np.sqrt(i * (i + n)) * ai
        total += term
        # sqrt((i+1)(i+1+n)) / sqrt(i(i+n)) is decreasing in i, so the tail
        # is below term * rho/(1-rho) with rho = a * that ratio
        rho = a * np.sqrt((i + 1) * (i + 1 + n) / (i * (i + n)))
        if rho < 1.0 and term * rho / (1.0 - rho) < tol * total:
            return total
    raise ConvergenceError("M_n series did not converge")


def number_expectation(n: int, params: SqueezeParams, cross_term=None) -> float:
    """<N> of the strictly localized n-photon state.

        (n + 2 sinh^2 g)(cosh^2 g + sinh^2 g) + 2 sinh^2 g - 4 M_n(tanh^2 g)

    ``cross_term`` overrides the M_n series; it exists so the Fock-space
    oracle can falsify candidate cross-term models.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if cross_term is None:
        cross_term = series_Mn
    g = params.gamma
    sh2 = float(np.sinh(g) ** 2)
    ch2 = float(np.cosh(g) ** 2)
    return (n + 2.0 * sh2) * (ch2 + sh2) + 2.0 * sh2 - 4.0 * cross_term(n, params.t)


def small_eta_slope() -> float:
    """d(1 - F)/d eta at eta = 0, equal to 3/2 - sqrt(2)."""
    return 1.5 - np.sqrt(2.0)
