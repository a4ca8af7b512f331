"""Composite-Simpson quadrature and fast oscillatory Fourier sums.

All integrals in this package are discretized as weighted sums over uniform
grids.  The Fourier-type sums sum_n v_n exp(+-i x_n y_j) with both grids
uniform are evaluated through the chirp z-transform, which reproduces the
direct quadrature sum to machine precision in O((n+m) log(n+m)) time.
"""

from __future__ import annotations

import numpy as np
from scipy.signal import czt
from scipy.special import spherical_jn


def simpson_weights(n: int, h: float) -> np.ndarray:
    """Composite Simpson weights for n uniformly spaced points.

    For even n (odd interval count) the last three intervals use the 3/8
    rule so the full range is still integrated at fourth order.
    """
    if n < 2:
        raise ValueError("need at least two points")
    if n == 2:
        return np.array([0.5, 0.5]) * h
    w = np.zeros(n)
    if n % 2 == 1:
        w[0] = w[-1] = 1.0
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w *= h / 3.0
    elif n == 4:
        w[:] = np.array([3, 9, 9, 3]) * h / 8.0
    else:
        # Simpson on the first n-4 intervals, 3/8 on the final three.
        w[: n - 3] = simpson_weights(n - 3, h)
        w[n - 4 :] += np.array([3, 9, 9, 3]) * h / 8.0
    return w


def fourier_sum(values, x0, dx, y0, dy, ny, sign=+1):
    """sum_n values[n] * exp(sign*1j*x_n*y_j) on uniform grids.

    x_n = x0 + n*dx over the input samples, y_j = y0 + j*dy for
    j = 0..ny-1.  ``values`` should already carry quadrature weights.
    """
    values = np.asarray(values, dtype=complex)
    n = values.size
    s = 1j * sign
    pre = values * np.exp(s * np.arange(n) * dx * y0)
    if abs(dy) < 1e-300:
        out = np.full(ny, pre.sum(), dtype=complex)
    else:
        out = czt(pre, m=ny, w=np.exp(s * dx * dy), a=1.0 + 0.0j)
    y = y0 + dy * np.arange(ny)
    return out * np.exp(s * x0 * y)


def fourier_sum_direct(values, x, y, sign=+1, chunk=512):
    """Reference path: direct evaluation of sum_n values[n] exp(sign*i*x_n*y_j).

    Accepts arbitrary (non-uniform) y.  Chunked to bound memory.
    """
    values = np.asarray(values, dtype=complex)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = np.empty(y.size, dtype=complex)
    for i in range(0, y.size, chunk):
        yi = y[i : i + chunk]
        out[i : i + chunk] = np.exp(sign * 1j * np.outer(yi, x)) @ values
    return out


def spherical_bessel_sum(coeffs, k, r, order, chunk=256):
    """sum_n coeffs[n] * j_order(k_n * r_m) for each r_m, chunked over r.

    ``coeffs`` should carry quadrature weights and any k-dependent factors.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    k = np.asarray(k, dtype=float)
    r = np.asarray(r, dtype=float)
    out = np.empty(r.size, dtype=complex)
    for i in range(0, r.size, chunk):
        ri = r[i : i + chunk]
        out[i : i + chunk] = spherical_jn(order, np.outer(ri, k)) @ coeffs
    return out
