import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photonloc.quadrature import (
    fourier_sum,
    fourier_sum_direct,
    simpson_weights,
    spherical_bessel_sum,
)


@given(st.integers(min_value=2, max_value=400), st.floats(0.01, 10.0))
@settings(max_examples=60, deadline=None)
def test_weights_sum_to_interval_length(n, h):
    w = simpson_weights(n, h)
    assert w.sum() == pytest.approx((n - 1) * h, rel=1e-12)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 11, 16, 101, 256])
def test_cubics_integrated_exactly(n):
    h = 0.37
    x = np.arange(n) * h
    w = simpson_weights(n, h)
    for p in range(4):
        exact = x[-1] ** (p + 1) / (p + 1)
        assert w @ x**p == pytest.approx(exact, rel=1e-12, abs=1e-14)


def test_two_points_is_trapezoid():
    assert np.allclose(simpson_weights(2, 2.0), [1.0, 1.0])


def test_weights_reject_single_point():
    with pytest.raises(ValueError):
        simpson_weights(1, 0.1)


def test_fourier_sum_matches_direct():
    rng = np.random.default_rng(0)
    n, m = 257, 99
    vals = rng.normal(size=n) + 1j * rng.normal(size=n)
    x0, dx = -3.0, 0.05
    y0, dy = -1.0, 0.037
    x = x0 + dx * np.arange(n)
    y = y0 + dy * np.arange(m)
    for sign in (+1, -1):
        fast = fourier_sum(vals, x0, dx, y0, dy, m, sign=sign)
        ref = fourier_sum_direct(vals, x, y, sign=sign)
        assert np.abs(fast - ref).max() < 1e-12 * np.abs(ref).max()


def test_fourier_sum_zero_step_broadcasts():
    vals = np.ones(17)
    out = fourier_sum(vals, 0.0, 0.1, 0.5, 0.0, 5, sign=+1)
    assert np.allclose(out, out[0])


def test_bessel_sum_matches_loop():
    rng = np.random.default_rng(1)
    k = np.linspace(0.0, 12.0, 301)
    c = rng.normal(size=k.size) + 1j * rng.normal(size=k.size)
    r = np.linspace(0.0, 5.0, 400)
    from scipy.special import spherical_jn

    for order in (0, 1):
        fast = spherical_bessel_sum(c, k, r, order, chunk=64)
        ref = np.array([np.sum(c * spherical_jn(order, k * ri)) for ri in r])
        assert np.abs(fast - ref).max() < 1e-12 * max(np.abs(ref).max(), 1.0)
