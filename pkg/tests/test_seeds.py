import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photonloc import (
    RadialGrid,
    ResolutionError,
    forward_transform,
    gaussian_fit_report,
    inverse_transform,
    sampled_seed,
    scale_coordinates,
    tri2_seed,
    truncate_support,
    truncated_gaussian_seed,
)
from photonloc.seeds import evaluate_seed, tri2_envelope, tri2_spectrum_analytic

R0 = 1.0
K0 = 4.0 * np.pi


def test_tri2_envelope_shape():
    assert tri2_envelope(0.0) == pytest.approx(2.0 / 3.0)
    assert tri2_envelope(2.0) == 0.0
    assert tri2_envelope(-2.5) == 0.0
    x = np.linspace(-2, 2, 1001)
    v = tri2_envelope(x)
    assert np.all(v >= 0)
    assert np.allclose(v, v[::-1])


def test_tri2_seed_peak_and_support(tri2):
    assert np.abs(tri2.samples).max() == pytest.approx(1.0)
    assert tri2.samples[0] == 0.0
    assert tri2.samples[-1] == 0.0


def test_spectrum_matches_analytic(tri2, tri2_spec):
    ref = tri2_spectrum_analytic(tri2_spec.k, R0, K0)
    scale = np.abs(ref).max()
    assert np.abs(tri2_spec.values - ref).max() < 1e-7 * scale


def test_roundtrip(tri2, tri2_spec):
    back = inverse_transform(tri2_spec, tri2.grid)
    assert np.abs(back - tri2.samples).max() < 1e-7


def test_plancherel(tri2, tri2_spec):
    a = tri2.grid.weights() @ np.abs(tri2.samples) ** 2
    b = 2.0 * np.pi * (tri2_spec.weights() @ np.abs(tri2_spec.values) ** 2)
    assert b == pytest.approx(a, rel=1e-7)


def test_spectral_interpolant_vanishes_outside_support(tri2_spec):
    # quadrature leakage beyond [0, r0] must be tiny for a smooth seed
    vals = evaluate_seed(tri2_spec, 1.05 * R0, 0.01, 200)
    assert np.abs(vals).max() < 1e-9


def test_tail_fraction_recorded(tri2_spec):
    assert 0.0 <= tri2_spec.tail_fraction < 1e-12


def test_resolution_guard():
    seed = tri2_seed(R0, K0, n_points=33)
    with pytest.raises(ResolutionError):
        forward_transform(seed, k_half=4096.0 * np.pi, tail_tol=1.0)


def test_zero_seed_transform():
    grid = RadialGrid(R0, 257)
    seed = sampled_seed(np.zeros(257), grid, R0)
    spec = forward_transform(seed)
    assert np.all(spec.values == 0)


def test_gaussian_seed_centered():
    seed = truncated_gaussian_seed(R0, K0, R0 / 8.0)
    idx = np.argmax(np.abs(seed.samples))
    assert seed.grid.r[idx] == pytest.approx(R0 / 2.0, abs=seed.grid.spacing)


@given(st.floats(0.3, 0.9))
@settings(max_examples=10, deadline=None)
def test_truncate_support_mass(frac):
    grid = RadialGrid(2.0, 401)
    samples = np.exp(-grid.r) * (1 + 1j)
    seed, lost = truncate_support(samples, grid, frac * 2.0)
    assert 0.0 < lost < 1.0
    assert np.all(seed.samples[grid.r > frac * 2.0] == 0)
    assert seed.r0 == pytest.approx(frac * 2.0)


def test_truncate_rejects_nonfinite():
    grid = RadialGrid(1.0, 65)
    bad = np.full(65, np.nan)
    with pytest.raises(ValueError):
        truncate_support(bad, grid, 0.5)


def test_scale_reuses_samples(tri2):
    scaled = scale_coordinates(tri2, 2.0)
    assert scaled.r0 == pytest.approx(0.5)
    assert scaled.k0 == pytest.approx(2.0 * K0)
    assert scaled.samples is tri2.samples


def test_gaussian_fit_windows(tri2):
    rep = gaussian_fit_report(tri2)
    assert 0.007 <= rep.max_deviation_fraction <= 0.013
    assert 0.135 * R0 <= rep.sigma_fit <= 0.165 * R0
