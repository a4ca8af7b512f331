import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photonloc import (
    DegenerateSeedError,
    RadialGrid,
    build_mode_pair,
    effective_carrier,
    eta_from_spectrum,
    eta_gaussian_analytic,
    forward_transform,
    orthogonalize,
    sampled_seed,
    tri2_seed,
)
from photonloc.modes import cross_overlap, reduced_norms

R0 = 1.0
K0 = 4.0 * np.pi


def random_spectrum_seed(rng):
    r0 = float(rng.uniform(0.5, 2.0))
    k0 = float(rng.uniform(3.0, 8.0)) * np.pi / r0
    grid = RadialGrid(r0, 1025)
    env = np.sin(np.pi * grid.r / r0) ** 2
    wobble = 1.0 + 0.4 * np.sin(3.0 * grid.r / r0) + 0.25j * np.cos(2.0 * grid.r / r0)
    seed = sampled_seed(env * wobble * np.exp(1j * k0 * grid.r), grid, r0, k0=k0)
    return forward_transform(seed, k_half=4.0 * k0, tail_tol=1.0)


def test_mode_pair_invariants(tri2_pair):
    mp = tri2_pair
    assert mp.norm1 == pytest.approx(1.0, abs=1e-12)
    assert mp.norm2 == pytest.approx(1.0, abs=1e-12)
    assert 0.0 <= mp.eta < 0.5
    assert np.tanh(mp.gamma) * mp.C == pytest.approx(1.0, abs=1e-12)
    assert mp.eta == pytest.approx(1.0 / (mp.C**2 + 1.0), abs=1e-12)


def test_orthogonalized_cross_overlap_vanishes(tri2_pair):
    assert abs(cross_overlap(tri2_pair.spectrum)) < 1e-10


def test_eta_relabeling():
    spec = forward_transform(tri2_seed(R0, K0))
    # mirroring reverses the summation order, so demand agreement only to
    # a tight relative tolerance rather than bitwise equality
    assert eta_from_spectrum(spec) == pytest.approx(
        eta_from_spectrum(spec.mirrored()), rel=1e-10
    )


def test_eta_monotone_in_carrier():
    etas = []
    for m in (2.0, 3.0, 4.0, 6.0, 8.0):
        spec = forward_transform(tri2_seed(R0, m * 2.0 * np.pi / R0))
        etas.append(eta_from_spectrum(spec))
    assert all(b <= a for a, b in zip(etas, etas[1:]))


def test_degenerate_seed_raises():
    grid = RadialGrid(R0, 513)
    real_seed = sampled_seed(np.sin(np.pi * grid.r / R0) ** 2, grid, R0)
    spec = forward_transform(real_seed, k_half=64.0 * np.pi, tail_tol=1.0)
    with pytest.raises(DegenerateSeedError):
        orthogonalize(spec)


@given(st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=12, deadline=None)
def test_orthogonalization_identities(seed_int):
    spec = random_spectrum_seed(np.random.default_rng(seed_int))
    pos, neg = reduced_norms(spec)
    if neg > pos:
        spec = spec.mirrored()
    _, diag = orthogonalize(spec)
    beta_res = abs(diag.beta**2 * np.conj(diag.I) - diag.beta + diag.I)
    assert beta_res < 1e-12
    assert diag.eta_after <= diag.eta_before + 1e-14
    identity = (diag.eta_after - diag.eta_before) + (1.0 - diag.J) * (
        1.0 - 2.0 * diag.eta_before
    ) / (2.0 * diag.J)
    assert abs(identity) < 1e-10


def test_eta_gaussian_analytic_values():
    assert eta_gaussian_analytic(0.0) == pytest.approx(0.5)
    assert eta_gaussian_analytic(1.0) == pytest.approx(0.0239, abs=5e-4)
    assert eta_gaussian_analytic(6.0) < 1e-10


def test_effective_carrier_above_nominal(tri2_spec):
    # the k-weighting pushes the mean above the nominal carrier
    k_eff = effective_carrier(tri2_spec)
    assert K0 < k_eff < 2.0 * K0


def test_scale_invariance(tri2_pair):
    from photonloc import scale_coordinates

    seed = tri2_seed(R0, K0)
    for s in (0.5, 2.0):
        mp = build_mode_pair(scale_coordinates(seed, s))
        assert abs(mp.eta - tri2_pair.eta) < 1e-10
        assert abs(mp.gamma - tri2_pair.gamma) < 1e-10
