"""Named invariant checks spanning every module.

Each check returns a CheckResult with the measured value and its tolerance;
the CLI renders them and maps any failure to a nonzero exit code.  Checks
use reduced grids so the whole suite stays interactive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bounds, closedform, fields, fock, modes, seeds
from .errors import PhotonlocError


@dataclass(frozen=True)
class CheckResult:
    name: str
    measured: float
    tolerance: float
    passed: bool
    detail: str = ""


def _result(name, measured, tolerance, detail="", larger_is_better=False):
    ok = measured >= tolerance if larger_is_better else measured <= tolerance
    return CheckResult(name, float(measured), float(tolerance), bool(ok), detail)


def check_orthogonalization(rng=None) -> list[CheckResult]:
    rng = rng or np.random.default_rng(7)
    worst_beta, worst_eta = 0.0, 0.0
    for _ in range(5):
        r0 = float(rng.uniform(0.5, 2.0))
        k0 = float(rng.uniform(3.0, 8.0)) * np.pi / r0
        grid = seeds.RadialGrid(r0, 2049)
        env = np.exp(-((grid.r / r0 - rng.uniform(0.3, 0.7)) ** 2) / 0.05)
        samples = env * np.exp(1j * k0 * grid.r) * (1.0 + 0.3j * np.sin(3 * grid.r / r0))
        seed = seeds.sampled_seed(samples, grid, r0, k0=k0)
        # identities are exact properties of the computed integrals, so a
        # fixed spectral width suffices even for rough random envelopes
        spec = seeds.forward_transform(seed, k_half=4.0 * k0, tail_tol=1.0)
        _, diag = modes.orthogonalize(spec)
        beta_res = abs(diag.beta**2 * np.conj(diag.I) - diag.beta + diag.I)
        eta_res = abs(
            (diag.eta_after - diag.eta_before)
            + (1.0 - diag.J) * (1.0 - 2.0 * diag.eta_before) / (2.0 * diag.J)
        )
        worst_beta = max(worst_beta, beta_res)
        worst_eta = max(worst_eta, eta_res)
    return [
        _result("beta quadratic residual", worst_beta, 1e-12),
        _result("eta improvement identity", worst_eta, 1e-10),
    ]


def check_scale_invariance() -> CheckResult:
    seed = seeds.tri2_seed(1.0, 4.0 * np.pi)
    base = modes.build_mode_pair(seed)
    worst = 0.0
    for s in (0.5, 2.0):
        scaled = modes.build_mode_pair(seeds.scale_coordinates(seed, s))
        worst = max(worst, abs(scaled.eta - base.eta), abs(scaled.gamma - base.gamma))
    return _result("scale invariance of eta and gamma", worst, 1e-10)


def check_wave_convergence(grid_points: int = 801) -> CheckResult:
    seed = seeds.tri2_seed(1.0, 4.0 * np.pi)
    try:
        spec = seeds.forward_transform(seed, k_half=40.0 * np.pi, tail_tol=1.0, n_points=2**12 + 1)
        coarse = fields.wave_residual(spec, 0.5, seeds.RadialGrid(3.0, grid_points))
        fine = fields.wave_residual(spec, 0.5, seeds.RadialGrid(3.0, 2 * grid_points - 1))
    except PhotonlocError as exc:
        return CheckResult("wave-equation residual halving ratio", float("nan"), 0.0, False, str(exc))
    ratio = coarse / fine if fine > 0 else float("inf")
    ok = 3.0 <= ratio <= 5.0
    return CheckResult(
        "wave-equation residual halving ratio",
        float(ratio),
        4.0,
        ok,
        "expected ratio in [3, 5] (second-order convergence)",
    )


def check_oracle_fidelity() -> CheckResult:
    gamma, n = 0.3, 1
    diff = abs(
        closedform.fidelity_n(n, closedform.SqueezeParams(gamma))
        - fock.fidelity_oracle(gamma, n)
    )
    return _result("closed-form fidelity vs oracle", diff, 1e-10)


def check_number_calibration() -> CheckResult:
    worst = 0.0
    for gamma in (0.1, 0.3):
        for n in (0, 1, 2):
            closed = closedform.number_expectation(n, closedform.SqueezeParams(gamma))
            oracle = fock.observables(fock.localized_state(gamma, n))["N"]
            worst = max(worst, abs(closed - oracle))
    return _result(
        "number expectation vs oracle",
        worst,
        1e-8,
        "oracle values are authoritative on failure",
    )


def check_causal_support() -> CheckResult:
    r0 = 1.0
    mp = modes.build_mode_pair(seeds.tri2_seed(r0, 4.0 * np.pi / r0))
    grid = seeds.RadialGrid(2.5, 501)
    worst = 0.0
    for t in (0.0, 0.5 * r0):
        prof = fields.esq_profile(mp, 1, t, grid)
        inside = (grid.r >= t) & (grid.r <= r0 + t)
        outside = np.abs(prof[~inside]).max() / np.abs(prof).max()
        worst = max(worst, outside)
    return _result("energy density outside the causal shell", worst, 1e-8)


def check_esq_reconstruction() -> CheckResult:
    r0, n, grid = 1.0, 1, seeds.RadialGrid(1.6, 201)
    mp = modes.build_mode_pair(seeds.tri2_seed(r0, 4.0 * np.pi / r0))
    prof = fields.dalembert_f(mp.spectrum, 0.3, grid)
    closed = fields.esq_profile(mp, n, 0.3, grid)
    state = fock.localized_state(mp.gamma, n)
    recon = fock.esq_reconstruction(state, prof.E1, -prof.E2)
    rel = np.abs(closed - recon).max() / np.abs(closed).max()
    return _result("energy density closed form vs oracle", rel, 1e-6)


def check_squeezer_factorization() -> CheckResult:
    gamma, cutoff, block = 0.4, 32, 10
    a = fock.squeeze_operator(gamma, cutoff)
    b = fock.squeeze_operator_disentangled(gamma, cutoff)
    diff = np.abs(a - b).reshape(cutoff, cutoff, cutoff, cutoff)[
        :block, :block, :block, :block
    ].max()
    return _result("squeezer factorization agreement", diff, 1e-9)


def check_polylog_switch() -> CheckResult:
    x = 0.9
    direct = sum(np.sqrt(i) * x**i for i in range(1, 4000))
    diff = abs(closedform.polylog_neg_half(x) - direct) / direct
    return _result("polylog branch agreement at the switch point", diff, 1e-10)


def check_gaussian_fit() -> CheckResult:
    rep = seeds.gaussian_fit_report(seeds.tri2_seed(1.0, 4.0 * np.pi))
    ok = 0.007 <= rep.max_deviation_fraction <= 0.013 and 0.135 <= rep.sigma_fit <= 0.165
    return CheckResult(
        "tri*tri Gaussian-fit deviation and width windows",
        float(rep.max_deviation_fraction),
        0.013,
        ok,
        f"sigma_fit={rep.sigma_fit:.5f} (window [0.135, 0.165] r0)",
    )


def check_bounds_ordering() -> CheckResult:
    photon = bounds.gaussian_photon(20.0, 1.0, 2.0)
    rep = bounds.bound_report(photon, 2.0)
    margin = rep.F_upper - rep.F_lower
    ok = 0.0 <= rep.F_lower <= rep.F_upper <= 1.0 and abs(rep.nu) <= rep.mu * (1 + 1e-9)
    return CheckResult(
        "bound ordering F_lower <= F_upper <= 1",
        float(margin),
        0.0,
        ok,
        f"F_lower={rep.F_lower:.6f} F_upper={rep.F_upper:.6f}",
    )


def check_cxi_consistency() -> CheckResult:
    photon = bounds.gaussian_photon(20.0, 1.0, 1.5)
    return _result(
        "coupling identity vs tail integrals", bounds.consistency_c_xi(photon, 1.5), 1e-8
    )


def run_all(grid_points: int = 801) -> list[CheckResult]:
    results = []
    results.extend(check_orthogonalization())
    results.append(check_scale_invariance())
    results.append(check_wave_convergence(grid_points))
    results.append(check_oracle_fidelity())
    results.append(check_number_calibration())
    results.append(check_causal_support())
    results.append(check_esq_reconstruction())
    results.append(check_squeezer_factorization())
    results.append(check_polylog_switch())
    results.append(check_gaussian_fit())
    results.append(check_bounds_ordering())
    results.append(check_cxi_consistency())
    return results


def render(results: list[CheckResult]) -> str:
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"[{status}] {res.name}: measured {res.measured:.6g} (tolerance {res.tolerance:.6g})"
        if res.detail:
            line += f" ({res.detail})"
        lines.append(line)
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines)
