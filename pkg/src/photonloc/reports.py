"""Deterministic CSV emission and the figure-data pipelines.

All numeric output is formatted with 17 significant digits so identical
configurations produce byte-identical files.  Effective parameters are
recorded as '#'-prefixed comment lines ahead of the header row.
"""

from __future__ import annotations

import numpy as np

from .bounds import BoundReport
from .closedform import fidelity
from .errors import DegenerateSeedError
from .fields import esq_profile
from .modes import build_mode_pair, effective_carrier, eta_from_spectrum, eta_gaussian_analytic
from .parallel import parallel_map
from .seeds import RadialGrid, SeedFunction, forward_transform, tri2_seed, truncated_gaussian_seed

FLOAT_FORMAT = "%.17g"


def format_value(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return FLOAT_FORMAT % float(value)


def write_csv(path, header, rows, comments=()) -> None:
    """Write rows with a header line; '\\n' endings, '#' comments first."""
    lines = [f"# {c}" for c in comments]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def seed_show_rows(seed: SeedFunction):
    """(header, rows, comments) for a seed's radial samples."""
    header = ["r", "re_g", "im_g", "envelope"]
    r = seed.grid.r
    rows = [
        (r[i], seed.samples[i].real, seed.samples[i].imag, abs(seed.samples[i]))
        for i in range(seed.grid.n_points)
    ]
    comments = [
        f"kind={seed.kind} r0={FLOAT_FORMAT % seed.r0} k0={FLOAT_FORMAT % seed.k0}",
        f"n_points={seed.grid.n_points}",
    ]
    return header, rows, comments


def field_profile_rows(seed: SeedFunction, n: int, t: float, grid: RadialGrid, **mode_kwargs):
    """(header, rows, comments) for one energy-density time slice."""
    mp = build_mode_pair(seed, **mode_kwargs)
    values = esq_profile(mp, n, t, grid)
    header = ["r", "esq_over_sin2theta"]
    r = grid.r
    rows = [(r[i], values[i]) for i in range(grid.n_points)]
    comments = [
        f"t={FLOAT_FORMAT % t} n={n} kind={seed.kind} r0={FLOAT_FORMAT % seed.r0} "
        f"k0={FLOAT_FORMAT % seed.k0}",
        f"gamma={FLOAT_FORMAT % mp.gamma} eta={FLOAT_FORMAT % mp.eta}",
        f"grid: r_max={FLOAT_FORMAT % grid.r_max} n_points={grid.n_points}",
    ]
    return header, rows, comments


def fidelity_curve_points(
    kind: str,
    r0: float,
    k0_values,
    sigma: float | None = None,
    include_analytic: bool = True,
):
    """Localization infidelity versus effective carrier for one seed family.

    Returns (points, skipped): each point is a dict with kind, x (effective
    carrier times r0 over 2 pi), one_minus_F, and eta.  The eta here is the
    raw negative-wavenumber weight of the seed's spectrum (no
    orthogonalization), which is what the infidelity curves track; analytic
    companion rows (truncation ignored) are evaluated at the same nominal
    carrier.  Degenerate or unusable carriers are skipped and reported.
    """
    if kind not in ("tri2", "gaussian"):
        raise ValueError("kind must be 'tri2' or 'gaussian'")
    if kind == "gaussian" and (sigma is None or sigma <= 0):
        raise ValueError("gaussian kind requires a positive sigma")

    def one(k0: float):
        if kind == "tri2":
            seed = tri2_seed(r0, k0)
            spec = forward_transform(seed)
        else:
            seed = truncated_gaussian_seed(r0, k0, sigma)
            # edge jumps give 1/k spectral tails; fix the half-width instead
            # of letting the tail criterion grow it past the seed resolution
            spec = forward_transform(seed, k_half=2.0 * k0 + 32.0 / r0, tail_tol=1.0)
        eta = eta_from_spectrum(spec)
        if eta >= 0.5 - 1e-9:
            raise DegenerateSeedError("carrier too small: eta at the 1/2 endpoint")
        x = effective_carrier(spec) * r0 / (2.0 * np.pi)
        return {"kind": kind, "x": x, "one_minus_F": 1.0 - fidelity(eta), "eta": eta}

    points, skipped = [], []
    results = parallel_map(lambda k0: _try_point(one, k0), list(k0_values))
    for k0, res in zip(k0_values, results):
        if res is None:
            skipped.append(float(k0))
        else:
            points.append(res)
            if kind == "gaussian" and include_analytic:
                eta_a = eta_gaussian_analytic(k0 * sigma)
                points.append(
                    {
                        "kind": "gaussian-analytic",
                        "x": res["x"],
                        "one_minus_F": 1.0 - fidelity(eta_a),
                        "eta": eta_a,
                    }
                )
    return points, skipped


def _try_point(fn, k0):
    try:
        return fn(float(k0))
    except (DegenerateSeedError, ValueError):
        return None


def fidelity_curve_rows(points, skipped=()):
    header = ["kind", "k0eff_r0_over_2pi", "one_minus_F", "eta"]
    rows = [(p["kind"], p["x"], p["one_minus_F"], p["eta"]) for p in points]
    comments = [f"skipped degenerate carrier k0={FLOAT_FORMAT % k}" for k in skipped]
    return header, rows, comments


def bounds_sweep_rows(reports: list[BoundReport], sigma: float):
    header = [
        "r0_over_sigma",
        "one_minus_F_upper",
        "one_minus_F_lower",
        "mu",
        "abs_nu",
        "eta_trunc",
        "overlap",
    ]
    rows = [
        (
            rep.r0 / sigma,
            1.0 - rep.F_upper,
            1.0 - rep.F_lower,
            rep.mu,
            abs(rep.nu),
            rep.eta_trunc,
            rep.overlap,
        )
        for rep in reports
    ]
    comments = [
        f"radial tail window r_max={FLOAT_FORMAT % max(rep.r_max for rep in reports)}"
    ] if reports else []
    return header, rows, comments


def oracle_check_report(gamma: float, n: int) -> str:
    """Plain-text comparison of closed forms against the Fock-space oracle."""
    from .closedform import SqueezeParams, fidelity_n, number_expectation
    from .fock import default_cutoff, fidelity_oracle, localized_state, observables

    params = SqueezeParams(gamma)
    cutoff = default_cutoff(gamma, n)
    f_closed = fidelity_n(n, params)
    f_oracle = fidelity_oracle(gamma, n, cutoff)
    n_closed = number_expectation(n, params)
    n_oracle = observables(localized_state(gamma, n, cutoff))["N"]
    lines = [
        "oracle check",
        f"  gamma   = {FLOAT_FORMAT % gamma}",
        f"  n       = {n}",
        f"  cutoff  = {cutoff}",
        f"  fidelity closed-form = {FLOAT_FORMAT % f_closed}",
        f"  fidelity oracle      = {FLOAT_FORMAT % f_oracle}",
        f"  |difference|         = {FLOAT_FORMAT % abs(f_closed - f_oracle)}",
        f"  <N> closed-form      = {FLOAT_FORMAT % n_closed}",
        f"  <N> oracle           = {FLOAT_FORMAT % n_oracle}",
        f"  |difference|         = {FLOAT_FORMAT % abs(n_closed - n_oracle)}",
    ]
    return "\n".join(lines)
