"""Command-line surface: figure-data pipelines, oracle checks, validation.

Exit codes: 0 success, 1 validation/check failure, 2 usage error.  Options
may also come from a plain-text key=value config file; explicit flags win.
"""

from __future__ import annotations

import os
import sys

import click
import numpy as np

from . import bounds as bounds_mod
from . import reports, seeds, validate
from .errors import PhotonlocError


def parse_range(triple: str) -> np.ndarray:
    """start:stop:count -> inclusive uniform grid."""
    try:
        start, stop, count = triple.split(":")
        start, stop, count = float(start), float(stop), int(count)
    except ValueError as exc:
        raise click.BadParameter(f"expected start:stop:count, got {triple!r}") from exc
    if count < 1:
        raise click.BadParameter("count must be at least 1")
    return np.linspace(start, stop, count)


def load_config(path: str | None) -> dict:
    """Plain key=value lines; blank lines and '#' comments ignored."""
    if not path:
        return {}
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise click.BadParameter(f"{path}:{lineno}: expected key=value")
            key, val = line.split("=", 1)
            values[key.strip().replace("-", "_")] = val.strip()
    return values


def merged(ctx: click.Context, config: str | None, **flags) -> dict:
    """Flag values, with config-file entries filling in unset flags."""
    cfg = load_config(config)
    out = {}
    for key, value in flags.items():
        from_default = ctx.get_parameter_source(key) is click.core.ParameterSource.DEFAULT
        out[key] = cfg[key] if key in cfg and from_default else value
    return out


def _seed_from(kind: str, r0: float, k0: float, sigma: float | None):
    if kind == "tri2":
        return seeds.tri2_seed(r0, k0)
    if kind == "gaussian":
        return seeds.truncated_gaussian_seed(r0, k0, sigma if sigma else r0 / 8.0)
    if kind == "zero":
        grid = seeds.RadialGrid(r0, 1025)
        return seeds.sampled_seed(np.zeros(1025), grid, r0, k0=k0)
    raise click.BadParameter(f"unknown seed kind {kind!r}")


@click.group()
@click.option("--threads", type=int, default=None, help="Worker thread count.")
def main(threads):
    """Strictly localized photon-like states: figure data and checks."""
    if threads is not None:
        if threads < 1:
            raise click.BadParameter("threads must be positive")
        os.environ["PHOTONLOC_THREADS"] = str(threads)


@main.command("seed-show")
@click.option("--config", type=click.Path(exists=True), default=None)
@click.option("--kind", default="tri2", show_default=True)
@click.option("--r0", type=float, default=1.0, show_default=True)
@click.option("--k0", type=float, default=4.0 * np.pi, show_default=True)
@click.option("--sigma", type=float, default=None, help="Gaussian width (defaults to r0/8).")
@click.option("--output", type=click.Path(), default="seed.csv", show_default=True)
@click.option("--plot", is_flag=True, help="Also render a PNG next to the CSV.")
@click.pass_context
def seed_show(ctx, config, kind, r0, k0, sigma, output, plot):
    """Radial samples of a seed function."""
    cfg = merged(ctx, config, kind=kind, r0=r0, k0=k0, sigma=sigma, output=output)
    seed = _seed_from(str(cfg["kind"]), float(cfg["r0"]), float(cfg["k0"]),
                      float(cfg["sigma"]) if cfg.get("sigma") not in (None, "") else None)
    header, rows, comments = reports.seed_show_rows(seed)
    reports.write_csv(cfg["output"], header, rows, comments)
    click.echo(f"wrote {cfg['output']}")
    if plot:
        from .plotting import plot_seed

        click.echo(f"wrote {plot_seed(rows, _png_path(cfg['output']))}")


@main.command("field-profile")
@click.option("--config", type=click.Path(exists=True), default=None)
@click.option("--kind", default="tri2", show_default=True)
@click.option("--r0", type=float, default=1.0, show_default=True)
@click.option("--k0", type=float, default=4.0 * np.pi, show_default=True)
@click.option("--sigma", type=float, default=None)
@click.option("--photons", "-n", type=int, default=1, show_default=True)
@click.option("--times", default=None, help="Comma-separated times (default 0..r0 in quarters).")
@click.option("--grid-points", type=int, default=1001, show_default=True)
@click.option("--output-prefix", default="field", show_default=True)
@click.option("--plot", is_flag=True)
@click.pass_context
def field_profile(ctx, config, kind, r0, k0, sigma, photons, times, grid_points, output_prefix, plot):
    """Energy-density profiles, one CSV per time slice."""
    cfg = merged(ctx, config, kind=kind, r0=r0, k0=k0, sigma=sigma, photons=photons,
                 times=times, grid_points=grid_points, output_prefix=output_prefix)
    r0 = float(cfg["r0"])
    if cfg.get("times"):
        t_values = [float(t) for t in str(cfg["times"]).split(",")]
    else:
        t_values = [f * r0 for f in (0.0, 0.25, 0.5, 0.75, 1.0)]
    seed = _seed_from(str(cfg["kind"]), r0, float(cfg["k0"]),
                      float(cfg["sigma"]) if cfg.get("sigma") not in (None, "") else None)
    grid = seeds.RadialGrid(r0 + max(t_values) + 0.5 * r0, int(cfg["grid_points"]))
    slices = []
    try:
        for i, t in enumerate(t_values):
            header, rows, comments = reports.field_profile_rows(
                seed, int(cfg["photons"]), t, grid
            )
            path = f"{cfg['output_prefix']}_t{i}.csv"
            reports.write_csv(path, header, rows, comments)
            click.echo(f"wrote {path}")
            slices.append((t, rows))
    except PhotonlocError as exc:
        raise click.ClickException(str(exc)) from exc
    if plot:
        from .plotting import plot_field_profiles

        path = f"{cfg['output_prefix']}.png"
        click.echo(f"wrote {plot_field_profiles(slices, path)}")


@main.command("fidelity-curve")
@click.option("--config", type=click.Path(exists=True), default=None)
@click.option("--r0", type=float, default=1.0, show_default=True)
@click.option("--carriers", default="12.566:75.398:11", show_default=True,
              help="k0 sweep as start:stop:count.")
@click.option("--sigma", type=float, default=None, help="Gaussian width (defaults to r0/8).")
@click.option("--kinds", default="tri2,gaussian", show_default=True)
@click.option("--analytic/--no-analytic", default=True, show_default=True)
@click.option("--output", type=click.Path(), default="fidelity_curve.csv", show_default=True)
@click.option("--plot", is_flag=True)
@click.pass_context
def fidelity_curve(ctx, config, r0, carriers, sigma, kinds, analytic, output, plot):
    """Infidelity versus effective carrier for the seed families."""
    cfg = merged(ctx, config, r0=r0, carriers=carriers, sigma=sigma, kinds=kinds,
                 analytic=analytic, output=output)
    r0 = float(cfg["r0"])
    k0_values = parse_range(str(cfg["carriers"]))
    sigma = float(cfg["sigma"]) if cfg.get("sigma") not in (None, "") else r0 / 8.0
    points, skipped = [], []
    for kind in str(cfg["kinds"]).split(","):
        kind = kind.strip()
        pts, skip = reports.fidelity_curve_points(
            kind, r0, k0_values, sigma=sigma,
            include_analytic=cfg["analytic"] in (True, "true", "1"),
        )
        points.extend(pts)
        skipped.extend(skip)
    header, rows, comments = reports.fidelity_curve_rows(points, skipped)
    comments.append(f"r0={r0:.17g} sigma={sigma:.17g} carriers={cfg['carriers']}")
    reports.write_csv(cfg["output"], header, rows, comments)
    click.echo(f"wrote {cfg['output']}")
    if plot:
        from .plotting import plot_fidelity_curve

        click.echo(f"wrote {plot_fidelity_curve(points, _png_path(cfg['output']))}")


@main.command("bounds-sweep")
@click.option("--config", type=click.Path(exists=True), default=None)
@click.option("--k0sigma", type=float, default=20.0, show_default=True)
@click.option("--ratios", default="0.1:4:80", show_default=True,
              help="r0/sigma sweep as start:stop:count.")
@click.option("--output", type=click.Path(), default="bounds.csv", show_default=True)
@click.option("--plot", is_flag=True)
@click.pass_context
def bounds_sweep(ctx, config, k0sigma, ratios, output, plot):
    """Upper and lower localization-fidelity bounds for a Gaussian photon."""
    cfg = merged(ctx, config, k0sigma=k0sigma, ratios=ratios, output=output)
    ratio_values = parse_range(str(cfg["ratios"]))
    reps = bounds_mod.sweep_bounds(float(cfg["k0sigma"]), ratio_values)
    header, rows, comments = reports.bounds_sweep_rows(reps, sigma=1.0)
    comments.append(f"k0sigma={float(cfg['k0sigma']):.17g} ratios={cfg['ratios']}")
    reports.write_csv(cfg["output"], header, rows, comments)
    click.echo(f"wrote {cfg['output']}")
    if plot:
        from .plotting import plot_bounds

        click.echo(f"wrote {plot_bounds(rows, _png_path(cfg['output']))}")


@main.command("oracle-check")
@click.option("--gamma", type=float, default=0.3, show_default=True)
@click.option("--photons", "-n", type=int, default=1, show_default=True)
def oracle_check(gamma, photons):
    """Closed-form observables against the Fock-space oracle."""
    report = reports.oracle_check_report(gamma, photons)
    click.echo(report)
    for line in report.splitlines():
        if "|difference|" in line and float(line.split("=")[1]) > 1e-8:
            sys.exit(1)


@main.command("validate")
@click.option("--grid-points", type=int, default=801, show_default=True)
def validate_cmd(grid_points):
    """Run the full invariant suite; nonzero exit on any failure."""
    results = validate.run_all(grid_points=grid_points)
    click.echo(validate.render(results))
    if any(not r.passed for r in results):
        sys.exit(1)


def _png_path(csv_path: str) -> str:
    base, _ = os.path.splitext(csv_path)
    return base + ".png"


if __name__ == "__main__":
    main()
