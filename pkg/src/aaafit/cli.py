"""Batch command-line surface.

Subcommands fit data files, refine to minimax, report poles and zeros, solve
Dirichlet problems, and emit plot-ready grids.  Exit codes form a contract
for shell pipelines: 0 converged, 2 stopped at the degree cap, 1 invalid
input.  All emitted CSV uses decimal points and repr-precision floats, so
artifacts diff cleanly across runs.
"""

from __future__ import annotations

import sys
import time

import click
import numpy as np

from . import io as aio
from .aaa import aaa_fit
from .barycentric import BarycentricRational
from .continuum import fit_interval
from .geometry import BoundaryCurve, lobed_curve
from .laplace import solve_dirichlet, solve_dirichlet_samples
from .lawson import lawson_refine, winding_number
from .spectra import pole_zero_report, split_poles
from .special import zeta_truncated
from .validation import validate_samples

# reference values the zeta demo compares against (first two nontrivial
# zeta zeros, truncated)
_ZETA_ZERO_1 = 0.5 + 14.134725j
_ZETA_ZERO_2 = 0.5 + 21.022040j


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


@click.group()
def main() -> None:
    """Rational approximation toolkit: fitting, minimax refinement,
    pole/zero reports, phase portraits, and Laplace solves."""


@main.command("fit")
@click.argument("input_csv", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              help="Write the approximant JSON here.")
@click.option("--tol", default=1e-13, show_default=True,
              help="Relative error tolerance.")
@click.option("--max-degree", default=99, show_default=True,
              help="Degree cap (support points minus one).")
def cmd_fit(input_csv, output, tol, max_degree) -> None:
    """Fit a rational function to samples from a CSV file.

    Expects columns re(z), im(z), re(f), im(f); a header row is optional.
    Prints a per-iteration error table; exits 0 on convergence, 2 when the
    degree cap stopped the iteration, 1 on invalid input.
    """
    try:
        Z, F = aio.read_samples_csv(input_csv)
        Z, F = validate_samples(Z, F)
    except ValueError as exc:
        _fail(str(exc))
    if len(Z) == 1:
        approx = BarycentricRational(Z, F, [1.0])
        click.echo("iter  m  max_error")
        click.echo("   1  1  0.0")
        click.echo("converged: degree 0, final error 0.0")
        if output:
            aio.save_approximant(approx, output)
        sys.exit(0)
    result = aaa_fit(Z, F, rel_tol=tol, max_support=max_degree + 1)
    click.echo("iter  m  max_error")
    for k, err in enumerate(result.error_history, start=1):
        click.echo(f"{k:4d} {k:3d} {err!r}")
    status = "converged" if result.converged else "degree-capped"
    click.echo(f"{status}: degree {result.approximant.degree}, "
               f"final error {result.final_error!r}")
    if output:
        aio.save_approximant(result.approximant, output)
    sys.exit(0 if result.converged else 2)


@main.command("minimax")
@click.argument("input_csv", type=click.Path(exists=True, dir_okay=False))
@click.option("--degree", required=True, type=int, help="Fixed degree n.")
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              help="Write the refined approximant JSON here.")
@click.option("--error-curve", "curve_out", type=click.Path(dir_okay=False),
              help="Write the per-sample error curve CSV here.")
@click.option("--max-iters", default=20, show_default=True)
def cmd_minimax(input_csv, degree, output, curve_out, max_iters) -> None:
    """Refine a fixed-degree fit toward the minimax approximation.

    Emits per-sample rows (arg z, |e|, re e, im e) along the sample contour
    plus a final winding-number summary line.
    """
    try:
        Z, F = aio.read_samples_csv(input_csv)
        Z, F = validate_samples(Z, F)
        start = aaa_fit(Z, F, rel_tol=1e-15, max_support=degree + 1,
                        cleanup_spurious=False)
        refined, _ = lawson_refine(Z, F, start.approximant, max_iters=max_iters)
    except ValueError as exc:
        _fail(str(exc))
    e = F - refined(Z)
    rows = [(float(np.angle(z)), float(abs(ev)), float(ev.real), float(ev.imag))
            for z, ev in zip(Z, e)]
    header = ["arg_z", "abs_e", "re_e", "im_e"]
    if curve_out:
        aio.write_csv(curve_out, header, rows)
    else:
        click.echo(aio.csv_text(header, rows), nl=False)
    if output:
        aio.save_approximant(refined, output)
    try:
        wind = winding_number(e)
        click.echo(f"winding,{wind}")
    except ValueError:
        click.echo("winding,undefined")
    sys.exit(0)


@main.command("polezero")
@click.argument("approx_json", type=click.Path(exists=True, dir_okay=False))
@click.option("--region", type=click.Path(exists=True, dir_okay=False),
              help="Boundary vertex CSV; adds an inside/outside column.")
def cmd_polezero(approx_json, region) -> None:
    """Report poles, zeros and residues of a stored approximant as CSV."""
    try:
        r = aio.load_approximant(approx_json)
        curve = None
        if region:
            curve = BoundaryCurve(aio.read_vertices_csv(region))
    except (ValueError, KeyError) as exc:
        _fail(str(exc))
    report = pole_zero_report(r)
    header = ["kind", "re", "im", "residue_re", "residue_im"]
    if curve is not None:
        header.append("location")
        inside_p, _ = split_poles(report.poles, curve)
        inside_set = set(map(complex, inside_p))
    lines = [",".join(header)]
    for p, res in zip(report.poles, report.residues):
        row = f"pole,{p.real!r},{p.imag!r},{res.real!r},{res.imag!r}"
        if curve is not None:
            row += ",inside" if complex(p) in inside_set else ",outside"
        lines.append(row)
    for zr in report.zeros:
        row = f"zero,{zr.real!r},{zr.imag!r},,"
        if curve is not None:
            loc = bool(curve.contains(np.array([zr]))[0])
            row += ",inside" if loc else ",outside"
        lines.append(row)
    click.echo("\n".join(lines))


def _parse_grid(spec: str):
    parts = spec.split(",")
    if len(parts) != 6:
        raise ValueError("grid spec must be re_min,re_max,im_min,im_max,nx,ny")
    re0, re1, im0, im1 = (float(p) for p in parts[:4])
    nx, ny = int(parts[4]), int(parts[5])
    if not (re0 < re1 and im0 < im1 and nx >= 2 and ny >= 2):
        raise ValueError("grid spec must satisfy re_min<re_max, im_min<im_max, "
                         "nx,ny >= 2")
    return re0, re1, im0, im1, nx, ny


def _grid_points(spec):
    re0, re1, im0, im1, nx, ny = spec
    xs = np.linspace(re0, re1, nx)
    ys = np.linspace(im0, im1, ny)
    X, Y = np.meshgrid(xs, ys)  # row-major: x varies fastest within a row
    return (X + 1j * Y).ravel()


@main.command("phaseportrait")
@click.argument("approx_json", type=click.Path(exists=True, dir_okay=False))
@click.option("--grid", "grid_spec", required=True,
              help="re_min,re_max,im_min,im_max,nx,ny")
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              help="Write the grid CSV here instead of stdout.")
def cmd_phaseportrait(approx_json, grid_spec, output) -> None:
    """Evaluate arg r(z) and log10|r(z)| over a rectangular grid.

    Rows are emitted row-major (real part varying fastest); the modulus
    column carries ``inf`` at poles.
    """
    try:
        r = aio.load_approximant(approx_json)
        spec = _parse_grid(grid_spec)
    except (ValueError, KeyError) as exc:
        _fail(str(exc))
    z = _grid_points(spec)
    vals = r(z)
    with np.errstate(divide="ignore"):
        mod = np.log10(np.abs(vals))
    rows = [(float(p.real), float(p.imag), float(np.angle(v)), float(m))
            for p, v, m in zip(z, vals, mod)]
    header = ["re_z", "im_z", "arg_r", "log10_abs_r"]
    if output:
        aio.write_csv(output, header, rows)
    else:
        click.echo(aio.csv_text(header, rows), nl=False)


def _detect_corners(vertices: np.ndarray, threshold_deg: float = 30.0):
    """Indices where the polyline turns by more than the threshold."""
    prev = np.roll(vertices, 1)
    nxt = np.roll(vertices, -1)
    turn = np.angle((nxt - vertices) / (vertices - prev))
    idx = np.nonzero(np.abs(turn) > np.deg2rad(threshold_deg))[0]
    return idx if len(idx) else None


@main.command("laplace")
@click.argument("geometry_csv", type=click.Path(exists=True, dir_okay=False))
@click.option("--data", "data_spec", default="constant", show_default=True,
              help="Boundary data: constant, re_z2, or csv:FILE with "
                   "columns re,im,value.")
@click.option("--tol", default=1e-10, show_default=True)
@click.option("--poly-degree", default=10, show_default=True)
@click.option("--max-degree", default=249, show_default=True,
              help="Degree cap for the boundary-data fit.")
@click.option("--cluster/--no-cluster", default=None,
              help="Cluster samples toward corners (default: when corners exist).")
@click.option("--n-per-side", default=None, type=int)
@click.option("--corners", default="auto", show_default=True,
              help="'auto', 'none', or comma-separated vertex indices.")
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              help="Write the solution JSON here.")
@click.option("--grid", "grid_spec", default=None,
              help="Also evaluate on re_min,re_max,im_min,im_max,nx,ny.")
@click.option("--grid-output", type=click.Path(dir_okay=False),
              help="Grid CSV path (required with --grid).")
@click.option("--seed", default=0, show_default=True,
              help="Seed for the randomized interior spot check.")
def cmd_laplace(geometry_csv, data_spec, tol, poly_degree, max_degree, cluster,
                n_per_side, corners, output, grid_spec, grid_output, seed) -> None:
    """Solve a Laplace Dirichlet problem on a polyline domain."""
    t0 = time.perf_counter()
    try:
        vertices = aio.read_vertices_csv(geometry_csv)
        if corners == "auto":
            corner_idx = _detect_corners(vertices)
        elif corners == "none":
            corner_idx = None
        else:
            corner_idx = [int(s) for s in corners.split(",")]
        curve = BoundaryCurve(vertices, corner_indices=corner_idx)

        if data_spec.startswith("csv:"):
            rows = np.array(aio._read_numeric_rows(data_spec[4:], 3), dtype=float)
            Zb = rows[:, 0] + 1j * rows[:, 1]
            sol = solve_dirichlet_samples(curve, Zb, rows[:, 2], tol=tol,
                                          poly_degree=poly_degree,
                                          max_support=max_degree + 1)
            hmin, hmax = float(rows[:, 2].min()), float(rows[:, 2].max())
        else:
            if data_spec == "constant":
                def h(z):
                    return np.ones(len(np.atleast_1d(z)))
            elif data_spec == "re_z2":
                def h(z):
                    return (np.atleast_1d(z) ** 2).real
            else:
                raise ValueError(f"unknown data spec: {data_spec!r}")
            sol = solve_dirichlet(curve, h, tol=tol, poly_degree=poly_degree,
                                  n_per_side=n_per_side, cluster=cluster,
                                  max_support=max_degree + 1)
            probe = h(curve.vertices)
            hmin, hmax = float(np.min(probe)), float(np.max(probe))
    except ValueError as exc:
        _fail(str(exc))
    elapsed = time.perf_counter() - t0

    n_ext = len(sol.exterior_poles)
    click.echo(f"poles: {n_ext} exterior in basis, "
               f"{sol.n_interior_discarded} interior/near-boundary discarded")
    click.echo(f"boundary error: {sol.boundary_error!r}")
    click.echo(f"training error: {sol.training_error!r}")
    click.echo(f"solve time: {elapsed:.3f}s")

    # randomized interior spot check of the maximum principle
    rng = np.random.default_rng(seed)
    v = curve.vertices
    lo = complex(v.real.min(), v.imag.min())
    hi = complex(v.real.max(), v.imag.max())
    cand = (rng.uniform(lo.real, hi.real, 4000)
            + 1j * rng.uniform(lo.imag, hi.imag, 4000))
    inner = cand[curve.contains(cand)][:500]
    if len(inner):
        u = sol.evaluate(inner)
        margin = 2.0 * max(sol.boundary_error, 1e-15)
        ok = (u.min() >= hmin - margin) and (u.max() <= hmax + margin)
        click.echo(f"interior range [{u.min()!r}, {u.max()!r}] vs boundary "
                   f"[{hmin!r}, {hmax!r}]: "
                   f"{'consistent' if ok else 'VIOLATES maximum principle'}")

    if output:
        aio.save_solution(sol, output)
    if grid_spec:
        if not grid_output:
            _fail("--grid requires --grid-output")
        try:
            z = _grid_points(_parse_grid(grid_spec))
        except ValueError as exc:
            _fail(str(exc))
        u = sol.evaluate(z)
        inside = curve.contains(z)
        rows = [(float(p.real), float(p.imag), float(val), int(flag))
                for p, val, flag in zip(z, u, inside)]
        aio.write_csv(grid_output, ["re_z", "im_z", "u", "inside"], rows)


@main.command("zeta-demo")
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              help="Write the approximant JSON here.")
@click.option("--n-samples", default=100, show_default=True)
def cmd_zeta_demo(output, n_samples) -> None:
    """Fit the truncated zeta sum on the segment 4-50i .. 4+50i.

    Prints the recovered degree, the pole near z=1, and the first two
    upper-half-plane zeros inside the portrait window compared against the
    zeta reference zeros.
    """
    t0 = time.perf_counter()
    Z = np.linspace(4 - 50j, 4 + 50j, n_samples)
    F = zeta_truncated(Z)
    result = aaa_fit(Z, F)
    elapsed = time.perf_counter() - t0
    r = result.approximant
    report = pole_zero_report(r)
    click.echo(f"degree {r.degree}, fit error {result.final_error!r}, "
               f"time {elapsed:.3f}s")
    pole_near_1 = report.poles[np.argmin(np.abs(report.poles - 1.0))]
    click.echo(f"pole near 1: {pole_near_1!r} (|p-1| = {abs(pole_near_1 - 1):.2e})")
    window = report.zeros[(report.zeros.imag > 1e-3)
                          & (report.zeros.real >= 0.0)
                          & (report.zeros.real <= 4.0)]
    # exclude pole-zero doublet artifacts
    keep = [zr for zr in window
            if not len(report.poles) or np.min(np.abs(report.poles - zr)) > 1e-6]
    keep = np.array(sorted(keep, key=lambda zz: zz.imag))
    for zr, ref in zip(keep[:2], (_ZETA_ZERO_1, _ZETA_ZERO_2)):
        click.echo(f"zero {zr!r}  (reference {ref}, |diff| = {abs(zr - ref):.2e})")
    if output:
        aio.save_approximant(r, output)


@main.command("abs-demo")
@click.option("--degree", default=80, show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              help="Write the approximant JSON here.")
def cmd_abs_demo(degree, output) -> None:
    """Fit |x| on [-1, 1] adaptively and report accuracy and cost."""
    count = {"n": 0}

    def f(x):
        count["n"] += len(np.atleast_1d(x))
        return np.abs(x)

    t0 = time.perf_counter()
    r = fit_interval(f, degree, (-1.0, 1.0))
    elapsed = time.perf_counter() - t0
    xx = np.linspace(-1.0, 1.0, 10 ** 6)
    err = float(np.max(np.abs(np.abs(xx) - r(xx.astype(complex)).real)))
    report = pole_zero_report(r)
    nearest = float(np.min(np.abs(report.poles))) if len(report.poles) else np.inf
    click.echo(f"degree {r.degree}, fit time {elapsed:.3f}s, "
               f"{count['n']} function evaluations")
    click.echo(f"max error on 1e6-point grid: {err!r}")
    click.echo(f"pole nearest the singularity: {nearest:.3e} from 0")
    if output:
        aio.save_approximant(r, output)


if __name__ == "__main__":  # pragma: no cover
    main()
