# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

import logging
import sys
from typing import Callable, Tuple

import click
import yaml
from pydantic import ValidationError

from teichcurve.commands import cmd_batch, exit_code_for, run_job
from teichcurve.common import InputFormatError, TeichcurveError
from teichcurve.config import (
    BatchConfiguration,
    DerivativeMapJob,
    LiftJob,
    QsCheckJob,
    RatioCheckJob,
    SampleMoebiusJob,
    Tolerances,
    VerifyJob,
)
from teichcurve.io import ReportFile
from teichcurve.options import RunOptions, add_run_options

LOG = logging.getLogger(__name__)


def _execute(run_options: RunOptions, build: Callable[[], ReportFile]):
    run_options.apply_global_options()
    try:
        report = build()
        report.write(run_options.report)
    except ValidationError as e:
        click.echo(f"error: invalid arguments\n{e}", err=True)
        sys.exit(exit_code_for(e))
    except (TeichcurveError, OSError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(exit_code_for(e))
    sys.exit(report.exit_code)


def _parse_pair(_ctx, _param, value: str) -> Tuple[float, float]:
    try:
        re_part, im_part = (float(v) for v in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected RE,IM, got {value!r}")
    return re_part, im_part


@click.group("teichcurve")
def main():
    """Bers-isomorphism derivative maps and metric checks at the origin."""


@main.command("ratio-check")
@click.option("--coeffs", required=True, help="uhp-cusp coefficient file")
@click.option("--ymax", "y_max", type=float, default=10.0, show_default=True)
@click.option("--nx", type=int, default=64, show_default=True)
@click.option("--ny", type=int, default=512, show_default=True)
@click.option(
    "--tol",
    type=float,
    default=Tolerances().ratio,
    show_default=True,
    help="Relative tolerance on VK/TZ - 2 pi/3",
)
@add_run_options
def ratio_check(
    run_options: RunOptions, coeffs: str, y_max: float, nx: int, ny: int, tol: float
):
    """Check that the VK/TZ ratio equals 2 pi / 3."""
    _execute(
        run_options,
        lambda: run_job(
            RatioCheckJob(
                coeffs=coeffs,
                y_max=y_max,
                nx=nx,
                ny=ny,
                tolerances=Tolerances(ratio=tol),
            ),
            run_options,
        ),
    )


@main.command("derivative-map")
@click.option("--coeffs", required=True, help="uhp-cusp coefficient file")
@click.option("--target", type=click.Choice(["circle", "curve"]), required=True)
@click.option("--out", required=True, help="Output coefficient file")
@add_run_options
def derivative_map(run_options: RunOptions, coeffs: str, target: str, out: str):
    """Apply D0P (circle) or D0B (curve) to a cusp form."""
    _execute(
        run_options,
        lambda: run_job(
            DerivativeMapJob(coeffs=coeffs, target=target, out=out), run_options
        ),
    )


@main.command("verify")
@click.option("--coeffs", required=True, help="uhp-cusp coefficient file")
@click.option(
    "--suite",
    type=click.Choice(["dbar", "chain", "moebius-match", "all"]),
    default="all",
    show_default=True,
)
@click.option("--h", type=float, default=1e-3, show_default=True)
@click.option("--grid", type=int, default=128, show_default=True)
@click.option("--points", type=int, default=20, show_default=True)
@click.option("--tables-dir", default=None, help="Write residual tables as CSV")
@add_run_options
def verify(
    run_options: RunOptions,
    coeffs: str,
    suite: str,
    h: float,
    grid: int,
    points: int,
    tables_dir: str,
):
    """Run residual suites for the variation formulas."""
    _execute(
        run_options,
        lambda: run_job(
            VerifyJob(
                coeffs=coeffs,
                suite=suite,
                h=h,
                grid=grid,
                points=points,
                tables_dir=tables_dir,
            ),
            run_options,
        ),
    )


@main.command("lift")
@click.option("--map", "map_path", required=True, help="Sampled map (CSV x,y)")
@click.option("--map2", "map2_path", default=None, help="Second map for hom-check")
@click.option(
    "--mode",
    type=click.Choice(["lift", "descend", "roundtrip", "hom-check"]),
    default="lift",
    show_default=True,
)
@click.option("--out", default=None, help="Output CSV")
@click.option("--grid", type=int, default=10000, show_default=True)
@add_run_options
def lift(
    run_options: RunOptions,
    map_path: str,
    map2_path: str,
    mode: str,
    out: str,
    grid: int,
):
    """Lift circle maps to the line and back."""
    _execute(
        run_options,
        lambda: run_job(
            LiftJob(map=map_path, map2=map2_path, mode=mode, out=out, grid=grid),
            run_options,
        ),
    )


@main.command("qs-check")
@click.option("--map", "map_path", required=True, help="Sampled map (CSV x,y)")
@click.option("--probes", type=int, default=1000, show_default=True)
@click.option(
    "--model",
    type=click.Choice(["circle", "line"]),
    default="circle",
    show_default=True,
)
@add_run_options
def qs_check(run_options: RunOptions, map_path: str, probes: int, model: str):
    """Estimate a lower bound for the quasisymmetry constant."""
    _execute(
        run_options,
        lambda: run_job(
            QsCheckJob(map=map_path, probes=probes, model=model), run_options
        ),
    )


@main.command("sample-moebius")
@click.option("--w", required=True, callback=_parse_pair, help="RE,IM with |w| < 1")
@click.option("--samples", type=int, default=10000, show_default=True)
@click.option("--out", required=True, help="Output CSV")
@add_run_options
def sample_moebius(
    run_options: RunOptions, w: Tuple[float, float], samples: int, out: str
):
    """Sample the normalized disc automorphism on the unit circle."""
    _execute(
        run_options,
        lambda: run_job(SampleMoebiusJob(w=w, samples=samples, out=out), run_options),
    )


def load_batch(recipe: str) -> BatchConfiguration:
    try:
        with open(recipe, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
        return BatchConfiguration.model_validate(data)
    except (OSError, yaml.YAMLError, ValidationError, RuntimeError) as e:
        raise InputFormatError(f"Cannot load batch recipe {recipe}: {e}") from e


@main.command("batch")
@click.argument("recipe")
@click.option("--out-dir", required=True, help="Directory for per-job reports")
@add_run_options
def batch(run_options: RunOptions, recipe: str, out_dir: str):
    """Run every job of a YAML recipe."""
    run_options.apply_global_options()
    try:
        config = load_batch(recipe)
        worst, outcomes = cmd_batch(config, out_dir, run_options)
    except TeichcurveError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(e.exit_code)

    for outcome in outcomes:
        LOG.info(f"{outcome.name}: exit {outcome.exit_code}")
    sys.exit(worst)


if __name__ == "__main__":
    main()
