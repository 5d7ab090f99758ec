# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
"""
Command implementations shared by the CLI and batch recipes.

Every command takes a job configuration and returns a ReportFile; errors
are raised as TeichcurveError subclasses carrying their exit code.
"""

import logging
import os
from typing import Callable, Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ValidationError

from teichcurve.bers_map import (
    beta_c_consistency,
    d0_B,
    d0_P,
    descend_line_map,
    generate_probes,
    group_hom_residual,
    lift_circle_map,
    qs_ratio_estimate,
    roundtrip_residual,
    sample_moebius_boundary,
)
from teichcurve.common import (
    BranchAmbiguityError,
    DegenerateInputError,
    InputFormatError,
    TeichcurveError,
)
from teichcurve.config import (
    BatchConfiguration,
    DerivativeMapJob,
    Job,
    LiftJob,
    QsCheckJob,
    RatioCheckJob,
    SampleMoebiusJob,
    VerifyJob,
)
from teichcurve.graph import Executor, Task
from teichcurve.io import (
    CoeffsFile,
    ReportFile,
    load_cusp_form,
    read_circle_map,
    read_line_map,
    save_coeffs_file,
    write_circle_map,
    write_line_map,
)
from teichcurve.metrics import VK_TZ_RATIO, QuadratureSpec, metric_report
from teichcurve.options import RunOptions
from teichcurve.suites import SuiteSettings, make_suite_tasks
from teichcurve.suites.moebius_match import beta_c_relative

logger = logging.getLogger(__name__)


def exit_code_for(error: Exception) -> int:
    """Exit code for an error a command raises on bad input."""
    if isinstance(error, TeichcurveError):
        return error.exit_code
    # invalid arguments and unreadable or unwritable files
    return InputFormatError.exit_code


def _new_report(job: BaseModel) -> ReportFile:
    arguments = job.model_dump(mode="json", exclude={"name", "command"})
    return ReportFile(command=job.command, arguments=arguments)


def cmd_ratio_check(job: RatioCheckJob, options: RunOptions) -> ReportFile:
    report = _new_report(job)
    report.add_input(job.coeffs)
    phi = load_cusp_form(job.coeffs)
    if phi.is_zero():
        raise DegenerateInputError("Metric ratio is undefined for the zero cusp form")

    spec = QuadratureSpec(y_max=job.y_max, nx=job.nx, ny=job.ny)
    if spec.nx <= 2 * phi.N:
        logger.warning(
            f"nx={spec.nx} does not exceed 2N={2 * phi.N}; the x-quadrature aliases"
        )
    metrics = metric_report(phi, spec)
    tol = job.tolerances

    ratio_error = abs(metrics.ratio - VK_TZ_RATIO)
    # the quadrature integrates mu conj(mu), the conjugate of the closed form
    quad_error = abs(metrics.tz_quadrature - metrics.tz_closed.conjugate()) / abs(
        metrics.tz_closed
    )
    quad_tol = max(tol.quadrature, metrics.tail_bound / abs(metrics.tz_closed))

    report.results.update(
        {
            "N": phi.N,
            "tz_closed": metrics.tz_closed,
            "tz_quadrature": metrics.tz_quadrature,
            "tail_bound": metrics.tail_bound,
            "vk": metrics.vk,
            "ratio": metrics.ratio,
            "expected_ratio": VK_TZ_RATIO,
            "ratio_error": ratio_error,
            "quadrature_relative_error": quad_error,
        }
    )
    report.check("ratio_relative_error", ratio_error / VK_TZ_RATIO, tol.ratio)
    report.check("quadrature_relative_error", quad_error, quad_tol)
    return report


def cmd_derivative_map(job: DerivativeMapJob, options: RunOptions) -> ReportFile:
    report = _new_report(job)
    report.add_input(job.coeffs)
    phi = load_cusp_form(job.coeffs)
    tol = job.tolerances

    field = d0_P(phi)
    scale = float(sum(abs(c) for c in field.coeffs))
    sum_c = abs(field.total())
    tangent = d0_B(phi)
    beta_c = beta_c_consistency(phi)

    if job.target == "circle":
        out = CoeffsFile.from_circle_field(field)
        report.results["N"] = field.N
    else:
        out = CoeffsFile.from_curve_tangent(tangent)
        report.results["a"] = tangent.a
        report.results["lambda_is_zero"] = tangent.lam.is_zero()
    save_coeffs_file(job.out, out)
    logger.info(f"Wrote {out.model} coefficients to {job.out}")

    report.results["sum_c"] = sum_c
    report.results["beta_c_residual"] = beta_c
    report.check("sum_c_relative", sum_c / scale if scale else 0.0, tol.sum_c)
    report.check("beta_c_relative", beta_c_relative(tangent, field), tol.beta_c)
    return report


def cmd_verify(job: VerifyJob, options: RunOptions) -> ReportFile:
    report = _new_report(job)
    report.add_input(job.coeffs)
    phi = load_cusp_form(job.coeffs)

    settings = SuiteSettings(
        h=job.h,
        grid=job.grid,
        points=job.points,
        seed=options.random_seed,
        tolerances=job.tolerances,
    )
    tasks = make_suite_tasks(phi, job.suite, settings)
    executor = Executor(tasks)
    outcomes = {
        outcome.suite: outcome
        for _task, outcome in executor.run(quiet=options.quiet, desc="Verifying")
    }
    for name in sorted(outcomes):
        outcome = outcomes[name]
        for key, value in outcome.results.items():
            report.results[f"{name}.{key}"] = value
        report.tables.extend(outcome.tables)
        for verdict in outcome.verdicts:
            report.add_verdict(verdict)

    if job.tables_dir:
        report.write_tables(job.tables_dir)
    return report


def cmd_lift(job: LiftJob, options: RunOptions) -> ReportFile:
    report = _new_report(job)
    report.add_input(job.map)
    tol = job.tolerances

    if job.mode == "lift":
        eta = read_circle_map(job.map)
        u = lift_circle_map(eta)
        xs = np.asarray(u.xs)
        periodicity = float(
            np.max(np.abs(u.evaluate(xs + 1.0) - u.evaluate(xs) - 1.0))
        )
        report.results["samples"] = len(u)
        report.results["periodicity_residual"] = periodicity
        report.check("periodicity", periodicity, tol.roundtrip)
        if job.out:
            write_line_map(job.out, u)
    elif job.mode == "descend":
        u = read_line_map(job.map)
        eta = descend_line_map(u)
        if job.out:
            write_circle_map(job.out, eta)
        report.results["samples"] = len(eta)
        try:
            back = lift_circle_map(eta)
        except BranchAmbiguityError as e:
            # a valid line map may step half a turn or more between samples
            logger.info(f"Skipping the round trip: {e}")
            report.results["roundtrip_checked"] = False
        else:
            residual = float(np.max(np.abs(np.asarray(back.us) - np.asarray(u.us))))
            report.results["roundtrip_checked"] = True
            report.results["roundtrip_residual"] = residual
            report.check("roundtrip", residual, tol.roundtrip)
    elif job.mode == "roundtrip":
        eta = read_circle_map(job.map)
        residual = roundtrip_residual(eta)
        report.results["samples"] = len(eta)
        report.results["roundtrip_residual"] = residual
        report.check("roundtrip", residual, tol.roundtrip)
    else:
        report.add_input(job.map2)
        eta1 = read_circle_map(job.map)
        eta2 = read_circle_map(job.map2)
        residual = group_hom_residual(eta1, eta2, job.grid)
        report.results["grid"] = job.grid
        report.results["hom_residual"] = residual
        report.check("group_homomorphism", residual, tol.hom)
    return report


def cmd_qs_check(job: QsCheckJob, options: RunOptions) -> ReportFile:
    report = _new_report(job)
    report.add_input(job.map)
    if job.model == "circle":
        sampled = read_circle_map(job.map)
    else:
        sampled = read_line_map(job.map)

    rng = options.rng()
    probes = generate_probes(rng, job.probes)
    estimate = qs_ratio_estimate(sampled, probes)
    refined = qs_ratio_estimate(sampled, probes + generate_probes(rng, 3 * job.probes))
    # refinement_change is reported only; the verdict is on the lower bound
    report.results.update(
        {
            "probes": job.probes,
            "qs_lower_bound": estimate,
            "qs_lower_bound_refined": refined,
            "refinement_change": abs(refined - estimate) / estimate,
        }
    )
    report.check("qs_lower_bound", estimate, 1.0, criterion=">=")
    return report


def cmd_sample_moebius(job: SampleMoebiusJob, options: RunOptions) -> ReportFile:
    report = _new_report(job)
    eta = sample_moebius_boundary(complex(*job.w), job.samples)
    write_circle_map(job.out, eta)
    report.results["samples"] = len(eta)
    report.results["w"] = complex(*job.w)
    return report


COMMANDS: Dict[str, Callable[[Job, RunOptions], ReportFile]] = {
    "ratio-check": cmd_ratio_check,
    "derivative-map": cmd_derivative_map,
    "verify": cmd_verify,
    "lift": cmd_lift,
    "qs-check": cmd_qs_check,
    "sample-moebius": cmd_sample_moebius,
}


def run_job(job: Job, options: RunOptions) -> ReportFile:
    return COMMANDS[job.command](job, options)


class JobOutcome(BaseModel):
    name: str
    exit_code: int
    report: ReportFile


class BatchJobTask(Task[JobOutcome]):
    name: str
    job: Job
    options: RunOptions

    def arguments(self) -> Dict[str, Task]:
        return {}

    def execute(self, **_kwargs) -> JobOutcome:
        # a failed job must not stop the rest of the batch
        try:
            report = run_job(self.job, self.options.model_copy(update={"quiet": True}))
            return JobOutcome(name=self.name, exit_code=report.exit_code, report=report)
        except (TeichcurveError, ValidationError, OSError) as e:
            logger.error(f"Job {self.name} failed: {e}")
            report = _new_report(self.job)
            report.results["error"] = str(e)
            return JobOutcome(name=self.name, exit_code=exit_code_for(e), report=report)


def cmd_batch(
    config: BatchConfiguration, out_dir: str, options: RunOptions
) -> Tuple[int, List[JobOutcome]]:
    """Run every job of a batch recipe, writing one report per job.

    Returns the worst exit code and the job outcomes.
    """
    try:
        os.makedirs(out_dir, exist_ok=True)
    except OSError as e:
        raise InputFormatError(f"Could not create {out_dir}: {e}") from e
    tasks = [
        BatchJobTask(name=name, job=job, options=options)
        for name, job in zip(config.job_names(), config.effective_jobs())
    ]
    outcomes = []
    for _task, outcome in Executor(tasks).run(quiet=options.quiet, desc="Batch"):
        outcome.report.write(os.path.join(out_dir, f"{outcome.name}.json"))
        outcomes.append(outcome)
    outcomes.sort(key=lambda o: o.name)
    worst = max((o.exit_code for o in outcomes), default=0)
    return worst, outcomes
