# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from typing import Dict, List, Optional, Tuple

import numpy as np
from typing_extensions import override

from teichcurve.beltrami import HarmonicBeltramiUHP
from teichcurve.bers_map import CircleVectorField, CurveTangent
from teichcurve.common import ImmutableMap
from teichcurve.graph import Task
from teichcurve.io.report import ResidualTable, Verdict, make_verdict
from teichcurve.series import CuspFormCoeffs
from teichcurve.suites.base import SuiteOutcome, SuiteSettings, VerificationSuite
from teichcurve.variation import (
    ConvergenceSample,
    DiscVariationField,
    dbar_convergence,
    dbar_residual_disc,
    dbar_residual_uhp,
)

# interior sampling regions: strip 0 <= x < 1, 0.2 <= y <= 1 and disc |z| <= 0.9
UHP_Y_RANGE = (0.2, 1.0)
DISC_RADIUS = 0.9


def sample_points(seed: int, count: int) -> Tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    uhp = rng.uniform(0.0, 1.0, size=count) + 1j * rng.uniform(
        *UHP_Y_RANGE, size=count
    )
    radius = DISC_RADIUS * np.sqrt(rng.uniform(0.0, 1.0, size=count))
    disc = radius * np.exp(1j * rng.uniform(0.0, 2 * np.pi, size=count))
    return uhp, disc


def _summarize(
    label: str,
    points: np.ndarray,
    samples: List[ConvergenceSample],
    settings: SuiteSettings,
) -> Tuple[Dict[str, float], ResidualTable, List[Verdict]]:
    tol = settings.tolerances
    window = tol.dbar_order_window
    failures = [s for s in samples if not s.second_order(window, tol.dbar_floor)]
    ratios = [s.ratio for s in samples if s.r_half >= tol.dbar_floor]
    results = {
        f"{label}_max_residual_h": max((s.r_h for s in samples), default=0.0),
        f"{label}_max_residual_h2": max((s.r_half for s in samples), default=0.0),
        f"{label}_min_order_ratio": min(ratios, default=float("nan")),
        f"{label}_max_order_ratio": max(ratios, default=float("nan")),
    }
    table = ResidualTable(
        name=f"dbar_{label}",
        columns=("re_z", "im_z", "residual_h", "residual_h2", "ratio"),
        rows=tuple(
            (float(z.real), float(z.imag), s.r_h, s.r_half, s.ratio)
            for z, s in zip(points, samples)
        ),
    )
    verdicts = [
        make_verdict(f"dbar_{label}_order_failures", len(failures), 0),
        make_verdict(
            f"dbar_{label}_max_residual",
            results[f"{label}_max_residual_h2"],
            tol.dbar_residual,
        ),
    ]
    return results, table, verdicts


class DbarTask(Task[SuiteOutcome]):
    phi_task: Task[CuspFormCoeffs]
    curve_task: Task[CurveTangent]
    settings: SuiteSettings

    def arguments(self) -> Dict[str, Task]:
        return {"phi": self.phi_task, "tangent": self.curve_task}

    def execute(
        self, phi: CuspFormCoeffs, tangent: CurveTangent, **_kwargs
    ) -> SuiteOutcome:
        settings = self.settings
        h = settings.h
        uhp_points, disc_points = sample_points(settings.seed, settings.points)

        mu = HarmonicBeltramiUHP(phi=phi)
        uhp_samples = [
            dbar_convergence(lambda step, z=z: dbar_residual_uhp(mu, z, step), h)
            for z in uhp_points
        ]
        # a1 z is holomorphic, so the residual does not see it
        field = DiscVariationField(potential=tangent.lam.potential())
        disc_samples = [
            dbar_convergence(lambda step, z=z: dbar_residual_disc(field, z, step), h)
            for z in disc_points
        ]

        results: Dict[str, float] = {"h": h, "points": settings.points}
        tables, verdicts = [], []
        for label, points, samples in (
            ("uhp", uhp_points, uhp_samples),
            ("disc", disc_points, disc_samples),
        ):
            res, table, ver = _summarize(label, points, samples, settings)
            results.update(res)
            tables.append(table)
            verdicts.extend(ver)
        return SuiteOutcome(
            suite="dbar",
            results=ImmutableMap(results),
            tables=tuple(tables),
            verdicts=tuple(verdicts),
        )

    def group_label(self) -> Optional[str]:
        return "dbar"


class DbarSuite(VerificationSuite):
    def name(self) -> str:
        return "dbar"

    @override
    def pretty_name(self) -> Optional[str]:
        return "Linearized Beltrami equation"

    def make_task(
        self,
        *,
        phi: Task[CuspFormCoeffs],
        circle_field: Task[CircleVectorField],
        curve_tangent: Task[CurveTangent],
        settings: SuiteSettings,
    ) -> Task[SuiteOutcome]:
        return DbarTask(phi_task=phi, curve_task=curve_tangent, settings=settings)
