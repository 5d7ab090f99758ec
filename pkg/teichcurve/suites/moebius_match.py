# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from typing import Dict, Optional

import numpy as np
from typing_extensions import override

from teichcurve.bers_map import CircleVectorField, CurveTangent
from teichcurve.common import TWO_PI, ImmutableMap
from teichcurve.graph import Task
from teichcurve.io.report import ResidualTable, make_verdict
from teichcurve.series import CuspFormCoeffs
from teichcurve.suites.base import SuiteOutcome, SuiteSettings, VerificationSuite
from teichcurve.variation import (
    DiscVariationField,
    eval_omega_dot_disc,
    eval_v_dot,
    moebius_corrected_field,
    omega_dot_on_circle,
)


def beta_c_relative(tangent: CurveTangent, field: CircleVectorField) -> float:
    diffs = [
        abs(beta - 1j * field.c(n)) for n, beta in enumerate(tangent.betas, start=2)
    ]
    scale = max((abs(field.c(n)) for n in range(2, field.N + 1)), default=0.0)
    if not diffs or scale == 0:
        return max(diffs, default=0.0)
    return max(diffs) / scale


class MoebiusMatchTask(Task[SuiteOutcome]):
    """Replays the identification of the disc field with the circle field:
    Moebius velocity of sigma_{ta} plus the disc field equals v on S^1."""

    phi_task: Task[CuspFormCoeffs]
    circle_task: Task[CircleVectorField]
    curve_task: Task[CurveTangent]
    settings: SuiteSettings

    def arguments(self) -> Dict[str, Task]:
        return {
            "phi": self.phi_task,
            "field": self.circle_task,
            "tangent": self.curve_task,
        }

    def execute(
        self,
        phi: CuspFormCoeffs,
        field: CircleVectorField,
        tangent: CurveTangent,
        **_kwargs,
    ) -> SuiteOutcome:
        tol = self.settings.tolerances
        grid = self.settings.grid
        theta = TWO_PI * np.arange(grid, dtype=np.float64) / grid
        z = np.exp(1j * theta)

        disc_field = DiscVariationField.from_cusp_form(phi)
        residuals = np.abs(moebius_corrected_field(phi, z) - eval_v_dot(field, theta))
        boundary = np.abs(
            eval_omega_dot_disc(disc_field, z) - omega_dot_on_circle(disc_field, theta)
        )
        max_residual = float(np.max(residuals, initial=0.0))
        max_boundary = float(np.max(boundary, initial=0.0))
        re_a1 = abs(disc_field.a1.real)
        beta_c = beta_c_relative(tangent, field)

        return SuiteOutcome(
            suite="moebius-match",
            results=ImmutableMap(
                {
                    "max_residual": max_residual,
                    "boundary_agreement": max_boundary,
                    "a1_imag": disc_field.a1.imag,
                    "re_a1": re_a1,
                    "a_real": tangent.a.real,
                    "a_imag": tangent.a.imag,
                    "beta_c_relative": beta_c,
                }
            ),
            tables=(
                ResidualTable(
                    name="moebius_match",
                    columns=("theta", "residual", "boundary_residual"),
                    rows=tuple(
                        (float(t), float(r), float(b))
                        for t, r, b in zip(theta, residuals, boundary)
                    ),
                ),
            ),
            verdicts=(
                make_verdict(
                    "moebius_match_max_residual", max_residual, tol.moebius_match
                ),
                make_verdict("boundary_agreement", max_boundary, tol.boundary),
                make_verdict("re_a1", re_a1, tol.re_a1),
                make_verdict("beta_c_relative", beta_c, tol.beta_c),
            ),
        )

    def group_label(self) -> Optional[str]:
        return "moebius-match"


class MoebiusMatchSuite(VerificationSuite):
    def name(self) -> str:
        return "moebius-match"

    @override
    def pretty_name(self) -> Optional[str]:
        return "Moebius-corrected boundary matching"

    def make_task(
        self,
        *,
        phi: Task[CuspFormCoeffs],
        circle_field: Task[CircleVectorField],
        curve_tangent: Task[CurveTangent],
        settings: SuiteSettings,
    ) -> Task[SuiteOutcome]:
        return MoebiusMatchTask(
            phi_task=phi,
            circle_task=circle_field,
            curve_task=curve_tangent,
            settings=settings,
        )
