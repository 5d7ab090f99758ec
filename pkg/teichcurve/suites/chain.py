# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from typing import Dict, Optional

import numpy as np
from typing_extensions import override

from teichcurve.bers_map import CircleVectorField, CurveTangent
from teichcurve.common import ImmutableMap
from teichcurve.graph import Task
from teichcurve.io.report import ResidualTable, make_verdict
from teichcurve.series import CuspFormCoeffs
from teichcurve.suites.base import SuiteOutcome, SuiteSettings, VerificationSuite
from teichcurve.variation import chain_residual, normalization_residual


class ChainTask(Task[SuiteOutcome]):
    """Boundary chain identity v = p' w, the normalization of w at 0 and 1,
    and the tangent-space conditions on d0_P(phi)."""

    phi_task: Task[CuspFormCoeffs]
    circle_task: Task[CircleVectorField]
    settings: SuiteSettings

    def arguments(self) -> Dict[str, Task]:
        return {"phi": self.phi_task, "field": self.circle_task}

    def execute(
        self, phi: CuspFormCoeffs, field: CircleVectorField, **_kwargs
    ) -> SuiteOutcome:
        tol = self.settings.tolerances
        xs = np.arange(self.settings.grid, dtype=np.float64) / self.settings.grid
        residuals = np.asarray(chain_residual(phi, xs), dtype=np.float64)
        max_residual = float(np.max(residuals, initial=0.0))
        normalization = normalization_residual(phi)

        scale = float(sum(abs(c) for c in field.coeffs))
        sum_c = abs(field.total())
        sum_c_rel = sum_c / scale if scale > 0 else 0.0

        return SuiteOutcome(
            suite="chain",
            results=ImmutableMap(
                {
                    "max_residual": max_residual,
                    "normalization_residual": normalization,
                    "sum_c": sum_c,
                    "sum_c_relative": sum_c_rel,
                }
            ),
            tables=(
                ResidualTable(
                    name="chain",
                    columns=("x", "residual"),
                    rows=tuple((float(x), float(r)) for x, r in zip(xs, residuals)),
                ),
            ),
            verdicts=(
                make_verdict("chain_max_residual", max_residual, tol.chain),
                make_verdict("normalization", normalization, tol.normalization),
                make_verdict("sum_c_relative", sum_c_rel, tol.sum_c),
            ),
        )

    def group_label(self) -> Optional[str]:
        return "chain"


class ChainSuite(VerificationSuite):
    def name(self) -> str:
        return "chain"

    @override
    def pretty_name(self) -> Optional[str]:
        return "Boundary chain identity"

    def make_task(
        self,
        *,
        phi: Task[CuspFormCoeffs],
        circle_field: Task[CircleVectorField],
        curve_tangent: Task[CurveTangent],
        settings: SuiteSettings,
    ) -> Task[SuiteOutcome]:
        return ChainTask(phi_task=phi, circle_task=circle_field, settings=settings)
