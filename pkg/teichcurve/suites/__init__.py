# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from typing import List

from teichcurve.graph import Task
from teichcurve.series import CuspFormCoeffs
from teichcurve.suites.base import (
    CircleFieldTask,
    CuspFormInput,
    CurveTangentTask,
    SuiteOutcome,
    SuiteSettings,
    VerificationSuite,
)
from teichcurve.suites.registry import REGISTERED_SUITES


def get(suite: str) -> VerificationSuite:
    if suite in REGISTERED_SUITES:
        return REGISTERED_SUITES[suite]
    raise RuntimeError(f"Unknown verification suite {suite}")


def resolve(suite: str) -> List[VerificationSuite]:
    """`all` expands to every registered suite."""
    if suite == "all":
        return list(REGISTERED_SUITES.values())
    return [get(suite)]


def make_suite_tasks(
    phi: CuspFormCoeffs, suite: str, settings: SuiteSettings
) -> List[Task[SuiteOutcome]]:
    phi_task = CuspFormInput(phi=phi)
    circle_task = CircleFieldTask(phi_task=phi_task)
    curve_task = CurveTangentTask(phi_task=phi_task)
    return [
        s.make_task(
            phi=phi_task,
            circle_field=circle_task,
            curve_tangent=curve_task,
            settings=settings,
        )
        for s in resolve(suite)
    ]


__all__ = [
    "REGISTERED_SUITES",
    "SuiteOutcome",
    "SuiteSettings",
    "VerificationSuite",
    "get",
    "make_suite_tasks",
    "resolve",
]
