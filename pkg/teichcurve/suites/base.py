# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from abc import ABC, abstractmethod
from typing import Dict, Optional, Tuple

from pydantic import BaseModel

from teichcurve.bers_map import CircleVectorField, CurveTangent, d0_B, d0_P
from teichcurve.common import ImmutableMap
from teichcurve.config import Tolerances
from teichcurve.graph import Task
from teichcurve.io.report import ResidualTable, Verdict
from teichcurve.series import CuspFormCoeffs


class SuiteSettings(BaseModel, frozen=True):
    h: float = 1e-3
    grid: int = 128
    points: int = 20
    seed: int = 42
    tolerances: Tolerances = Tolerances()


class SuiteOutcome(BaseModel, frozen=True):
    suite: str
    results: ImmutableMap[str, float]
    tables: Tuple[ResidualTable, ...] = ()
    verdicts: Tuple[Verdict, ...] = ()

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


class CuspFormInput(Task[CuspFormCoeffs]):
    phi: CuspFormCoeffs

    def arguments(self) -> Dict[str, Task]:
        return {}

    def execute(self, **_kwargs) -> CuspFormCoeffs:
        return self.phi

    def group_label(self) -> Optional[str]:
        return "input"


class CircleFieldTask(Task[CircleVectorField]):
    phi_task: Task[CuspFormCoeffs]

    def arguments(self) -> Dict[str, Task]:
        return {"phi": self.phi_task}

    def execute(self, phi: CuspFormCoeffs, **_kwargs) -> CircleVectorField:
        return d0_P(phi)

    def priority(self) -> int:
        return 1


class CurveTangentTask(Task[CurveTangent]):
    phi_task: Task[CuspFormCoeffs]

    def arguments(self) -> Dict[str, Task]:
        return {"phi": self.phi_task}

    def execute(self, phi: CuspFormCoeffs, **_kwargs) -> CurveTangent:
        return d0_B(phi)

    def priority(self) -> int:
        return 1


class VerificationSuite(ABC):
    @abstractmethod
    def name(self) -> str: ...

    def pretty_name(self) -> Optional[str]:
        return None

    @abstractmethod
    def make_task(
        self,
        *,
        phi: Task[CuspFormCoeffs],
        circle_field: Task[CircleVectorField],
        curve_tangent: Task[CurveTangent],
        settings: SuiteSettings,
    ) -> Task[SuiteOutcome]: ...
