# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from typing import Any, Iterable, List, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, Field, model_validator
from typing_extensions import Annotated, Literal, TypeAlias


class Tolerances(BaseModel, frozen=True):
    ratio: float = 1e-12
    quadrature: float = 1e-6
    chain: float = 1e-9
    moebius_match: float = 1e-9
    boundary: float = 1e-13
    beta_c: float = 1e-14
    re_a1: float = 1e-14
    normalization: float = 1e-14
    sum_c: float = 1e-12
    dbar_residual: float = 1e-5
    dbar_order_window: Tuple[float, float] = (3.5, 4.5)
    dbar_floor: float = 1e-10
    roundtrip: float = 1e-12
    hom: float = 1e-9

    @model_validator(mode="after")
    def validate_window(self):
        lo, hi = self.dbar_order_window
        if not 0 < lo < hi:
            raise ValueError(f"Invalid order window {self.dbar_order_window}")
        return self


class JobBase(BaseModel, frozen=True):
    name: Optional[str] = None
    tolerances: Tolerances = Tolerances()


class RatioCheckJob(JobBase, frozen=True):
    command: Literal["ratio-check"] = "ratio-check"
    coeffs: str
    y_max: float = 10.0
    nx: int = 64
    ny: int = 512


class DerivativeMapJob(JobBase, frozen=True):
    command: Literal["derivative-map"] = "derivative-map"
    coeffs: str
    target: Literal["circle", "curve"]
    out: str


class VerifyJob(JobBase, frozen=True):
    command: Literal["verify"] = "verify"
    coeffs: str
    suite: Literal["dbar", "chain", "moebius-match", "all"] = "all"
    h: float = 1e-3
    grid: int = 128
    points: int = 20
    tables_dir: Optional[str] = None

    @model_validator(mode="after")
    def validate_steps(self):
        if self.h <= 0:
            raise ValueError(f"Step h must be positive, got {self.h}")
        if self.grid < 1 or self.points < 1:
            raise ValueError("grid and points must be positive")
        return self


class LiftJob(JobBase, frozen=True):
    command: Literal["lift"] = "lift"
    map: str
    map2: Optional[str] = None
    mode: Literal["lift", "descend", "roundtrip", "hom-check"] = "lift"
    out: Optional[str] = None
    grid: int = 10000

    @model_validator(mode="after")
    def validate_arguments(self):
        if self.mode == "hom-check" and not self.map2:
            raise ValueError("hom-check needs a second map (map2)")
        if self.grid < 1:
            raise ValueError(f"grid must be positive, got {self.grid}")
        return self


class QsCheckJob(JobBase, frozen=True):
    command: Literal["qs-check"] = "qs-check"
    map: str
    probes: int = 1000
    model: Literal["circle", "line"] = "circle"

    @model_validator(mode="after")
    def validate_probes(self):
        if self.probes < 1:
            raise ValueError(f"Need at least one probe, got {self.probes}")
        return self


class SampleMoebiusJob(JobBase, frozen=True):
    command: Literal["sample-moebius"] = "sample-moebius"
    w: Tuple[float, float]
    samples: int = 10000
    out: str

    @model_validator(mode="after")
    def validate_sampling(self):
        if not abs(complex(*self.w)) < 1:
            raise ValueError(f"Moebius parameter must lie in the unit disc: {self.w}")
        if self.samples < 1:
            raise ValueError(f"Need at least one sample, got {self.samples}")
        return self


Job: TypeAlias = Annotated[
    Union[
        RatioCheckJob,
        DerivativeMapJob,
        VerifyJob,
        LiftJob,
        QsCheckJob,
        SampleMoebiusJob,
    ],
    Field(discriminator="command"),
]


class BatchConfiguration(BaseModel):
    jobs: List[Job]
    tolerances: Optional[Tolerances] = None

    @model_validator(mode="after")
    def validate_names(self):
        names = self.job_names()
        if len(set(names)) != len(names):
            raise RuntimeError(f"Duplicate job names in batch: {names}")
        return self

    def job_names(self) -> List[str]:
        return [
            job.name or f"{idx:02d}-{job.command}" for idx, job in enumerate(self.jobs)
        ]

    def effective_jobs(self) -> List[Job]:
        """Jobs with the batch-wide tolerances applied where a job sets none."""
        if self.tolerances is None:
            return list(self.jobs)
        return [
            (
                job
                if "tolerances" in job.model_fields_set
                else job.model_copy(update={"tolerances": self.tolerances})
            )
            for job in self.jobs
        ]

    def to_yaml(self) -> str:
        data = self.model_dump(exclude_defaults=True, mode="json")
        # the discriminator has a default but must survive the dump
        data["jobs"] = [
            {"command": job.command, **dumped}
            for job, dumped in zip(self.jobs, data["jobs"])
        ]
        return yaml.dump(
            data,
            Dumper=ConfigYamlDumper,
            sort_keys=False,
        ).rstrip()


class ConfigYamlDumper(yaml.Dumper):
    """Custom YAML dumper to format lists of numbers in flow style."""

    def represent_list(self, data: Iterable[Any]) -> yaml.SequenceNode:
        flow_style = all(isinstance(e, (int, float)) for e in data)
        return self.represent_sequence(
            "tag:yaml.org,2002:seq", data, flow_style=flow_style
        )


ConfigYamlDumper.add_representer(list, ConfigYamlDumper.represent_list)
