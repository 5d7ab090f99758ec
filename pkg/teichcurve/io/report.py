# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
"""
Machine-readable verification reports.

Reports render byte-for-byte identically for identical inputs: keys are
sorted, floats are written with 17 significant digits and complex numbers
as [re, im] pairs.
"""

import csv
import hashlib
import json
import logging
import math
import os
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from teichcurve.common import InputFormatError

logger = logging.getLogger(__name__)


def format_float(value: float) -> str:
    if math.isnan(value):
        return '"nan"'
    if math.isinf(value):
        return '"inf"' if value > 0 else '"-inf"'
    return format(value, ".17g")


def _render(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, BaseModel):
        obj = obj.model_dump()
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return _render([obj.real, obj.imag], indent, level)
    if isinstance(obj, str):
        return _quote(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{_quote(str(k))}: {_render(obj[k], indent, level + 1)}"
            for k in sorted(obj, key=str)
        ]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        if len(obj) == 0:
            return "[]"
        parts = [_render(v, indent, level + 1) for v in obj]
        if all(not isinstance(v, (dict, list, tuple, BaseModel)) for v in obj):
            return "[" + ", ".join(parts) + "]"
        return "[\n" + ",\n".join(pad + p for p in parts) + "\n" + end + "]"
    raise TypeError(f"Cannot render value of type {type(obj).__name__}")


def _quote(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def render_json(obj: Any, indent: int = 2) -> str:
    return _render(obj, indent, 0) + "\n"


def sha256_file(path: str) -> str:
    h = hashlib.sha256()
    try:
        with open(path, "rb") as f:
            for chunk in iter(lambda: f.read(1 << 16), b""):
                h.update(chunk)
    except OSError as e:
        raise InputFormatError(f"Could not read {path}: {e}") from e
    return h.hexdigest()


class Verdict(BaseModel, frozen=True):
    name: str
    value: float
    tolerance: float
    passed: bool
    criterion: str = "<="


def make_verdict(
    name: str, value: float, tolerance: float, criterion: str = "<="
) -> Verdict:
    value = float(value)
    if criterion == "<=":
        passed = value <= tolerance
    elif criterion == ">=":
        passed = value >= tolerance
    else:
        raise ValueError(f"Unknown criterion {criterion}")
    return Verdict(
        name=name,
        value=value,
        tolerance=float(tolerance),
        passed=bool(passed and math.isfinite(value)),
        criterion=criterion,
    )


class ResidualTable(BaseModel, frozen=True):
    name: str
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[float, ...], ...]


class InputDigest(BaseModel, frozen=True):
    path: str
    sha256: str


class ReportFile(BaseModel):
    command: str
    arguments: Dict[str, Any] = {}
    inputs: List[InputDigest] = []
    results: Dict[str, Any] = {}
    tables: List[ResidualTable] = []
    verdicts: List[Verdict] = []

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def add_input(self, path: str):
        self.inputs.append(InputDigest(path=path, sha256=sha256_file(path)))

    def check(
        self, name: str, value: float, tolerance: float, criterion: str = "<="
    ) -> Verdict:
        """Record whether `value <criterion> tolerance` holds."""
        verdict = make_verdict(name, value, tolerance, criterion)
        self.add_verdict(verdict)
        return verdict

    def add_verdict(self, verdict: Verdict):
        self.verdicts.append(verdict)
        if not verdict.passed:
            logger.warning(
                f"Check {verdict.name} failed: {verdict.value:.6e} "
                f"{verdict.criterion} {verdict.tolerance:.3e} does not hold"
            )

    def add_table(
        self, name: str, columns: Sequence[str], rows: Sequence[Sequence[float]]
    ):
        self.tables.append(
            ResidualTable(
                name=name,
                columns=tuple(columns),
                rows=tuple(tuple(float(v) for v in row) for row in rows),
            )
        )

    def to_json(self) -> str:
        return render_json(self.model_dump())

    def write(self, path: Optional[str]):
        text = self.to_json()
        if path is None or path == "-":
            print(text, end="")
            return
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        except OSError as e:
            raise InputFormatError(f"Could not write report {path}: {e}") from e

    def write_tables(self, out_dir: str):
        try:
            os.makedirs(out_dir, exist_ok=True)
        except OSError as e:
            raise InputFormatError(f"Could not create {out_dir}: {e}") from e
        for table in self.tables:
            write_table_csv(os.path.join(out_dir, f"{table.name}.csv"), table)


def write_table_csv(path: str, table: ResidualTable):
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(table.columns)
            for row in table.rows:
                writer.writerow([format(v, ".17g") for v in row])
    except OSError as e:
        raise InputFormatError(f"Could not write table {path}: {e}") from e
