# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

import csv
from typing import Sequence, Tuple

import numpy as np

from teichcurve.bers_map import SampledCircleMap, SampledLineMap
from teichcurve.common import InputFormatError

HEADER = ("x", "y")


def read_samples(path: str) -> Tuple[np.ndarray, np.ndarray]:
    """Two-column CSV with header "x,y"."""
    xs, ys = [], []
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header is None or tuple(h.strip() for h in header) != HEADER:
                raise InputFormatError(f"{path}: expected header 'x,y', got {header}")
            for lineno, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != 2:
                    raise InputFormatError(f"{path}:{lineno}: expected two columns")
                try:
                    xs.append(float(row[0]))
                    ys.append(float(row[1]))
                except ValueError as e:
                    raise InputFormatError(f"{path}:{lineno}: {e}") from e
    except OSError as e:
        raise InputFormatError(f"Could not read {path}: {e}") from e
    return np.asarray(xs, dtype=np.float64), np.asarray(ys, dtype=np.float64)


def write_samples(path: str, xs: Sequence[float], ys: Sequence[float]):
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(HEADER)
            for x, y in zip(xs, ys):
                writer.writerow([format(float(x), ".17g"), format(float(y), ".17g")])
    except OSError as e:
        raise InputFormatError(f"Could not write {path}: {e}") from e


def read_circle_map(path: str) -> SampledCircleMap:
    xs, ys = read_samples(path)
    return SampledCircleMap.from_samples(xs, ys)


def read_line_map(path: str) -> SampledLineMap:
    xs, us = read_samples(path)
    return SampledLineMap.from_samples(xs, us)


def write_circle_map(path: str, eta: SampledCircleMap):
    write_samples(path, eta.xs, eta.ys)


def write_line_map(path: str, u: SampledLineMap):
    write_samples(path, u.xs, u.us)
