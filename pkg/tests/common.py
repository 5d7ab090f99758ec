import json
import os
from typing import Optional, Sequence

import numpy as np

from teichcurve.bers_map import SampledCircleMap, sample_moebius_boundary
from teichcurve.io import CoeffsFile, save_coeffs_file, write_circle_map
from teichcurve.series import CuspFormCoeffs


def random_cusp_form(rng: np.random.Generator, n: int) -> CuspFormCoeffs:
    """Coefficients uniform in the complex unit square."""
    values = rng.uniform(-1.0, 1.0, size=n) + 1j * rng.uniform(-1.0, 1.0, size=n)
    return CuspFormCoeffs.from_values(values)


def write_cusp_form(
    directory: str, phi: CuspFormCoeffs, name: str = "phi.json"
) -> str:
    path = os.path.join(str(directory), name)
    save_coeffs_file(path, CoeffsFile.from_cusp_form(phi))
    return path


def write_raw_json(directory: str, data, name: str = "raw.json") -> str:
    path = os.path.join(str(directory), name)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f)
    return path


def write_moebius_map(
    directory: str, w: complex, count: int = 10000, name: Optional[str] = None
) -> str:
    path = os.path.join(str(directory), name or f"moebius_{count}.csv")
    write_circle_map(path, sample_moebius_boundary(w, count))
    return path


def write_csv(directory: str, rows: Sequence[Sequence[float]], name: str) -> str:
    path = os.path.join(str(directory), name)
    with open(path, "w", encoding="utf-8") as f:
        f.write("x,y\n")
        for row in rows:
            f.write(",".join(repr(float(v)) for v in row) + "\n")
    return path


def identity_map(count: int = 64) -> SampledCircleMap:
    return SampledCircleMap.identity(count)
