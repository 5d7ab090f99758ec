# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from teichcurve.io.coeffs_file import (
    CoeffsFile,
    load_coeffs_file,
    load_cusp_form,
    save_coeffs_file,
)
from teichcurve.io.report import ReportFile, ResidualTable, Verdict, render_json
from teichcurve.io.sampled_maps import (
    read_circle_map,
    read_line_map,
    read_samples,
    write_circle_map,
    write_line_map,
    write_samples,
)

__all__ = [
    "CoeffsFile",
    "ReportFile",
    "ResidualTable",
    "Verdict",
    "load_coeffs_file",
    "load_cusp_form",
    "read_circle_map",
    "read_line_map",
    "read_samples",
    "render_json",
    "save_coeffs_file",
    "write_circle_map",
    "write_line_map",
    "write_samples",
]
