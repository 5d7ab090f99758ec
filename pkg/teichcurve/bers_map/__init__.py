# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from teichcurve.bers_map.boundary_maps import (
    SampledCircleMap,
    SampledLineMap,
    compose_circle_maps,
    descend_line_map,
    generate_probes,
    group_hom_residual,
    lift_circle_map,
    moebius_composition_error,
    qs_ratio_estimate,
    roundtrip_residual,
    sample_moebius_boundary,
)
from teichcurve.bers_map.derivative import (
    CircleVectorField,
    CurveTangent,
    beta_c_consistency,
    circle_modes,
    curve_betas,
    d0_B,
    d0_P,
    d0_P_inverse,
)
from teichcurve.bers_map.moebius import MoebiusDisc, moebius_apply, moebius_velocity

__all__ = [
    "CircleVectorField",
    "CurveTangent",
    "MoebiusDisc",
    "SampledCircleMap",
    "SampledLineMap",
    "beta_c_consistency",
    "circle_modes",
    "compose_circle_maps",
    "curve_betas",
    "d0_B",
    "d0_P",
    "d0_P_inverse",
    "descend_line_map",
    "generate_probes",
    "group_hom_residual",
    "lift_circle_map",
    "moebius_apply",
    "moebius_composition_error",
    "moebius_velocity",
    "qs_ratio_estimate",
    "roundtrip_residual",
    "sample_moebius_boundary",
]
