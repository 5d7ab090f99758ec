# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
"""
Takhtajan-Zograf and Velling-Kirillov metrics at the origin.

The TZ pairing is available in closed Fourier form and as a quadrature over
the strip 0 < x < 1, 0 < y < y_max with an analytic bound for y > y_max.
"""

from typing import List

import numpy as np
import scipy.special
from pydantic import BaseModel, model_validator

from teichcurve.bers_map import CircleVectorField, d0_P
from teichcurve.common import DegenerateInputError
from teichcurve.series import CuspFormCoeffs, eval_cusp_form

TZ_FACTOR = 3.0 / (32.0 * np.pi**5)
VK_TZ_RATIO = 2.0 * np.pi / 3.0


class QuadratureSpec(BaseModel, frozen=True):
    y_max: float = 10.0
    nx: int = 64
    ny: int = 512

    @model_validator(mode="after")
    def validate_sizes(self):
        if not self.y_max > 0:
            raise ValueError(f"y_max must be positive, got {self.y_max}")
        if self.nx < 4 or self.ny < 4:
            raise ValueError(
                f"Quadrature needs nx >= 4 and ny >= 4, got nx={self.nx}, ny={self.ny}"
            )
        return self


class QuadratureResult(BaseModel, frozen=True):
    value: complex
    tail_bound: float


class MetricReport(BaseModel, frozen=True):
    tz_closed: complex
    tz_quadrature: complex
    vk: float
    ratio: float
    tail_bound: float

    @model_validator(mode="after")
    def validate_tail(self):
        if self.tail_bound < 0:
            raise ValueError("tail_bound must be non-negative")
        return self


def tz_inner(phi1: CuspFormCoeffs, phi2: CuspFormCoeffs) -> complex:
    """(3 / 32 pi^5) sum_n alpha_n conj(alpha'_n) / n^5 over the common modes."""
    n = min(phi1.N, phi2.N)
    if n == 0:
        return 0j
    a1 = phi1.as_array()[:n]
    a2 = phi2.as_array()[:n]
    modes = np.arange(1, n + 1, dtype=np.float64)
    return complex(TZ_FACTOR * np.sum(a1 * np.conj(a2) / modes**5))


def tz_norm_sq(phi: CuspFormCoeffs) -> float:
    return tz_inner(phi, phi).real


def _tail_bound(phi1: CuspFormCoeffs, phi2: CuspFormCoeffs, y_max: float) -> float:
    # |4 y^4 conj(phi1) phi2| <= 4 y^4 A1 A2 exp(-4 pi y) with A = sum |alpha_n|;
    # int_Y^inf 4 y^4 e^{-4 pi y} dy = 4 Gamma(5) Q(5, 4 pi Y) / (4 pi)^5
    amp = float(np.sum(np.abs(phi1.as_array()))) * float(
        np.sum(np.abs(phi2.as_array()))
    )
    if amp == 0:
        return 0.0
    four_pi = 4.0 * np.pi
    return float(
        amp
        * 4.0
        * scipy.special.gamma(5)
        * scipy.special.gammaincc(5, four_pi * y_max)
        / four_pi**5
    )


def tz_quadrature_result(
    phi1: CuspFormCoeffs, phi2: CuspFormCoeffs, spec: QuadratureSpec
) -> QuadratureResult:
    """Integrate mu1 conj(mu2) = 4 y^4 conj(phi1) phi2 over the truncated strip.

    Midpoint trapezoid in x (exact for trigonometric polynomials with
    nx > 2N), Gauss-Legendre on (0, y_max) in y.
    """
    xs = (np.arange(spec.nx, dtype=np.float64) + 0.5) / spec.nx
    nodes, weights = scipy.special.roots_legendre(spec.ny)
    ys = 0.5 * spec.y_max * (nodes + 1.0)
    wy = 0.5 * spec.y_max * weights

    z = xs[None, :] + 1j * ys[:, None]
    f1 = eval_cusp_form(phi1, z)
    f2 = eval_cusp_form(phi2, z)
    integrand = 4.0 * ys[:, None] ** 4 * np.conj(f1) * f2
    row_means = np.mean(integrand, axis=1)
    value = complex(np.sum(wy * row_means))
    tail = _tail_bound(phi1, phi2, spec.y_max)
    return QuadratureResult(value=value, tail_bound=tail)


def tz_quadrature(
    phi1: CuspFormCoeffs, phi2: CuspFormCoeffs, spec: QuadratureSpec
) -> complex:
    """Quadrature value of the TZ integral. Equals conj(tz_inner(phi1, phi2))."""
    return tz_quadrature_result(phi1, phi2, spec).value


def vk_inner(c1: CircleVectorField, c2: CircleVectorField) -> complex:
    """sum_{n>=1} n c_n conj(c'_n)."""
    n = min(c1.N, c2.N)
    return complex(sum(k * c1.c(k) * c2.c(k).conjugate() for k in range(1, n + 1)))


def vk_norm_sq(c: CircleVectorField) -> float:
    modes = np.array(c.positive_modes(), dtype=np.complex128)
    if len(modes) == 0:
        return 0.0
    n = np.arange(1, len(modes) + 1, dtype=np.float64)
    return float(np.sum(n * np.abs(modes) ** 2))


def vk_tz_ratio(phi: CuspFormCoeffs) -> float:
    tz = tz_inner(phi, phi).real
    if tz == 0:
        raise DegenerateInputError("The zero cusp form has no metric ratio")
    return vk_norm_sq(d0_P(phi)) / tz


def metric_report(phi: CuspFormCoeffs, spec: QuadratureSpec) -> MetricReport:
    quad = tz_quadrature_result(phi, phi, spec)
    return MetricReport(
        tz_closed=tz_inner(phi, phi),
        tz_quadrature=quad.value,
        vk=vk_norm_sq(d0_P(phi)),
        ratio=vk_tz_ratio(phi),
        tail_bound=quad.tail_bound,
    )


def decay_partial_sums(phi: CuspFormCoeffs, s: float, k_max: int) -> List[float]:
    """Partial sums of sum_n |alpha_n|^2 n^(-s) for k = 1..k_max."""
    if k_max > phi.N:
        raise ValueError(f"k_max={k_max} exceeds truncation N={phi.N}")
    if k_max <= 0:
        return []
    a = np.abs(phi.as_array()[:k_max]) ** 2
    n = np.arange(1, k_max + 1, dtype=np.float64)
    return [float(v) for v in np.cumsum(a * n ** (-s))]


def circle_decay_partial_sums(
    c: CircleVectorField, exponent: float, k_max: int
) -> List[float]:
    """Partial sums of sum_n n^exponent |c_n|^2 for k = 1..k_max."""
    if k_max > c.N:
        raise ValueError(f"k_max={k_max} exceeds truncation N={c.N}")
    if k_max <= 0:
        return []
    a = np.abs(np.array(c.positive_modes()[:k_max], dtype=np.complex128)) ** 2
    n = np.arange(1, k_max + 1, dtype=np.float64)
    return [float(v) for v in np.cumsum(n**exponent * a)]
