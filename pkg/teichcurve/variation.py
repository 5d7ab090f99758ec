# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
"""
First-order variation vector fields.

On the upper half-plane the field is given by Ahlfors' formula in terms of a
third antiderivative Phi of the cusp form; on the disc by the analogous formula
in the potential Phi_lambda plus a holomorphic correction a1 * z. Both satisfy
the linearized Beltrami equation d(field)/d(conj z) = Beltrami differential,
which the finite-difference residuals below check independently.
"""

from typing import Callable, Optional, Tuple

import numpy as np
from pydantic import BaseModel, model_validator

from teichcurve.beltrami import (
    HarmonicBeltramiDisc,
    HarmonicBeltramiUHP,
    eval_lambda,
    eval_mu,
)
from teichcurve.bers_map import CircleVectorField, d0_B, d0_P, moebius_velocity
from teichcurve.common import (
    BOUNDARY_TOL,
    TWO_PI,
    ComplexLike,
    DomainError,
    as_complex_array,
    unwrap_scalar,
)
from teichcurve.series import (
    CuspFormCoeffs,
    DiscTaylorCoeffs,
    PeriodicPotential,
    disc_potential,
    eval_series,
    third_antiderivative,
)

RE_A1_TOLERANCE = 1e-14


class UHPVariationField(BaseModel, frozen=True):
    potential: PeriodicPotential = PeriodicPotential()
    const_term: complex = 0j

    @classmethod
    def from_cusp_form(cls, phi: CuspFormCoeffs) -> "UHPVariationField":
        potential = third_antiderivative(phi)
        # the quadratic polynomial in Ahlfors' formula reduces to -Phi(0)
        return cls(potential=potential, const_term=-eval_series(potential, 0j, 0))

    @classmethod
    def from_beltrami(cls, mu: HarmonicBeltramiUHP) -> "UHPVariationField":
        return cls.from_cusp_form(mu.phi)


class DiscVariationField(BaseModel, frozen=True):
    potential: DiscTaylorCoeffs = DiscTaylorCoeffs()
    a1: complex = 0j

    @model_validator(mode="after")
    def check_a1(self):
        if abs(self.a1.real) > RE_A1_TOLERANCE:
            raise ValueError(f"a1 must be purely imaginary, got {self.a1}")
        return self

    @property
    def betas(self) -> Tuple[complex, ...]:
        """beta_n for n = 2.., read off the z^(n+1) coefficients."""
        top = self.potential.start + len(self.potential.coeffs) - 1
        return tuple(self.potential.coefficient(n + 1) for n in range(2, top))

    @classmethod
    def from_cusp_form(
        cls, phi: CuspFormCoeffs, a1: Optional[complex] = None
    ) -> "DiscVariationField":
        """Disc field with beta_n = i c_n from d0_P and a1 from coefficient matching."""
        field = d0_P(phi)
        betas = [1j * field.c(n) for n in range(2, field.N + 1)]
        if a1 is None:
            a1 = derive_a1(phi)
        return cls(potential=disc_potential(betas), a1=a1)

    def beltrami(self) -> HarmonicBeltramiDisc:
        return HarmonicBeltramiDisc.from_betas(self.betas)


class ConvergenceSample(BaseModel, frozen=True):
    """Finite-difference residuals at steps h and h/2."""

    h: float
    r_h: float
    r_half: float

    @property
    def ratio(self) -> float:
        if self.r_half == 0:
            return float("inf") if self.r_h > 0 else float("nan")
        return self.r_h / self.r_half

    def second_order(self, window: Tuple[float, float], floor: float) -> bool:
        if self.r_half < floor:
            return True
        return window[0] <= self.ratio <= window[1]


def eval_w_dot(field: UHPVariationField, z: ComplexLike) -> ComplexLike:
    zz = as_complex_array(z)
    if np.any(zz.imag < 0):
        raise DomainError("The variation field is evaluated for Im z >= 0")
    d = 2j * zz.imag  # z - conj(z)
    p0 = as_complex_array(eval_series(field.potential, zz, 0))
    p1 = as_complex_array(eval_series(field.potential, zz, 1))
    p2 = as_complex_array(eval_series(field.potential, zz, 2))
    c = field.const_term
    # grouped so that the normalization at 0 and 1 cancels exactly
    res = (
        (d * d / 2.0) * np.conj(p2)
        + d * np.conj(p1)
        + (np.conj(p0) + p0)
        + (c + np.conj(c))
    )
    return unwrap_scalar(res, z)


def _fd_dbar(f: Callable[[np.ndarray], np.ndarray], z: np.ndarray, h: float):
    return ((f(z + h) - f(z - h)) + 1j * (f(z + 1j * h) - f(z - 1j * h))) / (4.0 * h)


def dbar_residual_uhp(
    mu: HarmonicBeltramiUHP, z: ComplexLike, h: float = 1e-3
) -> ComplexLike:
    """|FD d/d(conj z) of the variation field - mu| at z."""
    if h <= 0:
        raise ValueError(f"Step must be positive, got {h}")
    zz = as_complex_array(z)
    if np.any(zz.imag - h <= 0):
        raise DomainError("Finite-difference stencil leaves the upper half-plane")
    field = UHPVariationField.from_beltrami(mu)
    fd = _fd_dbar(lambda s: eval_w_dot(field, s), zz, h)
    res = np.abs(fd - eval_mu(mu, zz))
    return unwrap_scalar(res, z)


def eval_omega_dot_disc(field: DiscVariationField, z: ComplexLike) -> ComplexLike:
    zz = as_complex_array(z)
    r2 = (zz * np.conj(zz)).real
    if np.any(r2 > (1.0 + BOUNDARY_TOL) ** 2):
        raise DomainError("The disc variation field is evaluated for |z| <= 1")
    s = 1.0 - r2
    p0 = as_complex_array(eval_series(field.potential, zz, 0))
    p1 = as_complex_array(eval_series(field.potential, zz, 1))
    p2 = as_complex_array(eval_series(field.potential, zz, 2))
    res = (
        -(s * s / 2.0) * np.conj(p2)
        - zz * s * np.conj(p1)
        - zz * zz * np.conj(p0)
        + p0
        + field.a1 * zz
    )
    return unwrap_scalar(res, z)


def omega_dot_on_circle(field: DiscVariationField, theta: ComplexLike) -> ComplexLike:
    """Boundary values -sum conj(beta_n) z^(1-n) + sum beta_n z^(n+1) + a1 z."""
    th = np.asarray(theta, dtype=np.float64)
    res = field.a1 * np.exp(1j * th)
    for n, beta in enumerate(field.betas, start=2):
        res = res - np.conj(beta) * np.exp(1j * (1 - n) * th)
        res = res + beta * np.exp(1j * (n + 1) * th)
    return unwrap_scalar(as_complex_array(res), theta)


def dbar_residual_disc(
    field: DiscVariationField, z: ComplexLike, h: float = 1e-3
) -> ComplexLike:
    """|FD d/d(conj z) of the disc field - lambda| at z."""
    if h <= 0:
        raise ValueError(f"Step must be positive, got {h}")
    zz = as_complex_array(z)
    if np.any(np.abs(zz) + h >= 1.0):
        raise DomainError("Finite-difference stencil leaves the unit disc")
    lam = field.beltrami()
    fd = _fd_dbar(lambda s: eval_omega_dot_disc(field, s), zz, h)
    res = np.abs(fd - eval_lambda(lam, zz))
    return unwrap_scalar(res, z)


def dbar_convergence(
    residual: Callable[[float], float], h: float = 1e-3
) -> ConvergenceSample:
    """Evaluate a residual at h and h/2. No extrapolation."""
    return ConvergenceSample(h=h, r_h=float(residual(h)), r_half=float(residual(h / 2)))


def eval_v_dot(c: CircleVectorField, theta: ComplexLike) -> ComplexLike:
    """v(e^{i theta}) = i e^{i theta} sum_n c_n e^{i n theta}."""
    th = np.asarray(theta, dtype=np.float64)
    acc = np.zeros(th.shape, dtype=np.complex128)
    for n in range(-c.N, c.N + 1):
        acc = acc + c.c(n) * np.exp(1j * n * th)
    return unwrap_scalar(1j * np.exp(1j * th) * acc, theta)


def chain_residual(phi: CuspFormCoeffs, x: ComplexLike) -> ComplexLike:
    """|v(e^{2 pi i x}) - p'(x) w(x)| with p(x) = e^{2 pi i x}."""
    xs = np.asarray(x, dtype=np.float64)
    field = UHPVariationField.from_cusp_form(phi)
    dp = TWO_PI * 1j * np.exp(TWO_PI * 1j * xs)
    lhs = as_complex_array(eval_v_dot(d0_P(phi), TWO_PI * xs))
    rhs = dp * as_complex_array(eval_w_dot(field, xs.astype(np.complex128)))
    return unwrap_scalar(np.abs(lhs - rhs), x)


def derive_a1(phi: CuspFormCoeffs) -> complex:
    """Degree-one coefficient of the disc field: a1 = i c_0 - a + conj(a)."""
    c0 = d0_P(phi).c(0)
    a = d0_B(phi).a
    return complex(1j * c0 - a + a.conjugate())


def moebius_corrected_field(phi: CuspFormCoeffs, z: ComplexLike) -> ComplexLike:
    """Velocity of sigma_{t a} plus the disc field, for a = d0_B(phi).a."""
    zz = as_complex_array(z)
    field = DiscVariationField.from_cusp_form(phi)
    res = as_complex_array(moebius_velocity(d0_B(phi).a, zz)) + as_complex_array(
        eval_omega_dot_disc(field, zz)
    )
    return unwrap_scalar(res, z)


def moebius_match_residual(phi: CuspFormCoeffs, grid: int = 128) -> float:
    """sup over `grid` boundary points of |corrected disc field - v|."""
    theta = TWO_PI * np.arange(grid, dtype=np.float64) / grid
    lhs = moebius_corrected_field(phi, np.exp(1j * theta))
    rhs = eval_v_dot(d0_P(phi), theta)
    return float(np.max(np.abs(lhs - rhs), initial=0.0))


def normalization_residual(phi: CuspFormCoeffs) -> float:
    """max(|w(0)|, |w(1)|)."""
    field = UHPVariationField.from_cusp_form(phi)
    return float(max(abs(eval_w_dot(field, 0j)), abs(eval_w_dot(field, 1 + 0j))))
