# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
"""
Truncated holomorphic series.

Classes:
    CuspFormCoeffs: Fourier coefficients of a cusp form on the upper half-plane.
    PeriodicPotential: Periodic series in q = exp(2*pi*i*z), e.g. a third
        antiderivative of a cusp form.
    DiscTaylorCoeffs: Taylor polynomial on the unit disc with a start index.

All series are finite and evaluated by Horner's rule in a fixed order, so
results are bit-identical for identical inputs.
"""

from typing import Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import BaseModel, field_validator

from teichcurve.common import (
    BOUNDARY_TOL,
    TWO_PI,
    ComplexLike,
    DomainError,
    as_complex_array,
    as_complex_tuple,
    unwrap_scalar,
)

MAX_DERIVATIVE_ORDER = 3


class CuspFormCoeffs(BaseModel, frozen=True):
    """phi(z) = sum_{n=1}^{N} alpha_n exp(2 pi i n z). `coeffs[0]` is alpha_1."""

    coeffs: Tuple[complex, ...] = ()

    @field_validator("coeffs", mode="before")
    @classmethod
    def _coerce(cls, value):
        return as_complex_tuple(value)

    @classmethod
    def from_values(cls, values: Sequence[ComplexLike]) -> "CuspFormCoeffs":
        return cls(coeffs=tuple(complex(v) for v in values))

    @classmethod
    def single_mode(cls, n: int, value: complex = 1.0) -> "CuspFormCoeffs":
        if n < 1:
            raise ValueError(f"Cusp form modes start at 1, got {n}")
        coeffs = [0j] * n
        coeffs[n - 1] = complex(value)
        return cls(coeffs=tuple(coeffs))

    @property
    def N(self) -> int:
        return len(self.coeffs)

    def alpha(self, n: int) -> complex:
        if 1 <= n <= self.N:
            return self.coeffs[n - 1]
        return 0j

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.complex128)

    def __add__(self, other: "CuspFormCoeffs") -> "CuspFormCoeffs":
        n = max(self.N, other.N)
        return CuspFormCoeffs(
            coeffs=tuple(self.alpha(k) + other.alpha(k) for k in range(1, n + 1))
        )

    def scale(self, factor: complex) -> "CuspFormCoeffs":
        return CuspFormCoeffs(coeffs=tuple(factor * a for a in self.coeffs))


class PeriodicPotential(BaseModel, frozen=True):
    """Phi(z) = sum_{n=1}^{N} gamma_n exp(2 pi i n z). `coeffs[0]` is gamma_1."""

    coeffs: Tuple[complex, ...] = ()

    @field_validator("coeffs", mode="before")
    @classmethod
    def _coerce(cls, value):
        return as_complex_tuple(value)

    @property
    def N(self) -> int:
        return len(self.coeffs)

    def derivative_coeffs(self, k: int) -> Tuple[complex, ...]:
        """Term-wise k-th derivative: gamma_n * (2 pi i n)^k."""
        if k < 0:
            raise ValueError(f"Derivative order must be non-negative, got {k}")
        return tuple(
            gamma * (TWO_PI * 1j * n) ** k
            for n, gamma in enumerate(self.coeffs, start=1)
        )


class DiscTaylorCoeffs(BaseModel, frozen=True):
    """sum_j coeffs[j] * z^(start + j)."""

    coeffs: Tuple[complex, ...] = ()
    start: int = 0

    @field_validator("coeffs", mode="before")
    @classmethod
    def _coerce(cls, value):
        return as_complex_tuple(value)

    @field_validator("start")
    @classmethod
    def _check_start(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"Disc series start index must be >= 0, got {value}")
        return value

    def coefficient(self, power: int) -> complex:
        idx = power - self.start
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return 0j

    def dense(self) -> np.ndarray:
        """Coefficients in ascending powers from z^0."""
        out = np.zeros(self.start + len(self.coeffs), dtype=np.complex128)
        out[self.start :] = self.coeffs
        return out

    def derivative(self, k: int = 1) -> "DiscTaylorCoeffs":
        if k < 0:
            raise ValueError(f"Derivative order must be non-negative, got {k}")
        if k == 0:
            return self
        dense = self.dense()
        if len(dense) <= k:
            return DiscTaylorCoeffs()
        return DiscTaylorCoeffs(coeffs=tuple(P.polyder(dense, k)), start=0)


def disc_potential(betas: Sequence[ComplexLike]) -> DiscTaylorCoeffs:
    """Phi_lambda(z) = sum_{n>=2} beta_n z^(n+1); `betas[0]` is beta_2."""
    return DiscTaylorCoeffs(coeffs=tuple(complex(b) for b in betas), start=3)


def disc_quadratic_differential(betas: Sequence[ComplexLike]) -> DiscTaylorCoeffs:
    """phi_lambda(z) = sum_{n>=2} (n^3 - n) beta_n z^(n-2)."""
    return DiscTaylorCoeffs(
        coeffs=tuple(
            float(n**3 - n) * complex(b) for n, b in enumerate(betas, start=2)
        ),
        start=0,
    )


def _nome(z: np.ndarray) -> np.ndarray:
    # reducing x mod 1 makes the q-series exactly periodic
    x = np.mod(z.real, 1.0)
    return np.exp(-TWO_PI * z.imag) * np.exp(1j * TWO_PI * x)


def _check_upper(z: np.ndarray):
    if np.any(z.imag < 0):
        raise DomainError("Periodic series are defined for Im z >= 0")


def _check_disc(z: np.ndarray):
    if np.any(np.abs(z) > 1.0 + BOUNDARY_TOL):
        raise DomainError("Disc series are defined for |z| <= 1")


def _q_horner(coeffs: Sequence[complex], q: np.ndarray) -> np.ndarray:
    # sum_{n>=1} c_n q^n = q (c_1 + q (c_2 + ...))
    acc = np.zeros_like(q)
    for c in reversed(coeffs):
        acc = acc * q + c
    return acc * q


def _z_horner(coeffs: Sequence[complex], start: int, z: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(z)
    for c in reversed(coeffs):
        acc = acc * z + c
    for _ in range(start):
        acc = acc * z
    return acc


def eval_cusp_form(phi: CuspFormCoeffs, z: ComplexLike) -> ComplexLike:
    zz = as_complex_array(z)
    _check_upper(zz)
    return unwrap_scalar(_q_horner(phi.coeffs, _nome(zz)), z)


def third_antiderivative(phi: CuspFormCoeffs) -> PeriodicPotential:
    """Phi_mu with Phi_mu''' = phi: coefficient n is (i / 8 pi^3) alpha_n / n^3."""
    factor = 1j / (8.0 * np.pi**3)
    return PeriodicPotential(
        coeffs=tuple(
            factor * alpha / float(n**3)
            for n, alpha in enumerate(phi.coeffs, start=1)
        )
    )


def eval_series(
    series: Union[PeriodicPotential, DiscTaylorCoeffs],
    z: ComplexLike,
    derivative_order: int = 0,
) -> ComplexLike:
    if derivative_order > MAX_DERIVATIVE_ORDER:
        raise NotImplementedError(
            f"Derivative order {derivative_order} unsupported "
            f"(max {MAX_DERIVATIVE_ORDER})"
        )
    if derivative_order < 0:
        raise ValueError(f"Invalid derivative order {derivative_order}")

    zz = as_complex_array(z)
    if isinstance(series, PeriodicPotential):
        _check_upper(zz)
        res = _q_horner(series.derivative_coeffs(derivative_order), _nome(zz))
    elif isinstance(series, DiscTaylorCoeffs):
        _check_disc(zz)
        d = series.derivative(derivative_order)
        res = _z_horner(d.coeffs, d.start, zz)
    else:
        raise TypeError(f"Cannot evaluate series of type {type(series).__name__}")
    return unwrap_scalar(res, z)
