# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
"""
Derivative of the Bers isomorphism at the origin, as coefficient transforms.

d0_P sends a cusp form to a tangent vector of the circle-homeomorphism model,
d0_B sends it to a tangent vector (lambda, a) of the Teichmueller curve.
"""

from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from teichcurve.beltrami import HarmonicBeltramiDisc
from teichcurve.common import FOUR_PI_SQ, ComplexLike, as_complex_tuple
from teichcurve.series import CuspFormCoeffs

SUM_TOLERANCE = 1e-12


class CircleVectorField(BaseModel, frozen=True):
    """Fourier coefficients c_n, n = -N..N, of a vector field on S^1.

    `coeffs[N + n]` is c_n.
    """

    coeffs: Tuple[complex, ...] = (0j,)

    @field_validator("coeffs", mode="before")
    @classmethod
    def _coerce(cls, value):
        return as_complex_tuple(value)

    @model_validator(mode="after")
    def check_tangent(self):
        if len(self.coeffs) % 2 != 1:
            raise ValueError(
                f"Circle field needs 2N+1 coefficients, got {len(self.coeffs)}"
            )
        n_max = self.N
        for n in range(0, n_max + 1):
            if self.coeffs[n_max - n] != self.coeffs[n_max + n].conjugate():
                raise ValueError(f"Circle field is not real: c_-{n} != conj(c_{n})")
        total = abs(sum(self.coeffs))
        scale = sum(abs(c) for c in self.coeffs)
        if total > SUM_TOLERANCE * scale:
            raise ValueError(
                f"Circle field does not fix 1: |sum c_n| = {total:.3e} "
                f"(relative {total / scale:.3e})"
            )
        return self

    @classmethod
    def from_modes(
        cls, positive: Sequence[ComplexLike], c0: float = 0.0
    ) -> "CircleVectorField":
        """Build from c_1..c_N and c_0, mirroring negative modes by conjugation."""
        pos = [complex(c) for c in positive]
        neg = [c.conjugate() for c in reversed(pos)]
        return cls(coeffs=tuple(neg + [complex(float(c0), 0.0)] + pos))

    @property
    def N(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def c(self, n: int) -> complex:
        if abs(n) > self.N:
            return 0j
        return self.coeffs[self.N + n]

    def positive_modes(self) -> Tuple[complex, ...]:
        return self.coeffs[self.N + 1 :]

    def total(self) -> complex:
        return complex(np.sum(np.array(self.coeffs, dtype=np.complex128)))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


class CurveTangent(BaseModel, frozen=True):
    """Tangent vector to the Teichmueller curve: a disc Beltrami differential
    and the puncture velocity a."""

    lam: HarmonicBeltramiDisc = HarmonicBeltramiDisc()
    a: complex = 0j

    @property
    def betas(self) -> Tuple[complex, ...]:
        return self.lam.betas


def circle_modes(phi: CuspFormCoeffs) -> Tuple[complex, ...]:
    """c_n = (i / 4 pi^2) alpha_n / n^3 for n = 1..N."""
    return tuple(
        1j * alpha / (FOUR_PI_SQ * n**3) for n, alpha in enumerate(phi.coeffs, start=1)
    )


def d0_P(phi: CuspFormCoeffs) -> CircleVectorField:
    positive = circle_modes(phi)
    # c_0 = (1 / 4 pi^2 i)(S - conj(S)), S = sum alpha_n / n^3, which is the
    # value making sum_n c_n vanish
    c0 = -2.0 * float(np.sum(np.array([c.real for c in positive], dtype=np.float64)))
    return CircleVectorField.from_modes(positive, c0)


def d0_P_inverse(field: CircleVectorField) -> CuspFormCoeffs:
    """alpha_n = -4 pi^2 i n^3 c_n; c_0 and negative modes are determined."""
    return CuspFormCoeffs(
        coeffs=tuple(
            -FOUR_PI_SQ * 1j * n**3 * c
            for n, c in enumerate(field.positive_modes(), start=1)
        )
    )


def curve_betas(phi: CuspFormCoeffs) -> Tuple[complex, ...]:
    """beta_n = -(1 / 4 pi^2) alpha_n / n^3 for n = 2..N."""
    return tuple(
        -phi.alpha(n) / (FOUR_PI_SQ * n**3) for n in range(2, phi.N + 1)
    )


def d0_B(phi: CuspFormCoeffs) -> CurveTangent:
    a = -phi.alpha(1).conjugate() / FOUR_PI_SQ
    return CurveTangent(lam=HarmonicBeltramiDisc.from_betas(curve_betas(phi)), a=a)


def beta_c_consistency(phi: CuspFormCoeffs) -> float:
    """max_{n>=2} |beta_n - i c_n| between the outputs of d0_B and d0_P."""
    field = d0_P(phi)
    betas = d0_B(phi).betas
    if not betas:
        return 0.0
    return max(abs(b - 1j * field.c(n)) for n, b in enumerate(betas, start=2))
