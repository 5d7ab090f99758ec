# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

import logging
from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, model_validator

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
    disc_potential,
    disc_quadratic_differential,
    eval_cusp_form,
    eval_series,
)

logger = logging.getLogger(__name__)


def sup_bound(phi: CuspFormCoeffs) -> float:
    """Triangle-inequality bound on sup |2 y^2 phi|.

    sup_y 2 y^2 exp(-2 pi n y) is attained at y = 1/(pi n) with value
    2 / (e^2 pi^2 n^2).
    """
    return float(
        sum(
            abs(alpha) * 2.0 / (np.e**2 * np.pi**2 * n**2)
            for n, alpha in enumerate(phi.coeffs, start=1)
        )
    )


class HarmonicBeltramiUHP(BaseModel, frozen=True):
    """mu(z) = -2 y^2 conj(phi(z))."""

    phi: CuspFormCoeffs = CuspFormCoeffs()

    @model_validator(mode="after")
    def warn_if_large(self):
        bound = sup_bound(self.phi)
        if bound > 1.0:
            logger.warning(
                f"Beltrami differential sup bound {bound:.6g} exceeds 1; "
                "fine for a tangent vector, not a Beltrami coefficient"
            )
        return self


class HarmonicBeltramiDisc(BaseModel, frozen=True):
    """lambda(z) = -((1 - |z|^2)^2 / 2) conj(phi_lambda(z)).

    `phi_lambda` holds (n^3 - n) beta_n at power n - 2 for n >= 2.
    """

    phi_lambda: DiscTaylorCoeffs = DiscTaylorCoeffs()

    @classmethod
    def from_betas(cls, betas: Sequence[ComplexLike]) -> "HarmonicBeltramiDisc":
        return cls(phi_lambda=disc_quadratic_differential(betas))

    @property
    def betas(self) -> Tuple[complex, ...]:
        """beta_n for n = 2..N, recovered from phi_lambda."""
        dense = self.phi_lambda.dense()
        return tuple(
            complex(c) / float((k + 2) ** 3 - (k + 2)) for k, c in enumerate(dense)
        )

    def potential(self) -> DiscTaylorCoeffs:
        return disc_potential(self.betas)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.phi_lambda.coeffs)


def eval_mu(mu: HarmonicBeltramiUHP, z: ComplexLike) -> ComplexLike:
    zz = as_complex_array(z)
    if np.any(zz.imag <= 0):
        raise DomainError("mu is evaluated in the open upper half-plane")
    res = -2.0 * zz.imag**2 * np.conj(eval_cusp_form(mu.phi, zz))
    return unwrap_scalar(res, z)


def eval_lambda(lam: HarmonicBeltramiDisc, z: ComplexLike) -> ComplexLike:
    zz = as_complex_array(z)
    r2 = (zz * np.conj(zz)).real
    if np.any(r2 > (1.0 + BOUNDARY_TOL) ** 2):
        raise DomainError("lambda is evaluated on the closed unit disc")
    s = 1.0 - r2
    res = -(s * s / 2.0) * np.conj(eval_series(lam.phi_lambda, zz, 0))
    return unwrap_scalar(res, z)


def covering_preimage(w: ComplexLike, branch: int = 0) -> ComplexLike:
    """z with exp(2 pi i z) = w and Im z > 0; `branch` shifts by an integer."""
    ww = as_complex_array(w)
    aw = np.abs(ww)
    if np.any(aw == 0) or np.any(aw >= 1):
        raise DomainError("Covering preimage needs 0 < |w| < 1")
    z = np.log(ww) / (TWO_PI * 1j) + branch
    return unwrap_scalar(z, w)


def pushdown_covering(
    mu: HarmonicBeltramiUHP, w: ComplexLike, branch: int = 0
) -> ComplexLike:
    """nu(w) = mu(z) p'(z) / conj(p'(z)) for p(z) = exp(2 pi i z), p(z) = w."""
    ww = as_complex_array(w)
    z = as_complex_array(covering_preimage(ww, branch))
    dp = TWO_PI * 1j * ww
    res = eval_mu(mu, z) * dp / np.conj(dp)
    return unwrap_scalar(res, w)
