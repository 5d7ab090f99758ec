# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

import numpy as np
from pydantic import BaseModel, model_validator

from teichcurve.common import (
    ComplexLike,
    DomainError,
    as_complex_array,
    unwrap_scalar,
)


class MoebiusDisc(BaseModel, frozen=True):
    """sigma_w(z) = ((1 - conj w) / (1 - w)) (z - w) / (1 - z conj w).

    The disc automorphism sending w to 0 and fixing 1.
    """

    w: complex = 0j

    @model_validator(mode="after")
    def check_inside(self):
        if not abs(self.w) < 1:
            raise ValueError(f"Moebius parameter must satisfy |w| < 1, got {self.w}")
        return self

    def apply(self, z: ComplexLike) -> ComplexLike:
        return moebius_apply(self, z)

    def inverse_apply(self, z: ComplexLike) -> ComplexLike:
        zz = as_complex_array(z)
        w = self.w
        k = 1.0 - w
        u = zz * k / np.conj(k)
        den = 1.0 + np.conj(w) * u
        if np.any(den == 0):
            raise DomainError("Point is the pole of the inverse Moebius map")
        return unwrap_scalar((u + w) / den, z)

    def compose(self, other: "MoebiusDisc") -> "MoebiusDisc":
        """sigma_self o sigma_other, which is sigma_c for c = sigma_other^-1(self.w)."""
        return MoebiusDisc(w=complex(other.inverse_apply(self.w)))


def moebius_apply(m: MoebiusDisc, z: ComplexLike) -> ComplexLike:
    zz = as_complex_array(z)
    w = m.w
    k = 1.0 - w
    num = np.conj(k) * (zz - w)
    den = k * (1.0 - zz * np.conj(w))
    if np.any(den == 0):
        raise DomainError(f"z = 1/conj(w) is the pole of sigma_{w}")
    return unwrap_scalar(num / den, z)


def moebius_velocity(a: complex, z: ComplexLike) -> ComplexLike:
    """d/dt sigma_{t a}(z) at t = 0: -a + (a - conj a) z + conj(a) z^2."""
    zz = as_complex_array(z)
    ac = np.conj(a)
    return unwrap_scalar(-a + (a - ac) * zz + ac * zz * zz, z)
