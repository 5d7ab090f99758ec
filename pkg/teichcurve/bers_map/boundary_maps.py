# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
"""
Sampled boundary homeomorphisms and their lifts to the universal cover.

A circle map e^{2 pi i x} -> e^{2 pi i y} fixing 1 is stored by its angular
samples (x_k, y_k) in [0, 1). Its lift u to the real line fixes the integers
and satisfies u(x + 1) = u(x) + 1. Between samples both are interpolated
linearly in angular/line coordinates.
"""

from typing import List, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ValidationError, field_validator, model_validator

from teichcurve.bers_map.moebius import MoebiusDisc, moebius_apply
from teichcurve.common import TWO_PI, BranchAmbiguityError, InvalidMapError

Probe = Tuple[float, float]


def _check_strictly_increasing(values: np.ndarray, what: str):
    if len(values) > 1 and np.any(np.diff(values) <= 0):
        idx = int(np.argmax(np.diff(values) <= 0))
        raise InvalidMapError(
            f"{what} must be strictly increasing (violated after index {idx})"
        )


def _check_finite(xs: np.ndarray, ys: np.ndarray):
    if len(xs) != len(ys):
        raise InvalidMapError(f"Got {len(xs)} x samples but {len(ys)} y samples")
    if len(xs) == 0:
        raise InvalidMapError("Sampled map needs at least one sample")
    if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
        raise InvalidMapError("Sampled map contains non-finite values")


class SampledCircleMap(BaseModel, frozen=True):
    xs: Tuple[float, ...]
    ys: Tuple[float, ...]

    @model_validator(mode="after")
    def check_samples(self):
        xs = np.asarray(self.xs, dtype=np.float64)
        ys = np.asarray(self.ys, dtype=np.float64)
        _check_finite(xs, ys)
        if xs[0] != 0 or ys[0] != 0:
            raise InvalidMapError("Circle map must contain the sample (0, 0)")
        if np.any(xs < 0) or np.any(xs >= 1) or np.any(ys < 0) or np.any(ys >= 1):
            raise InvalidMapError("Circle map samples must lie in [0, 1)")
        _check_strictly_increasing(xs, "x")
        return self

    @classmethod
    def from_samples(
        cls, xs: Sequence[float], ys: Sequence[float]
    ) -> "SampledCircleMap":
        try:
            return cls(xs=tuple(float(x) for x in xs), ys=tuple(float(y) for y in ys))
        except ValidationError as e:
            raise InvalidMapError(str(e)) from e

    @classmethod
    def identity(cls, count: int) -> "SampledCircleMap":
        xs = np.arange(count, dtype=np.float64) / count
        return cls.from_samples(xs, xs)

    def evaluate(self, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """Angular coordinate in [0, 1) of the image of e^{2 pi i x}."""
        return np.mod(lift_circle_map(self).evaluate(x), 1.0)

    def __len__(self) -> int:
        return len(self.xs)


class SampledLineMap(BaseModel, frozen=True):
    xs: Tuple[float, ...]
    us: Tuple[float, ...]

    @model_validator(mode="after")
    def check_samples(self):
        xs = np.asarray(self.xs, dtype=np.float64)
        us = np.asarray(self.us, dtype=np.float64)
        _check_finite(xs, us)
        if xs[0] != 0 or xs[-1] != 1:
            raise InvalidMapError("Line map samples must run from x = 0 to x = 1")
        if us[0] != 0 or us[-1] != 1:
            raise InvalidMapError("Line map must satisfy u(0) = 0 and u(1) = 1")
        _check_strictly_increasing(xs, "x")
        _check_strictly_increasing(us, "u")
        return self

    @classmethod
    def from_samples(cls, xs: Sequence[float], us: Sequence[float]) -> "SampledLineMap":
        try:
            return cls(xs=tuple(float(x) for x in xs), us=tuple(float(u) for u in us))
        except ValidationError as e:
            raise InvalidMapError(str(e)) from e

    def evaluate(self, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """u(x) with the periodic extension u(x + k) = u(x) + k."""
        x = np.asarray(x, dtype=np.float64)
        k = np.floor(x)
        res = np.interp(x - k, self.xs, self.us) + k
        if res.ndim == 0:
            return float(res)
        return res

    def __len__(self) -> int:
        return len(self.xs)


def lift_circle_map(eta: SampledCircleMap) -> SampledLineMap:
    # raw angle of the image of x = 1 is 0; unwrapping must carry it to 1
    raw = np.append(np.asarray(eta.ys, dtype=np.float64), 0.0)
    lifted = np.unwrap(raw, period=1.0)

    winding = int(np.rint(lifted[-1]))
    steps = np.diff(lifted)
    if winding != 1 or np.any(np.abs(steps) >= 0.5):
        raise BranchAmbiguityError(
            f"Samples too sparse to track the lift (unwrapped degree {winding}); "
            "consecutive images must subtend less than half a turn"
        )
    lifted[-1] = 1.0
    if np.any(np.diff(lifted) <= 0):
        idx = int(np.argmax(np.diff(lifted) <= 0))
        raise InvalidMapError(
            f"Circle map is not orientation preserving near x = {eta.xs[idx]:.6g}"
        )
    xs = np.append(np.asarray(eta.xs, dtype=np.float64), 1.0)
    return SampledLineMap.from_samples(xs, lifted)


def descend_line_map(u: SampledLineMap) -> SampledCircleMap:
    xs = np.asarray(u.xs[:-1], dtype=np.float64)
    ys = np.mod(np.asarray(u.us[:-1], dtype=np.float64), 1.0)
    return SampledCircleMap.from_samples(xs, ys)


def sample_moebius_boundary(w: complex, count: int) -> SampledCircleMap:
    """sigma_w restricted to S^1, sampled on `count` equispaced angles."""
    if count < 1:
        raise ValueError(f"Need at least one sample, got {count}")
    xs = np.arange(count, dtype=np.float64) / count
    images = moebius_apply(MoebiusDisc(w=w), np.exp(1j * TWO_PI * xs))
    ys = np.mod(np.angle(images) / TWO_PI, 1.0)
    ys[0] = 0.0  # sigma_w fixes 1
    return SampledCircleMap.from_samples(xs, ys)


def compose_circle_maps(
    eta1: SampledCircleMap, eta2: SampledCircleMap, xs: Sequence[float]
) -> SampledCircleMap:
    """eta1 o eta2 sampled at `xs` (which must start at 0)."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = eta1.evaluate(eta2.evaluate(xs))
    return SampledCircleMap.from_samples(xs, ys)


def group_hom_residual(
    eta1: SampledCircleMap, eta2: SampledCircleMap, grid: int
) -> float:
    """sup |lift(eta1 o eta2)(x) - lift(eta1)(lift(eta2)(x))| over a grid.

    The composite is sampled on the same grid, so at the grid points this
    measures only how consistently the lift of the composite is tracked. Use
    `moebius_composition_error` to compare against an exact composite.
    """
    xs = np.arange(grid, dtype=np.float64) / grid
    lift1 = lift_circle_map(eta1)
    lift2 = lift_circle_map(eta2)
    lifted_composite = lift_circle_map(compose_circle_maps(eta1, eta2, xs))
    direct = lift1.evaluate(lift2.evaluate(xs))
    return float(np.max(np.abs(lifted_composite.evaluate(xs) - direct)))


def moebius_composition_error(
    w1: complex, w2: complex, samples: int, grid: int
) -> float:
    """sup |lift(eta1)(lift(eta2)(x)) - lift(sigma_w1 o sigma_w2)(x)| over a grid.

    eta1 and eta2 are the boundary maps of sigma_w1 and sigma_w2 sampled at
    `samples` points; the composite is evaluated exactly through
    `MoebiusDisc.compose`.
    """
    m1, m2 = MoebiusDisc(w=w1), MoebiusDisc(w=w2)
    lift1 = lift_circle_map(sample_moebius_boundary(m1.w, samples))
    lift2 = lift_circle_map(sample_moebius_boundary(m2.w, samples))
    exact = lift_circle_map(sample_moebius_boundary(m1.compose(m2).w, grid))
    xs = np.asarray(exact.xs)
    composed = lift1.evaluate(lift2.evaluate(xs))
    return float(np.max(np.abs(composed - np.asarray(exact.us))))


def roundtrip_residual(eta: SampledCircleMap) -> float:
    """max |descend(lift(eta)) - eta| at the samples."""
    back = descend_line_map(lift_circle_map(eta))
    return float(
        np.max(np.abs(np.asarray(back.ys) - np.asarray(eta.ys)), initial=0.0)
    )


def generate_probes(rng: np.random.Generator, count: int) -> List[Probe]:
    xs = rng.uniform(0.0, 1.0, size=count)
    ts = rng.uniform(1e-6, 0.25, size=count)
    return [(float(x), float(t)) for x, t in zip(xs, ts)]


def _qs_ratios_circle(eta: SampledCircleMap, probes: np.ndarray) -> np.ndarray:
    x, t = probes[:, 0], probes[:, 1]
    if np.any(t <= 0) or np.any(t >= 0.25):
        raise ValueError("Circle probes need 0 < t < 1/4")
    lift = lift_circle_map(eta)

    def omega(s):
        return np.exp(1j * TWO_PI * lift.evaluate(s))

    num = np.abs(omega(x + t) - omega(x))
    den = np.abs(omega(x) - omega(x - t))
    if np.any(den == 0) or np.any(num == 0):
        raise InvalidMapError("Degenerate quasisymmetry ratio (coincident images)")
    return num / den


def _qs_ratios_line(u: SampledLineMap, probes: np.ndarray) -> np.ndarray:
    x, t = probes[:, 0], probes[:, 1]
    if np.any(t <= 0):
        raise ValueError("Line probes need t > 0")
    num = u.evaluate(x + t) - u.evaluate(x)
    den = u.evaluate(x) - u.evaluate(x - t)
    if np.any(den <= 0) or np.any(num <= 0):
        raise InvalidMapError("Degenerate quasisymmetry ratio (non-increasing map)")
    return num / den


def qs_ratio_estimate(
    sampled: Union[SampledCircleMap, SampledLineMap], probes: Sequence[Probe]
) -> float:
    """Probe-based lower bound for the quasisymmetry constant M."""
    arr = np.asarray(probes, dtype=np.float64).reshape(-1, 2)
    if len(arr) == 0:
        raise ValueError("No probes given")
    if isinstance(sampled, SampledCircleMap):
        ratios = _qs_ratios_circle(sampled, arr)
    elif isinstance(sampled, SampledLineMap):
        ratios = _qs_ratios_line(sampled, arr)
    else:
        raise TypeError(f"Unsupported map type {type(sampled).__name__}")
    return float(np.max(np.maximum(ratios, 1.0 / ratios)))
