# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

import json
from typing import List, Optional, Tuple

from pydantic import BaseModel, ValidationError, model_validator
from typing_extensions import Literal, TypeAlias

from teichcurve.beltrami import HarmonicBeltramiDisc
from teichcurve.bers_map import CircleVectorField, CurveTangent
from teichcurve.common import InputFormatError
from teichcurve.io.report import render_json
from teichcurve.series import CuspFormCoeffs

ModelTag: TypeAlias = Literal["uhp-cusp", "disc-taylor", "circle-field"]
Pair: TypeAlias = Tuple[float, float]


def _pairs(values) -> List[Pair]:
    return [(float(complex(v).real), float(complex(v).imag)) for v in values]


class CoeffsFile(BaseModel, frozen=True):
    """Coefficient file.

    uhp-cusp: alpha_1..alpha_N, start_index 1.
    disc-taylor: beta_2..beta_N, start_index 2, optional puncture velocity `a`.
    circle-field: c_-N..c_N, start_index -N.
    """

    model: ModelTag
    start_index: int
    coefficients: Tuple[Pair, ...] = ()
    a: Optional[Pair] = None

    @model_validator(mode="after")
    def validate_layout(self):
        count = len(self.coefficients)
        if self.model == "uhp-cusp" and self.start_index != 1:
            raise ValueError("uhp-cusp coefficients start at index 1")
        if self.model == "disc-taylor" and self.start_index != 2:
            raise ValueError("disc-taylor coefficients start at index 2")
        if self.model == "circle-field":
            if count % 2 != 1:
                raise ValueError("circle-field needs 2N+1 coefficients")
            if self.start_index != -(count // 2):
                raise ValueError(
                    f"circle-field with {count} coefficients starts at {-(count // 2)}"
                )
        if self.a is not None and self.model != "disc-taylor":
            raise ValueError("Only disc-taylor files carry a puncture velocity 'a'")
        return self

    def values(self) -> Tuple[complex, ...]:
        return tuple(complex(re, im) for re, im in self.coefficients)

    def to_cusp_form(self) -> CuspFormCoeffs:
        self._expect("uhp-cusp")
        return CuspFormCoeffs(coeffs=self.values())

    def to_circle_field(self) -> CircleVectorField:
        self._expect("circle-field")
        try:
            return CircleVectorField(coeffs=self.values())
        except ValidationError as e:
            raise InputFormatError(f"Invalid circle field: {e}") from e

    def to_curve_tangent(self) -> CurveTangent:
        self._expect("disc-taylor")
        a = complex(*self.a) if self.a is not None else 0j
        return CurveTangent(lam=HarmonicBeltramiDisc.from_betas(self.values()), a=a)

    def _expect(self, model: str):
        if self.model != model:
            raise InputFormatError(f"Expected a {model} file, got {self.model}")

    @classmethod
    def from_cusp_form(cls, phi: CuspFormCoeffs) -> "CoeffsFile":
        return cls(model="uhp-cusp", start_index=1, coefficients=_pairs(phi.coeffs))

    @classmethod
    def from_circle_field(cls, field: CircleVectorField) -> "CoeffsFile":
        return cls(
            model="circle-field",
            start_index=-field.N,
            coefficients=_pairs(field.coeffs),
        )

    @classmethod
    def from_curve_tangent(cls, tangent: CurveTangent) -> "CoeffsFile":
        (a,) = _pairs([tangent.a])
        return cls(
            model="disc-taylor",
            start_index=2,
            coefficients=_pairs(tangent.betas),
            a=a,
        )

    def to_json(self) -> str:
        return render_json(self.model_dump(exclude_none=True))


def load_coeffs_file(path: str) -> CoeffsFile:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        return CoeffsFile.model_validate(data)
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise InputFormatError(f"Could not read coefficient file {path}: {e}") from e


def load_cusp_form(path: str) -> CuspFormCoeffs:
    return load_coeffs_file(path).to_cusp_form()


def save_coeffs_file(path: str, data: CoeffsFile):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(data.to_json())
    except OSError as e:
        raise InputFormatError(f"Could not write coefficient file {path}: {e}") from e
