# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from typing import (
    Any,
    Callable,
    Dict,
    Generic,
    Iterator,
    Mapping,
    Sequence,
    Tuple,
    Union,
    get_args,
)

import immutables
import numpy as np
from pydantic_core import core_schema
from typing_extensions import TypeVar

TWO_PI = 2.0 * np.pi
FOUR_PI_SQ = 4.0 * np.pi**2

# Slack admitted on the boundary of the unit disc and the real axis.
BOUNDARY_TOL = 1e-12

ComplexLike = Union[complex, float, int, np.ndarray]


class TeichcurveError(Exception):
    """Base class for errors raised by teichcurve. Carries a CLI exit code."""

    exit_code: int = 2


class DomainError(TeichcurveError, ValueError):
    """Evaluation point outside the model domain."""

    exit_code = 2


class InputFormatError(TeichcurveError, ValueError):
    """A file could not be read, parsed or written."""

    exit_code = 2


class InvalidMapError(TeichcurveError, ValueError):
    """Sampled map is malformed or not orientation preserving."""

    exit_code = 2


class BranchAmbiguityError(TeichcurveError, ValueError):
    """Samples too sparse to track the branch of the lift unambiguously."""

    exit_code = 4


class DegenerateInputError(TeichcurveError, ZeroDivisionError):
    """Input is zero where a nonzero quantity is required."""

    exit_code = 3


def as_complex_tuple(values: Sequence[Any]) -> Tuple[complex, ...]:
    out = []
    for v in values:
        if isinstance(v, (list, tuple)):
            if len(v) != 2:
                raise ValueError(f"Expected [re, im] pair, got {v!r}")
            out.append(complex(float(v[0]), float(v[1])))
        else:
            out.append(complex(v))
    return tuple(out)


def as_complex_array(z: ComplexLike) -> np.ndarray:
    return np.asarray(z, dtype=np.complex128)


def unwrap_scalar(value: np.ndarray, like: ComplexLike) -> ComplexLike:
    """Return a Python scalar when the caller passed a scalar."""
    if np.ndim(like) == 0:
        return complex(value) if np.iscomplexobj(value) else float(value)
    return value


T_K = TypeVar("T_K")
T_V = TypeVar("T_V")


class ImmutableMap(Generic[T_K, T_V]):
    """Hashable mapping usable as a field of frozen pydantic models."""

    data: immutables.Map[T_K, T_V]

    def __init__(self, data: Mapping[T_K, T_V]):
        self.data = immutables.Map(data)

    @classmethod
    def __get_pydantic_core_schema__(
        cls, source: Any, handler: Callable[[Any], core_schema.CoreSchema]
    ) -> core_schema.CoreSchema:
        instance_schema = core_schema.is_instance_schema(cls)

        args = get_args(source)
        if args:
            dict_schema = handler(Dict[args[0], args[1]])
        else:
            dict_schema = handler(Dict)

        non_instance_schema = core_schema.with_info_after_validator_function(
            lambda value, _info: cls(value), dict_schema
        )
        return core_schema.union_schema([instance_schema, non_instance_schema])

    def __iter__(self):
        return self.data.__iter__()

    def __getitem__(self, key: T_K) -> T_V:
        return self.data[key]

    def __len__(self) -> int:
        return len(self.data)

    def __hash__(self) -> int:
        return hash(self.data)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ImmutableMap):
            return self.data == other.data
        return NotImplemented

    def keys(self) -> Iterator[T_K]:
        return self.data.keys()

    def items(self) -> Iterator[Tuple[T_K, T_V]]:
        return self.data.items()

    def values(self) -> Iterator[T_V]:
        return self.data.values()
