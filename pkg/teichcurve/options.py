# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

import functools
import logging
import typing
from typing import Callable, Optional, Union

import click
import numpy as np
from pydantic import BaseModel

SEED_ENVVAR = "TEICHCURVE_SEED"
DEFAULT_SEED = 42


class RunOptions(BaseModel, frozen=True):
    random_seed: int = DEFAULT_SEED
    report: Optional[str] = None
    verbose: bool = False
    quiet: bool = False

    def apply_global_options(self):
        logging.basicConfig(level=logging.INFO if self.verbose else logging.WARNING)

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.random_seed)


OPTION_HELP = {
    "random_seed": f"Seed for probe and test-point generation (env: {SEED_ENVVAR})",
    "report": "Write the JSON report to this path instead of stdout",
    "verbose": "Enable verbose logging",
    "quiet": "Suppress progress bars and other non-essential output",
}


def add_run_options(f: Callable) -> Callable:
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        arg_dict = {}
        for field_name in RunOptions.model_fields:
            if field_name in kwargs:
                arg_dict[field_name] = kwargs.pop(field_name)

        kwargs["run_options"] = RunOptions(**arg_dict)
        f(*args, **kwargs)

    for field_name, info in reversed(RunOptions.model_fields.items()):
        origin = typing.get_origin(info.annotation)
        if origin is Union:
            ty, prob_none = typing.get_args(info.annotation)
            assert prob_none is type(None)
            field_type = ty
        else:
            field_type = info.annotation

        arg_name = field_name.replace("_", "-")
        if field_type == bool:
            param_decls = [f"--{arg_name}/--no-{arg_name}"]
        else:
            param_decls = [f"--{arg_name}"]
        extra = {}
        if field_name == "verbose":
            param_decls = ["--verbose/--no-verbose", "-v"]
        if field_name == "random_seed":
            param_decls = ["--seed", "random_seed"]
            extra["envvar"] = SEED_ENVVAR

        wrapper = click.option(
            *param_decls,
            type=field_type,
            default=info.default,
            help=OPTION_HELP.get(field_name, None),
            show_default=True,
            **extra,
        )(wrapper)

    return wrapper
