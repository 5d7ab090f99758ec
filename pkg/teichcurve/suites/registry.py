# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1

from typing import Dict, List

from teichcurve.suites.base import VerificationSuite
from teichcurve.suites.chain import ChainSuite
from teichcurve.suites.dbar import DbarSuite
from teichcurve.suites.moebius_match import MoebiusMatchSuite

STATIC_SUITES: List[VerificationSuite] = [
    DbarSuite(),
    ChainSuite(),
    MoebiusMatchSuite(),
]

REGISTERED_SUITES: Dict[str, VerificationSuite] = {
    suite.name(): suite for suite in STATIC_SUITES
}
