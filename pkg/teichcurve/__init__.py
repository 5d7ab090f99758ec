# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
"""Derivative of the Bers isomorphism for the parabolic cyclic group."""

__version__ = "0.1.0"
