# Copyright (C) 2025 Arcee AI
# SPDX-License-Identifier: BUSL-1.1
