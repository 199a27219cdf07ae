# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Finite fans from chain descriptions."""

from fanforge._core import (
    FanforgeError,
    NotAFanError,
    OrderMismatchError,
    ResourceError,
    StructuralError,
    UsageError,
    chain_info,
    check_forest,
    isomorphism,
    normalize_chain,
    normalize_forest,
    realize,
    represent,
    run_suites,
    to_dot,
)

__all__ = [
    "FanforgeError",
    "NotAFanError",
    "OrderMismatchError",
    "ResourceError",
    "StructuralError",
    "UsageError",
    "chain_info",
    "check_forest",
    "isomorphism",
    "normalize_chain",
    "normalize_forest",
    "realize",
    "represent",
    "run_suites",
    "to_dot",
]
