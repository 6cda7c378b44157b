# Copyright 2026 The hllab Authors.
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
"""Mixed-sum exponents, nested mixed norms and multilinear operator norms."""

from ._hllab import (
    NormEstimate,
    Tensor,
    ValidationError,
    admissible,
    ascend,
    bilinear_classics,
    conjugate,
    diagonal_mixed_norm,
    diagonal_norm_closed_form,
    diagonal_operator,
    enumerable,
    enumerate_exact,
    flat_norm,
    growth_scan,
    lambda_exponent,
    lambda_thresholds,
    lift_operator,
    lower_index_scan,
    mixed_norm,
    operator_norm,
    parse_exponent,
    permute_axes,
    rademacher,
    rademacher_matrix_norm,
    slice_operator,
    verify_constant_one,
)

__all__ = [name for name in dir() if not name.startswith("_")]
