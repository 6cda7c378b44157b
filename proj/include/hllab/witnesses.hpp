// Copyright 2026 The hllab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hllab/exponents.hpp"
#include "hllab/opnorm.hpp"
#include "hllab/tensor.hpp"

namespace hllab {

/// Diagonal witness sum_j x^(1)_j ... x^(m)_j z_j. With target_dim == 1 the
/// values are scalar ones; otherwise z_j = e_j in l_r^{target_dim}, which
/// needs target_dim >= n. Arity and r are taken from the profile.
CoefficientTensor diagonal_operator(std::size_t n, const ExponentProfile& profile, std::size_t target_dim);

/// Mixed norm of the diagonal witness of size n and arity q.size() without
/// materializing it: every inner level sees a single unit entry, the outer
/// level sums n of them. O(n).
double diagonal_mixed_norm(std::size_t n, const MixedExponents& q);

/// B(x^(1), ..., x^(m)) = x^(1)_1 A(x^(2), ..., x^(m)): leading slice 0 holds
/// t, all other leading slices are zero.
CoefficientTensor lift_operator(const CoefficientTensor& t, std::size_t leading_size);

/// Turns the last slot of a scalar tensor into the value axis:
/// S[j_1..j_{m-1}] = (T[j_1..j_{m-1}, j])_j, measured in l_rho. The storage
/// order makes this a relabelling of the same entries.
CoefficientTensor slice_operator(const CoefficientTensor& t, Exponent rho);

/// 2^n x n sign matrix built by R_1 = (1, -1)^T and
/// R_{n+1} = [ 1 | R_n ; -1 | R_n ].
class RademacherMatrix {
 public:
  static constexpr int kMaxLevel = 20;

  explicit RademacherMatrix(int level);

  int level() const { return level_; }
  std::size_t rows() const { return std::size_t{1} << level_; }
  std::size_t cols() const { return static_cast<std::size_t>(level_); }
  std::int8_t operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  /// Integer Gram matrix R^T R (n x n, row-major).
  std::vector<std::int64_t> gram() const;

  /// One row per line, entries separated by commas, no header.
  std::string to_csv() const;

 private:
  int level_;
  std::vector<std::int8_t> entries_;
};

inline RademacherMatrix rademacher(int level) { return RademacherMatrix(level); }

enum class MatrixDirection { forward, transpose };

/// Bilinear form (y, x) -> y^T M x of M = R (forward) or R^T (transpose),
/// slots ordered (output side, input side).
CoefficientTensor rademacher_bilinear(const RademacherMatrix& r, MatrixDirection direction);

/// ||M : l_t -> l_s|| for M = R or R^T. Exact for (2, 2) via the largest
/// singular value, for t = 1 (largest column norm) and for s = ∞ (largest
/// row norm in l_{t*}); otherwise an ascent lower bound on the bilinear form.
NormEstimate rademacher_matrix_norm(const RademacherMatrix& r, Exponent from, Exponent to, MatrixDirection direction,
                                    const AscentOptions& options = {});

}  // namespace hllab
