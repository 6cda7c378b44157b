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
#include <span>
#include <string>
#include <vector>

#include "hllab/exponent.hpp"
#include "hllab/exponents.hpp"

namespace hllab {

/// Refuse dense tensors with more scalar cells than this unless the caller
/// raises the cap explicitly.
inline constexpr std::size_t kDefaultMaxCells = std::size_t{1} << 28;

/// Dense coefficient tensor of an m-linear operator: the entry at
/// (j_1, ..., j_m) is A(e_{j_1}, ..., e_{j_m}), a vector of length
/// `value_dim` measured in l_{value_norm}. Storage is row-major with j_1
/// slowest and the value components fastest.
///
/// Immutable once built; safe to share between threads.
class CoefficientTensor {
 public:
  CoefficientTensor(std::vector<std::size_t> dims, std::size_t value_dim, Exponent value_norm,
                    std::vector<double> entries, std::size_t max_cells = kDefaultMaxCells);

  /// Scalar-valued tensor (value_dim 1).
  CoefficientTensor(std::vector<std::size_t> dims, std::vector<double> entries,
                    std::size_t max_cells = kDefaultMaxCells);

  static CoefficientTensor zeros(std::vector<std::size_t> dims, std::size_t value_dim = 1,
                                 Exponent value_norm = Exponent(2.0), std::size_t max_cells = kDefaultMaxCells);

  std::size_t arity() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t value_dim() const { return value_dim_; }
  Exponent value_norm() const { return value_norm_; }
  bool scalar_valued() const { return value_dim_ == 1; }

  /// Number of index tuples (product of dims).
  std::size_t index_count() const { return entries_.size() / value_dim_; }
  std::span<const double> entries() const { return entries_; }

  /// Value vector at a flat index tuple position.
  std::span<const double> entry(std::size_t flat) const {
    return std::span<const double>(entries_).subspan(flat * value_dim_, value_dim_);
  }
  std::span<const double> entry(std::span<const std::size_t> index) const { return entry(flat_index(index)); }
  std::size_t flat_index(std::span<const std::size_t> index) const;

  /// ||entry||_{value_norm} for every index tuple, in storage order.
  std::vector<double> entry_norms() const;

  CoefficientTensor scaled(double c) const;

  friend bool operator==(const CoefficientTensor& a, const CoefficientTensor& b);

 private:
  std::vector<std::size_t> dims_;
  std::size_t value_dim_;
  Exponent value_norm_;
  std::vector<double> entries_;
};

/// Nested mixed norm
///   ( sum_{j1} ( sum_{j2} ... ( sum_{jm} ||T[j]||^{q_m} )^{q_{m-1}/q_m} ... )^{q_1/q_2} )^{1/q_1},
/// with a supremum at every level where q_k = ∞. Levels are reduced
/// innermost first in ascending index order, so the result is bitwise
/// reproducible.
double mixed_norm(const CoefficientTensor& t, const MixedExponents& q);

/// (sum over all index tuples of ||T[j]||^s)^{1/s}, evaluated in a single
/// unnested pass. Agrees with mixed_norm(t, (s, ..., s)).
double flat_norm(const CoefficientTensor& t, Exponent s);

/// Axis k of the result is axis perm[k] of t (0-based).
CoefficientTensor permute_axes(const CoefficientTensor& t, std::span<const std::size_t> perm);

/// Tensor exchange format:
///   {"dims": [...], "value_dim": d, "value_norm": rho | "inf", "entries": [...]}
/// Doubles are written in shortest round-trip form.
std::string to_json(const CoefficientTensor& t, int indent = -1);
CoefficientTensor tensor_from_json(const std::string& text, std::size_t max_cells = kDefaultMaxCells);

CoefficientTensor load_tensor(const std::string& path, std::size_t max_cells = kDefaultMaxCells);
void save_tensor(const CoefficientTensor& t, const std::string& path);

}  // namespace hllab
