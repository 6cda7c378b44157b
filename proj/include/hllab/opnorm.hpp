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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hllab/exponents.hpp"
#include "hllab/tensor.hpp"

namespace hllab {

enum class NormStatus { exact, lower_bound };

std::string_view to_string(NormStatus s);

/// Value of ||A|| over the product of l_{p_k} unit balls, together with the
/// arguments that achieve it. `status == exact` only for enumeration or a
/// closed form; ascent results are always lower bounds.
struct NormEstimate {
  double value = 0.0;
  NormStatus status = NormStatus::lower_bound;
  int restarts_used = 0;
  int iterations = 0;
  int reinitializations = 0;
  std::vector<std::vector<double>> argmax;
};

struct AscentOptions {
  std::uint64_t seed = 0;
  int restarts = 16;
  int max_sweeps = 500;
  double relative_tolerance = 1e-10;
  unsigned threads = 1;
};

/// Enumeration is refused beyond 2^max_bits sign patterns.
inline constexpr std::size_t kEnumerationMaxBits = 24;

/// A(x_1, ..., x_m), a vector of length value_dim.
std::vector<double> apply(const CoefficientTensor& t, std::span<const std::vector<double>> args);

/// ||A(x_1, ..., x_m)|| in the tensor's value norm.
double output_norm(const CoefficientTensor& t, std::span<const std::vector<double>> args);

/// Contracts every slot except `slot` with its argument. Returns the
/// n_slot x value_dim matrix (row-major) of induced coefficients.
std::vector<double> induced_coefficients(const CoefficientTensor& t, std::span<const std::vector<double>> args,
                                         std::size_t slot);

/// Alternating block-coordinate ascent on the product of l_p spheres.
///
/// Each sweep visits slots 1..m. For slot k the current output y is first
/// linearized by its norming functional phi in l_{rho*}, then slot k is
/// replaced by the dual-norm maximizer of the induced coefficient vector
/// c = phi o A(.., ., ..), x_j ∝ sign(c_j)|c_j|^{p_k* - 1}. The objective never
/// decreases. One all-ones start plus `restarts` random starts; the best value
/// wins with the lowest start index on ties.
NormEstimate ascend(const CoefficientTensor& t, std::span<const Exponent> p, const AscentOptions& options = {});

/// True when enumerate_exact accepts (t, p): scalar-valued with at most one
/// finite p_k, or vector-valued with all p_k = ∞, and the enumerated slots
/// fit the pattern cap.
bool enumerable(const CoefficientTensor& t, std::span<const Exponent> p, std::size_t max_bits = kEnumerationMaxBits);

/// Exact operator norm by sign enumeration. On an l_∞ slot the supremum is
/// attained at a sign vector, so every ∞ slot is enumerated; for scalar-valued
/// tensors one slot (the finite one, or else the largest) is resolved in
/// closed form as ||c||_{p*}.
NormEstimate enumerate_exact(const CoefficientTensor& t, std::span<const Exponent> p,
                             std::size_t max_bits = kEnumerationMaxBits, unsigned threads = 1);

/// Exact when enumerable, otherwise an ascent lower bound.
NormEstimate operator_norm(const CoefficientTensor& t, std::span<const Exponent> p, const AscentOptions& options = {});

/// Norm of the diagonal operator sum_j x^(1)_j ... x^(m)_j e_j into l_r (or
/// into the scalars when r = 1) at size n: exactly n^{1/lambda}, with lambda
/// the outermost threshold of the profile.
double diagonal_norm_closed_form(std::size_t n, const ExponentProfile& profile);

}  // namespace hllab
