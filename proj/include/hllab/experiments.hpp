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
#include <string_view>
#include <vector>

#include "hllab/exponents.hpp"
#include "hllab/opnorm.hpp"
#include "hllab/tensor.hpp"

namespace hllab {

// ---------------------------------------------------------------------------
// Constant-one campaigns
// ---------------------------------------------------------------------------

enum class InstanceKind { random, rank_one, diagonal };

/// A group of suite instances. `dims` must have the profile's arity for
/// random and rank_one; diagonal uses dims[0] as n. value_dim > 1 makes
/// random and rank_one instances l_r-valued.
struct SuiteEntry {
  InstanceKind kind = InstanceKind::random;
  std::vector<std::size_t> dims;
  std::size_t count = 1;
  std::size_t value_dim = 1;
};

struct Suite {
  std::vector<SuiteEntry> entries;
  std::uint64_t seed = 0;
};

/// Parses "random:3x3:200,rank_one:3x3:50,diagonal:8". An optional fourth
/// field "dN" sets value_dim, e.g. "random:3x3:100:d3".
Suite parse_suite(std::string_view text, std::uint64_t seed);

enum class Verdict { pass, needs_review, fail, informational };
std::string_view to_string(Verdict v);

struct InequalityReport {
  std::string instance;
  double mixed_norm = 0.0;
  NormEstimate operator_norm;
  double ratio = 0.0;
  Verdict verdict = Verdict::informational;
};

struct VerifyOptions {
  double tolerance = 1e-9;
  /// Ratios above 1 + tolerance but within 1 + review_band are flagged for
  /// review instead of failing.
  double review_band = 1e-6;
  AscentOptions ascent;
};

/// Verdict for one instance: only exact operator norms are graded.
Verdict grade(double ratio, NormStatus status, const VerifyOptions& options);

struct CampaignResult {
  std::vector<InequalityReport> reports;
  bool passed() const;
  std::size_t count(Verdict v) const;
  double max_exact_ratio() const;
};

/// Generates instance i of a suite entry; deterministic in (seed, entry, i).
CoefficientTensor make_instance(const Suite& suite, std::size_t entry, std::size_t i, const ExponentProfile& profile);

/// Checks mixed_norm(T, q) <= ||T|| with constant 1 on every suite instance.
/// Only instances whose operator norm is exact are graded; the rest are
/// reported as informational. Throws ValidationError for inadmissible q.
CampaignResult verify_constant_one(const ExponentProfile& profile, const MixedExponents& q, const Suite& suite,
                                   const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Growth scans
// ---------------------------------------------------------------------------

enum class GrowthVerdict { bounded, growing };
std::string_view to_string(GrowthVerdict v);

inline constexpr double kDefaultSlopeThreshold = 0.01;

struct GrowthReport {
  std::string family;
  std::vector<std::size_t> sizes;
  std::vector<double> mixed_norms;
  std::vector<double> operator_norms;
  std::vector<double> ratios;
  double fitted_slope = 0.0;
  double theoretical_slope = 0.0;
  double slope_threshold = kDefaultSlopeThreshold;
  std::size_t lifted_levels = 0;
  GrowthVerdict verdict = GrowthVerdict::bounded;
};

/// Least-squares slope of log(ratio) against log(n) over the largest
/// ceil(N/2) sizes.
double fit_log_log_slope(const std::vector<std::size_t>& sizes, const std::vector<double>& ratios);

/// Ratio mixed_norm / ||A|| along the diagonal family, both from closed-form
/// O(n) evaluations; theoretical slope 1/q_1 - 1/lambda_1.
GrowthReport growth_scan(const ExponentProfile& profile, const MixedExponents& q, const std::vector<std::size_t>& sizes,
                         double slope_threshold = kDefaultSlopeThreshold);

/// Probes the k-th threshold (k >= 2, 1-based): the diagonal family on slots
/// k..m lifted k-1 times. Requires q_j admissible for j < k.
GrowthReport lower_index_scan(const ExponentProfile& profile, std::size_t k, const MixedExponents& q,
                              const std::vector<std::size_t>& sizes, double slope_threshold = kDefaultSlopeThreshold);

}  // namespace hllab
