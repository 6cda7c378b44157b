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
#include <span>
#include <vector>

#include "hllab/exponent.hpp"

namespace hllab {

/// Absolute tolerance on the strict condition sum(1/p_k) < 1/r.
inline constexpr double kBoundaryTolerance = 1e-12;
/// Default tolerance for threshold comparisons in `admissible`.
inline constexpr double kAdmissibilityTolerance = 1e-9;

/// The data (m, p_1..p_m, r) of one inequality instance.
///
/// `r` is the cotype of the target space (r >= 2) or the sentinel 1 for
/// scalar-valued operators, in which case the thresholds reduce to the
/// delta exponents 1 / (1 - sum 1/p_k).
class ExponentProfile {
 public:
  /// Throws ValidationError unless every p_k > 1, r == 1 or r in [2, ∞),
  /// and sum 1/p_k < 1/r - kBoundaryTolerance.
  ExponentProfile(Exponents p, double r);

  std::size_t arity() const { return p_.size(); }
  const Exponents& p() const { return p_; }
  double r() const { return r_; }
  bool scalar_valued() const { return r_ == 1.0; }

  /// sum_{i >= k} 1/p_i, with k 1-based.
  double tail_reciprocal_sum(std::size_t k) const;

  /// Profile for slots k..m (1-based k), same r.
  ExponentProfile tail(std::size_t k) const;

 private:
  Exponents p_;
  double r_;
};

/// Nested-sum exponents q_1..q_m, each in (0, ∞].
class MixedExponents {
 public:
  explicit MixedExponents(Exponents q);
  MixedExponents(std::initializer_list<Exponent> q) : MixedExponents(Exponents(q)) {}

  std::size_t size() const { return q_.size(); }
  const Exponents& values() const { return q_; }
  Exponent operator[](std::size_t i) const { return q_[i]; }

 private:
  Exponents q_;
};

/// Threshold for the k-th nested sum (k is 1-based):
///   r / (1 - r (1/p_k + ... + 1/p_m)).
/// With r == 1 this is the delta exponent of the scalar case.
double lambda_exponent(const ExponentProfile& profile, std::size_t k);

/// All m thresholds, outermost first. Nonincreasing in k.
std::vector<double> lambda_thresholds(const ExponentProfile& profile);

struct BilinearExponents {
  double lambda;
  double mu;
};

/// lambda = pq/(pq-p-q) and mu = 4pq/(3pq-2p-2q), evaluated in the
/// reciprocal form so that p or q = ∞ is the continuous limit.
BilinearExponents bilinear_classics(Exponent p, Exponent q);

struct AdmissibilityReport {
  bool admissible = false;
  /// q_k - threshold_k for each k (∞ when q_k = ∞).
  std::vector<double> margins;
  std::vector<double> thresholds;
};

/// q_k + slack >= threshold_k (up to `tolerance`) for every k. A positive
/// slack is the epsilon-relaxed variant for spaces with finite cotype.
AdmissibilityReport admissible(const ExponentProfile& profile, const MixedExponents& q, double slack = 0.0,
                               double tolerance = kAdmissibilityTolerance);

}  // namespace hllab
