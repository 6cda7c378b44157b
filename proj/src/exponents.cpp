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

#include "hllab/exponents.hpp"

#include <string>

namespace hllab {

ExponentProfile::ExponentProfile(Exponents p, double r) : p_(std::move(p)), r_(r) {
  if (p_.empty()) throw ValidationError("profile needs at least one exponent");
  if (!(r_ == 1.0 || (r_ >= 2.0 && std::isfinite(r_)))) {
    throw ValidationError("cotype parameter r must be 1 (scalar) or lie in [2, inf), got " + std::to_string(r_));
  }
  for (const auto& pk : p_) {
    if (!(pk.value() > 1.0)) throw ValidationError("domain exponents must exceed 1, got " + format_exponent(pk));
    if (!scalar_valued() && !(pk.value() > r_)) {
      throw ValidationError("vector-valued profile needs every p_k > r, got " + format_exponent(pk));
    }
  }
  if (!(tail_reciprocal_sum(1) < 1.0 / r_ - kBoundaryTolerance)) {
    throw ValidationError("profile violates sum 1/p_k < 1/r");
  }
}

double ExponentProfile::tail_reciprocal_sum(std::size_t k) const {
  double s = 0.0;
  for (std::size_t i = k - 1; i < p_.size(); ++i) s += p_[i].reciprocal();
  return s;
}

ExponentProfile ExponentProfile::tail(std::size_t k) const {
  if (k < 1 || k > p_.size()) throw std::out_of_range("profile tail index out of range");
  return ExponentProfile(Exponents(p_.begin() + static_cast<std::ptrdiff_t>(k - 1), p_.end()), r_);
}

MixedExponents::MixedExponents(Exponents q) : q_(std::move(q)) {
  if (q_.empty()) throw ValidationError("mixed exponents must be non-empty");
}

double lambda_exponent(const ExponentProfile& profile, std::size_t k) {
  if (k < 1 || k > profile.arity()) {
    throw std::out_of_range("lambda index " + std::to_string(k) + " outside 1.." + std::to_string(profile.arity()));
  }
  const double gap = 1.0 / profile.r() - profile.tail_reciprocal_sum(k);
  if (!(gap > kBoundaryTolerance)) throw ValidationError("exponent profile sits on the boundary sum 1/p = 1/r");
  return 1.0 / gap;
}

std::vector<double> lambda_thresholds(const ExponentProfile& profile) {
  std::vector<double> out;
  out.reserve(profile.arity());
  for (std::size_t k = 1; k <= profile.arity(); ++k) out.push_back(lambda_exponent(profile, k));
  return out;
}

BilinearExponents bilinear_classics(Exponent p, Exponent q) {
  if (!(p.value() > 1.0) || !(q.value() > 1.0)) throw ValidationError("bilinear exponents must exceed 1");
  const double s = p.reciprocal() + q.reciprocal();
  if (!(s < 1.0)) throw ValidationError("bilinear exponents need 1/p + 1/q < 1");
  return {1.0 / (1.0 - s), 4.0 / (3.0 - 2.0 * s)};
}

AdmissibilityReport admissible(const ExponentProfile& profile, const MixedExponents& q, double slack,
                               double tolerance) {
  if (q.size() != profile.arity()) {
    throw ValidationError("expected " + std::to_string(profile.arity()) + " mixed exponents, got " +
                          std::to_string(q.size()));
  }
  if (!(slack >= 0.0)) throw ValidationError("slack must be nonnegative");
  AdmissibilityReport report;
  report.admissible = true;
  report.thresholds = lambda_thresholds(profile);
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double threshold = report.thresholds[k];
    report.margins.push_back(q[k].value() - threshold);
    if (!(q[k].value() + slack >= threshold - tolerance)) report.admissible = false;
  }
  return report;
}

}  // namespace hllab
