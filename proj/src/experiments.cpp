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

#include "hllab/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <random>

#include "hllab/lp.hpp"
#include "hllab/parallel.hpp"
#include "hllab/witnesses.hpp"

namespace hllab {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v == 0) {
    throw ValidationError("invalid " + std::string(what) + " '" + std::string(s) + "' in suite description");
  }
  return v;
}

std::string_view kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::random: return "random";
    case InstanceKind::rank_one: return "rank_one";
    case InstanceKind::diagonal: return "diagonal";
  }
  return "?";
}

std::string dims_label(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "x" : "") + std::to_string(dims[k]);
  return s;
}

std::mt19937_64 instance_rng(const Suite& suite, std::size_t entry, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(suite.seed), static_cast<std::uint32_t>(suite.seed >> 32),
                    static_cast<std::uint32_t>(entry), static_cast<std::uint32_t>(i)};
  return std::mt19937_64(seq);
}

struct Instance {
  CoefficientTensor tensor;
  std::optional<NormEstimate> closed_form;
};

std::vector<double> uniform_entries(std::size_t count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(count);
  for (double& x : v) x = u(rng);
  return v;
}

Instance build_instance(const Suite& suite, std::size_t entry, std::size_t i, const ExponentProfile& profile) {
  const SuiteEntry& e = suite.entries.at(entry);
  const std::size_t m = profile.arity();
  auto rng = instance_rng(suite, entry, i);

  if (e.kind == InstanceKind::diagonal) {
    if (e.dims.size() != 1) throw ValidationError("diagonal suite entries take a single size");
    const std::size_t n = e.dims[0];
    Instance inst{diagonal_operator(n, profile, profile.scalar_valued() ? 1 : n), std::nullopt};
    NormEstimate est;
    est.value = diagonal_norm_closed_form(n, profile);
    est.status = NormStatus::exact;
    for (std::size_t k = 0; k < m; ++k) {
      const double scale = std::pow(static_cast<double>(n), -profile.p()[k].reciprocal());
      est.argmax.emplace_back(n, scale);
    }
    inst.closed_form = std::move(est);
    return inst;
  }

  if (e.dims.size() != m) throw ValidationError("suite entry arity does not match the profile");
  if (e.value_dim > 1 && profile.scalar_valued()) {
    throw ValidationError("vector-valued suite entries need a profile with r >= 2");
  }
  const Exponent rho = e.value_dim > 1 ? Exponent(profile.r()) : Exponent(2.0);

  if (e.kind == InstanceKind::random) {
    std::size_t cells = e.value_dim;
    for (std::size_t n : e.dims) cells *= n;
    return {CoefficientTensor(e.dims, e.value_dim, rho, uniform_entries(cells, rng)), std::nullopt};
  }

  // rank one: a_1 ⊗ ... ⊗ a_m ⊗ v, with norm prod ||a_k||_{p_k*} * ||v||_rho.
  std::vector<std::vector<double>> factors;
  for (std::size_t n : e.dims) factors.push_back(uniform_entries(n, rng));
  const std::vector<double> v = uniform_entries(e.value_dim, rng);
  std::vector<double> entries = v;
  for (std::size_t k = m; k-- > 0;) {
    std::vector<double> next;
    next.reserve(entries.size() * factors[k].size());
    for (double a : factors[k]) {
      for (double x : entries) next.push_back(a * x);
    }
    entries = std::move(next);
  }
  NormEstimate est;
  est.status = NormStatus::exact;
  est.value = e.value_dim > 1 ? lp::norm(v, rho) : std::abs(v[0]);
  for (std::size_t k = 0; k < m; ++k) {
    est.value *= lp::norm(factors[k], conjugate(profile.p()[k]));
    std::vector<double> x(factors[k].size());
    lp::dual_maximizer(factors[k], profile.p()[k], x);
    est.argmax.push_back(std::move(x));
  }
  return {CoefficientTensor(e.dims, e.value_dim, rho, std::move(entries)), std::move(est)};
}

void check_sizes(const std::vector<std::size_t>& sizes) {
  if (sizes.size() < 4) throw ValidationError("growth scans need at least 4 sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw ValidationError("growth sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw ValidationError("growth sizes must be strictly increasing");
  }
}

std::string family_label(const ExponentProfile& profile) {
  return "diagonal(m=" + std::to_string(profile.arity()) + ",r=" + format_exponent(Exponent(profile.r())) + ")";
}

}  // namespace

Suite parse_suite(std::string_view text, std::uint64_t seed) {
  Suite suite;
  suite.seed = seed;
  for (std::string_view item : split(text, ',')) {
    const auto fields = split(item, ':');
    if (fields.size() < 2 || fields.size() > 4) throw ValidationError("malformed suite entry '" + std::string(item) + "'");
    SuiteEntry e;
    if (fields[0] == "random") {
      e.kind = InstanceKind::random;
    } else if (fields[0] == "rank_one") {
      e.kind = InstanceKind::rank_one;
    } else if (fields[0] == "diagonal") {
      e.kind = InstanceKind::diagonal;
    } else {
      throw ValidationError("unknown suite kind '" + std::string(fields[0]) + "'");
    }
    for (std::string_view d : split(fields[1], 'x')) e.dims.push_back(parse_count(d, "dimension"));
    if (fields.size() >= 3) e.count = parse_count(fields[2], "count");
    if (fields.size() == 4) {
      if (fields[3].empty() || fields[3][0] != 'd') throw ValidationError("value dimension field must look like d3");
      e.value_dim = parse_count(fields[3].substr(1), "value dimension");
    }
    suite.entries.push_back(std::move(e));
  }
  return suite;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::needs_review: return "needs_review";
    case Verdict::fail: return "fail";
    case Verdict::informational: return "informational";
  }
  return "?";
}

std::string_view to_string(GrowthVerdict v) { return v == GrowthVerdict::growing ? "growing" : "bounded"; }

bool CampaignResult::passed() const { return count(Verdict::fail) == 0; }

std::size_t CampaignResult::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [v](const InequalityReport& r) { return r.verdict == v; }));
}

double CampaignResult::max_exact_ratio() const {
  double best = 0.0;
  for (const auto& r : reports) {
    if (r.operator_norm.status == NormStatus::exact) best = std::max(best, r.ratio);
  }
  return best;
}

CoefficientTensor make_instance(const Suite& suite, std::size_t entry, std::size_t i, const ExponentProfile& profile) {
  return build_instance(suite, entry, i, profile).tensor;
}

CampaignResult verify_constant_one(const ExponentProfile& profile, const MixedExponents& q, const Suite& suite,
                                   const VerifyOptions& options) {
  if (!admissible(profile, q).admissible) {
    throw ValidationError("mixed exponents are not admissible for this profile");
  }
  if (!(options.tolerance >= 0.0) || !(options.review_band >= options.tolerance)) {
    throw ValidationError("tolerance must be >= 0 and no larger than the review band");
  }
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t e = 0; e < suite.entries.size(); ++e) {
    for (std::size_t i = 0; i < suite.entries[e].count; ++i) jobs.emplace_back(e, i);
  }

  AscentOptions inner = options.ascent;
  inner.threads = 1;
  CampaignResult result;
  result.reports.resize(jobs.size());
  parallel_for(jobs.size(), options.ascent.threads, [&](std::size_t j) {
    const auto [e, i] = jobs[j];
    Instance inst = build_instance(suite, e, i, profile);
    InequalityReport& rep = result.reports[j];
    const SuiteEntry& entry = suite.entries[e];
    rep.instance = std::string(kind_name(entry.kind)) + "[" + dims_label(entry.dims) +
                   (entry.value_dim > 1 ? ";d" + std::to_string(entry.value_dim) : "") + "]#" + std::to_string(i);
    rep.mixed_norm = mixed_norm(inst.tensor, q);
    rep.operator_norm = inst.closed_form ? std::move(*inst.closed_form)
                                         : operator_norm(inst.tensor, profile.p(), inner);
    const double op = rep.operator_norm.value;
    rep.ratio = op > 0.0 ? rep.mixed_norm / op : (rep.mixed_norm > 0.0 ? INFINITY : 0.0);
    rep.verdict = grade(rep.ratio, rep.operator_norm.status, options);
  });
  return result;
}

Verdict grade(double ratio, NormStatus status, const VerifyOptions& options) {
  if (status != NormStatus::exact) return Verdict::informational;
  if (ratio <= 1.0 + options.tolerance) return Verdict::pass;
  if (ratio <= 1.0 + options.review_band) return Verdict::needs_review;
  return Verdict::fail;
}

double fit_log_log_slope(const std::vector<std::size_t>& sizes, const std::vector<double>& ratios) {
  if (sizes.size() != ratios.size() || sizes.size() < 2) throw ValidationError("slope fit needs matching series");
  const std::size_t used = (sizes.size() + 1) / 2;
  const std::size_t first = sizes.size() - std::max<std::size_t>(used, 2);
  double mx = 0.0, my = 0.0;
  const double count = static_cast<double>(sizes.size() - first);
  for (std::size_t i = first; i < sizes.size(); ++i) {
    mx += std::log(static_cast<double>(sizes[i]));
    my += std::log(ratios[i]);
  }
  mx /= count;
  my /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = first; i < sizes.size(); ++i) {
    const double dx = std::log(static_cast<double>(sizes[i])) - mx;
    sxy += dx * (std::log(ratios[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

GrowthReport growth_scan(const ExponentProfile& profile, const MixedExponents& q, const std::vector<std::size_t>& sizes,
                         double slope_threshold) {
  check_sizes(sizes);
  if (q.size() != profile.arity()) throw ValidationError("mixed exponents must match the profile arity");
  GrowthReport rep;
  rep.family = family_label(profile);
  rep.sizes = sizes;
  rep.slope_threshold = slope_threshold;
  for (std::size_t n : sizes) {
    const double num = diagonal_mixed_norm(n, q);
    const double den = diagonal_norm_closed_form(n, profile);
    rep.mixed_norms.push_back(num);
    rep.operator_norms.push_back(den);
    rep.ratios.push_back(num / den);
  }
  rep.fitted_slope = fit_log_log_slope(rep.sizes, rep.ratios);
  rep.theoretical_slope = q[0].reciprocal() - 1.0 / lambda_exponent(profile, 1);
  rep.verdict = rep.fitted_slope > slope_threshold ? GrowthVerdict::growing : GrowthVerdict::bounded;
  return rep;
}

GrowthReport lower_index_scan(const ExponentProfile& profile, std::size_t k, const MixedExponents& q,
                              const std::vector<std::size_t>& sizes, double slope_threshold) {
  const std::size_t m = profile.arity();
  if (k < 2 || k > m) throw ValidationError("lower index scans need 2 <= k <= m");
  if (q.size() != m) throw ValidationError("mixed exponents must match the profile arity");
  for (std::size_t j = 1; j < k; ++j) {
    if (q[j - 1].value() < lambda_exponent(profile, j) - kAdmissibilityTolerance) {
      throw ValidationError("lower index scan needs q_j admissible for every j < k");
    }
  }
  const ExponentProfile sub_profile = profile.tail(k);
  const MixedExponents sub_q(Exponents(q.values().begin() + static_cast<std::ptrdiff_t>(k - 1), q.values().end()));
  GrowthReport rep = growth_scan(sub_profile, sub_q, sizes, slope_threshold);

  // Each lift adds an outer level holding a single nonzero slice.
  for (std::size_t i = 0; i < rep.sizes.size(); ++i) {
    double v = rep.mixed_norms[i];
    for (std::size_t j = k - 1; j-- > 0;) {
      const double single[] = {v};
      v = lp::norm(single, q[j]);
    }
    rep.mixed_norms[i] = v;
    rep.ratios[i] = v / rep.operator_norms[i];
  }
  rep.fitted_slope = fit_log_log_slope(rep.sizes, rep.ratios);
  rep.lifted_levels = k - 1;
  rep.family = "lift^" + std::to_string(k - 1) + " " + rep.family;
  rep.verdict = rep.fitted_slope > slope_threshold ? GrowthVerdict::growing : GrowthVerdict::bounded;
  return rep;
}

}  // namespace hllab
