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

#include "hllab/opnorm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hllab/lp.hpp"
#include "hllab/parallel.hpp"

namespace hllab {

namespace {

// Contracts `axis` of a row-major block with shape (dims..., d) against x.
std::vector<double> contract_axis(std::span<const double> data, std::span<const std::size_t> dims, std::size_t d,
                                  std::size_t axis, std::span<const double> x) {
  std::size_t outer = 1;
  for (std::size_t a = 0; a < axis; ++a) outer *= dims[a];
  const std::size_t n = dims[axis];
  std::size_t inner = d;
  for (std::size_t a = axis + 1; a < dims.size(); ++a) inner *= dims[a];

  std::vector<double> out(outer * inner, 0.0);
  for (std::size_t o = 0; o < outer; ++o) {
    double* dst = out.data() + o * inner;
    for (std::size_t j = 0; j < n; ++j) {
      const double xj = x[j];
      if (xj == 0.0) continue;
      const double* src = data.data() + (o * n + j) * inner;
      for (std::size_t i = 0; i < inner; ++i) dst[i] += xj * src[i];
    }
  }
  return out;
}

void check_arguments(const CoefficientTensor& t, std::span<const std::vector<double>> args) {
  if (args.size() != t.arity()) throw ValidationError("argument count must equal tensor arity");
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k].size() != t.dims()[k]) throw ValidationError("argument length does not match tensor dimension");
  }
}

void check_exponents(const CoefficientTensor& t, std::span<const Exponent> p) {
  if (p.size() != t.arity()) {
    throw ValidationError("expected " + std::to_string(t.arity()) + " domain exponents, got " +
                          std::to_string(p.size()));
  }
  for (const auto& pk : p) {
    if (!(pk.value() > 1.0)) throw ValidationError("domain exponents must lie in (1, inf]");
  }
}

// C^T x for an n x d row-major matrix C.
std::vector<double> transpose_times(std::span<const double> c, std::size_t d, std::span<const double> x) {
  std::vector<double> y(d, 0.0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) y[i] += c[j * d + i] * x[j];
  }
  return y;
}

// C phi for an n x d row-major matrix C.
std::vector<double> times(std::span<const double> c, std::size_t d, std::span<const double> phi) {
  std::vector<double> out(c.size() / d, 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) acc += c[j * d + i] * phi[i];
    out[j] = acc;
  }
  return out;
}

std::vector<double> uniform_point(std::size_t n, Exponent p) {
  std::vector<double> x(n, 1.0);
  const double s = lp::norm(x, p);
  for (double& v : x) v /= s;
  return x;
}

template <class Rng>
std::vector<double> random_point(std::size_t n, Exponent p, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(n);
  double s = 0.0;
  while (s == 0.0) {
    for (double& v : x) v = gauss(rng);
    s = lp::norm(x, p);
  }
  for (double& v : x) v /= s;
  return x;
}

bool all_zero(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

struct StartResult {
  double value = 0.0;
  int sweeps = 0;
  int reinitializations = 0;
  std::vector<std::vector<double>> args;
};

StartResult run_start(const CoefficientTensor& t, std::span<const Exponent> p, const AscentOptions& options,
                      std::size_t start_index) {
  const std::size_t m = t.arity();
  const std::size_t d = t.value_dim();
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(start_index)};
  std::mt19937_64 rng(seq);

  StartResult r;
  r.args.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    r.args[k] = start_index == 0 ? uniform_point(t.dims()[k], p[k]) : random_point(t.dims()[k], p[k], rng);
  }
  double objective = output_norm(t, r.args);

  for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    const double before_sweep = objective;
    for (std::size_t k = 0; k < m; ++k) {
      const std::vector<double> coeffs = induced_coefficients(t, r.args, k);
      const std::vector<double> y = transpose_times(coeffs, d, r.args[k]);
      const std::vector<double> phi = lp::duality_map(y, t.value_norm());
      const std::vector<double> c = times(coeffs, d, phi);
      if (!lp::dual_maximizer(c, p[k], r.args[k])) {
        r.args[k] = random_point(t.dims()[k], p[k], rng);
        ++r.reinitializations;
      }
      const double updated = lp::norm(transpose_times(coeffs, d, r.args[k]), t.value_norm());
      if (updated < objective * (1.0 - 1e-9)) {
        throw std::logic_error("ascent objective decreased within a sweep");
      }
      objective = updated;
    }
    r.sweeps = sweep;
    // A single scalar slot is solved exactly by its first update.
    if (m == 1 && d == 1) break;
    if (objective - before_sweep <= options.relative_tolerance * objective) break;
  }
  r.value = objective;
  return r;
}

}  // namespace

std::string_view to_string(NormStatus s) { return s == NormStatus::exact ? "exact" : "lower_bound"; }

std::vector<double> induced_coefficients(const CoefficientTensor& t, std::span<const std::vector<double>> args,
                                         std::size_t slot) {
  check_arguments(t, args);
  if (slot >= t.arity()) throw std::out_of_range("slot out of range");
  std::vector<std::size_t> shape = t.dims();
  std::vector<double> buffer;
  std::span<const double> current = t.entries();
  for (std::size_t a = t.arity(); a-- > 0;) {
    if (a == slot) continue;
    buffer = contract_axis(current, shape, t.value_dim(), a, args[a]);
    shape.erase(shape.begin() + static_cast<std::ptrdiff_t>(a));
    current = buffer;
  }
  return std::vector<double>(current.begin(), current.end());
}

std::vector<double> apply(const CoefficientTensor& t, std::span<const std::vector<double>> args) {
  check_arguments(t, args);
  const std::vector<double> coeffs = induced_coefficients(t, args, 0);
  return transpose_times(coeffs, t.value_dim(), args[0]);
}

double output_norm(const CoefficientTensor& t, std::span<const std::vector<double>> args) {
  return lp::norm(apply(t, args), t.value_norm());
}

NormEstimate ascend(const CoefficientTensor& t, std::span<const Exponent> p, const AscentOptions& options) {
  check_exponents(t, p);
  if (options.restarts < 0 || options.max_sweeps < 1) throw ValidationError("invalid ascent options");

  if (all_zero(t.entries())) {
    NormEstimate est;
    est.status = NormStatus::exact;
    for (std::size_t k = 0; k < t.arity(); ++k) est.argmax.push_back(uniform_point(t.dims()[k], p[k]));
    return est;
  }

  const std::size_t starts = static_cast<std::size_t>(options.restarts) + 1;
  std::vector<StartResult> results(starts);
  parallel_for(starts, options.threads, [&](std::size_t i) { results[i] = run_start(t, p, options, i); });

  std::size_t best = 0;
  for (std::size_t i = 1; i < starts; ++i) {
    if (results[i].value > results[best].value) best = i;
  }
  NormEstimate est;
  est.status = NormStatus::lower_bound;
  est.restarts_used = static_cast<int>(starts);
  est.iterations = results[best].sweeps;
  for (const auto& r : results) est.reinitializations += r.reinitializations;
  est.argmax = std::move(results[best].args);
  est.value = output_norm(t, est.argmax);
  return est;
}

namespace {

struct EnumerationPlan {
  std::vector<std::size_t> enumerated;
  std::optional<std::size_t> resolved;
  std::size_t bits = 0;
};

std::optional<EnumerationPlan> plan_enumeration(const CoefficientTensor& t, std::span<const Exponent> p,
                                                std::size_t max_bits) {
  EnumerationPlan plan;
  std::vector<std::size_t> finite;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_infinite()) finite.push_back(k);
  }
  if (t.scalar_valued()) {
    if (finite.size() > 1) return std::nullopt;
    if (finite.size() == 1) {
      plan.resolved = finite.front();
    } else {
      std::size_t widest = 0;
      for (std::size_t k = 1; k < t.arity(); ++k) {
        if (t.dims()[k] > t.dims()[widest]) widest = k;
      }
      plan.resolved = widest;
    }
  } else if (!finite.empty()) {
    return std::nullopt;
  }
  for (std::size_t k = 0; k < t.arity(); ++k) {
    if (plan.resolved && *plan.resolved == k) continue;
    plan.enumerated.push_back(k);
    plan.bits += t.dims()[k];
  }
  if (plan.bits > max_bits) return std::nullopt;
  return plan;
}

struct PatternValue {
  double value = -1.0;
  std::uint64_t pattern = 0;
};

}  // namespace

bool enumerable(const CoefficientTensor& t, std::span<const Exponent> p, std::size_t max_bits) {
  if (p.size() != t.arity()) return false;
  return plan_enumeration(t, p, max_bits).has_value();
}

NormEstimate enumerate_exact(const CoefficientTensor& t, std::span<const Exponent> p, std::size_t max_bits,
                             unsigned threads) {
  check_exponents(t, p);
  const auto plan = plan_enumeration(t, p, max_bits);
  if (!plan) {
    throw ValidationError(
        "enumeration needs scalar values with at most one finite exponent, or vector values with all "
        "exponents infinite, and at most 2^" +
        std::to_string(max_bits) + " sign patterns");
  }

  // The leading sign is fixed to +1: flipping a whole slot only negates A.
  const std::size_t free_bits = plan->bits == 0 ? 0 : plan->bits - 1;
  const std::uint64_t patterns = std::uint64_t{1} << free_bits;

  auto fill_signs = [&](std::uint64_t pattern, std::vector<std::vector<double>>& args) {
    std::size_t bit = 0;
    for (std::size_t k : plan->enumerated) {
      for (std::size_t j = 0; j < t.dims()[k]; ++j, ++bit) {
        const bool negative = bit > 0 && ((pattern >> (bit - 1)) & 1U);
        args[k][j] = negative ? -1.0 : 1.0;
      }
    }
  };

  auto evaluate = [&](std::vector<std::vector<double>>& args) {
    if (!plan->resolved) return output_norm(t, args);
    const std::size_t slot = *plan->resolved;
    const std::vector<double> c = induced_coefficients(t, args, slot);
    return lp::norm(c, conjugate(p[slot]));
  };

  auto fresh_args = [&] {
    std::vector<std::vector<double>> args(t.arity());
    for (std::size_t k = 0; k < t.arity(); ++k) args[k].assign(t.dims()[k], 0.0);
    return args;
  };

  const std::uint64_t chunks = std::min<std::uint64_t>(patterns, std::max(1u, threads) * 8ULL);
  std::vector<PatternValue> chunk_best(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = patterns * c / chunks;
    const std::uint64_t hi = patterns * (c + 1) / chunks;
    auto args = fresh_args();
    PatternValue best;
    for (std::uint64_t pattern = lo; pattern < hi; ++pattern) {
      fill_signs(pattern, args);
      const double v = evaluate(args);
      if (v > best.value) best = {v, pattern};
    }
    chunk_best[c] = best;
  });

  PatternValue best = chunk_best.front();
  for (const auto& cb : chunk_best) {
    if (cb.value > best.value) best = cb;
  }

  NormEstimate est;
  est.status = NormStatus::exact;
  est.value = best.value;
  est.restarts_used = 0;
  est.iterations = static_cast<int>(std::min<std::uint64_t>(patterns, std::numeric_limits<int>::max()));
  est.argmax = fresh_args();
  fill_signs(best.pattern, est.argmax);
  if (plan->resolved) {
    const std::size_t slot = *plan->resolved;
    const std::vector<double> c = induced_coefficients(t, est.argmax, slot);
    if (!lp::dual_maximizer(c, p[slot], est.argmax[slot])) est.argmax[slot] = uniform_point(t.dims()[slot], p[slot]);
  }
  return est;
}

NormEstimate operator_norm(const CoefficientTensor& t, std::span<const Exponent> p, const AscentOptions& options) {
  if (enumerable(t, p)) return enumerate_exact(t, p, kEnumerationMaxBits, options.threads);
  return ascend(t, p, options);
}

double diagonal_norm_closed_form(std::size_t n, const ExponentProfile& profile) {
  if (n == 0) throw ValidationError("diagonal size must be positive");
  return std::pow(static_cast<double>(n), 1.0 / lambda_exponent(profile, 1));
}

}  // namespace hllab
