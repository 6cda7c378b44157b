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

#include "doctest.h"
#include "hllab/experiments.hpp"
#include "hllab/witnesses.hpp"

using namespace hllab;

namespace {

const Exponent kInfExp = Exponent::infinity();

std::vector<std::size_t> powers_of_two(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; n *= 2) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("parse_suite") {
  const Suite s = parse_suite("random:3x3:200,rank_one:2x4,diagonal:8,random:2x2:5:d3", 42);
  REQUIRE(s.entries.size() == 4);
  CHECK(s.seed == 42);
  CHECK(s.entries[0].kind == InstanceKind::random);
  CHECK(s.entries[0].dims == std::vector<std::size_t>{3, 3});
  CHECK(s.entries[0].count == 200);
  CHECK(s.entries[1].kind == InstanceKind::rank_one);
  CHECK(s.entries[1].count == 1);
  CHECK(s.entries[2].kind == InstanceKind::diagonal);
  CHECK(s.entries[3].value_dim == 3);
  CHECK_THROWS_AS(parse_suite("sparse:3x3", 0), ValidationError);
  CHECK_THROWS_AS(parse_suite("random:3x0", 0), ValidationError);
  CHECK_THROWS_AS(parse_suite("random:3x3:ten", 0), ValidationError);
  CHECK_THROWS_AS(parse_suite("random:3x3:1:3", 0), ValidationError);
}

TEST_CASE("constant one on l_∞ x l_∞ with (2, 2)") {
  const ExponentProfile prof({kInfExp, kInfExp}, 2.0);
  const Suite suite = parse_suite("random:3x3:200", 1);
  const auto result = verify_constant_one(prof, MixedExponents{2.0, 2.0}, suite);
  REQUIRE(result.reports.size() == 200);
  CHECK(result.passed());
  CHECK(result.count(Verdict::pass) == 200);
  CHECK(result.max_exact_ratio() <= 1.0 + 1e-9);
}

TEST_CASE("constant one for the l_∞ x l_{3/2} bilinear case with (3, 3)") {
  const ExponentProfile prof({kInfExp, 1.5}, 1.0);
  const auto th = lambda_thresholds(prof);
  CHECK(th[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(th[1] == doctest::Approx(3.0).epsilon(1e-14));
  const auto result =
      verify_constant_one(prof, MixedExponents{3.0, 3.0}, parse_suite("rank_one:3x3:50,random:3x3:200", 2));
  CHECK(result.passed());
  CHECK(result.count(Verdict::pass) == 250);
}

TEST_CASE("constant one for l_r-valued operators") {
  for (double r : {2.0, 3.0, 4.0}) {
    const ExponentProfile prof({kInfExp, kInfExp}, r);
    const auto result = verify_constant_one(prof, MixedExponents{r, r},
                                            parse_suite("random:3x3:60:d2,rank_one:2x3:20:d3,diagonal:5", 3));
    CHECK(result.passed());
    CHECK(result.count(Verdict::pass) == 81);
  }
}

TEST_CASE("diagonal witness at the thresholds is sharp") {
  const ExponentProfile prof({kInfExp, 6.0, 6.0}, 2.0);
  const auto th = lambda_thresholds(prof);
  const MixedExponents q{th[0], th[1], th[2]};
  const auto result = verify_constant_one(prof, q, parse_suite("diagonal:1,diagonal:3,diagonal:6,diagonal:9", 0));
  for (const auto& rep : result.reports) CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(result.passed());
}

TEST_CASE("campaign grading rules") {
  const ExponentProfile prof({kInfExp, kInfExp}, 2.0);
  CHECK_THROWS_AS(verify_constant_one(prof, MixedExponents{1.9, 2.0}, parse_suite("random:2x2", 0)),
                  ValidationError);

  // Two finite slots cannot be enumerated: reported, never graded.
  const ExponentProfile finite({6.0, 6.0}, 2.0);
  const auto th = lambda_thresholds(finite);
  const auto info =
      verify_constant_one(finite, MixedExponents{th[0], th[1]}, parse_suite("random:3x3:5,diagonal:4", 4));
  CHECK(info.count(Verdict::informational) == 5);
  CHECK(info.count(Verdict::pass) == 1);
  CHECK(info.passed());
}

TEST_CASE("campaigns are deterministic") {
  const ExponentProfile prof({kInfExp, 1.5}, 1.0);
  const Suite suite = parse_suite("random:3x3:40,rank_one:2x2:5", 77);
  VerifyOptions serial, threaded;
  threaded.ascent.threads = 4;
  const auto a = verify_constant_one(prof, MixedExponents{3.0, 3.0}, suite, serial);
  const auto b = verify_constant_one(prof, MixedExponents{3.0, 3.0}, suite, threaded);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].instance == b.reports[i].instance);
    CHECK(a.reports[i].ratio == b.reports[i].ratio);
    CHECK(a.reports[i].operator_norm.value == b.reports[i].operator_norm.value);
  }
  CHECK(make_instance(suite, 0, 3, prof) == make_instance(suite, 0, 3, prof));
  CHECK_FALSE(make_instance(suite, 0, 3, prof) == make_instance(suite, 0, 4, prof));
}

TEST_CASE("log-log slope fit") {
  const std::vector<std::size_t> n = {2, 4, 8, 16, 32};
  std::vector<double> ratios;
  for (std::size_t x : n) ratios.push_back(3.0 * std::pow(static_cast<double>(x), 0.37));
  CHECK(fit_log_log_slope(n, ratios) == doctest::Approx(0.37).epsilon(1e-12));
  // Only the largest half enters the fit.
  ratios[0] = 1e6;
  CHECK(fit_log_log_slope(n, ratios) == doctest::Approx(0.37).epsilon(1e-12));
}

TEST_CASE("growth scans along the diagonal family") {
  const ExponentProfile scalar({4.0, 4.0}, 1.0);
  const auto sizes = powers_of_two(4, 256);

  const auto bounded = growth_scan(scalar, MixedExponents{2.0, 2.0}, sizes);
  CHECK(std::abs(bounded.fitted_slope) < 1e-12);
  CHECK(bounded.theoretical_slope == 0.0);
  CHECK(bounded.verdict == GrowthVerdict::bounded);
  for (double r : bounded.ratios) CHECK(r == doctest::Approx(1.0).epsilon(1e-14));

  const auto grows = growth_scan(scalar, MixedExponents{1.5, 2.0}, sizes);
  CHECK(grows.theoretical_slope == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(std::abs(grows.fitted_slope - 1.0 / 6.0) < 1e-6);
  CHECK(grows.verdict == GrowthVerdict::growing);

  const ExponentProfile example({10.0, 10.0, 10.0}, 3.0);
  const auto ex = growth_scan(example, MixedExponents{29.0, 7.5, 30.0 / 7.0}, {10, 100, 1000, 10000}, 5e-4);
  CHECK(std::abs(ex.fitted_slope - (1.0 / 29.0 - 1.0 / 30.0)) < 1e-6);
  CHECK(ex.verdict == GrowthVerdict::growing);
  // The default threshold is coarser than this slope.
  CHECK(growth_scan(example, MixedExponents{29.0, 7.5, 30.0 / 7.0}, {10, 100, 1000, 10000}).verdict ==
        GrowthVerdict::bounded);

  CHECK_THROWS_AS(growth_scan(scalar, MixedExponents{2.0, 2.0}, {4, 8, 16}), ValidationError);
  CHECK_THROWS_AS(growth_scan(scalar, MixedExponents{2.0, 2.0}, {4, 8, 8, 16}), ValidationError);
  CHECK_THROWS_AS(growth_scan(scalar, MixedExponents{2.0}, sizes), ValidationError);
}

TEST_CASE("growth ratios match dense evaluation at small sizes") {
  const ExponentProfile prof({5.0, 7.0}, 2.0);
  const MixedExponents q{2.5, 3.0};
  const std::vector<std::size_t> sizes = {2, 3, 4, 6};
  const auto rep = growth_scan(prof, q, sizes);
  const Exponent p[] = {5.0, 7.0};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto t = diagonal_operator(sizes[i], prof, sizes[i]);
    CHECK(rep.mixed_norms[i] == doctest::Approx(mixed_norm(t, q)).epsilon(1e-14));
    CHECK(rep.operator_norms[i] == doctest::Approx(ascend(t, p).value).epsilon(1e-6));
  }
}

TEST_CASE("lower index scans") {
  const ExponentProfile scalar({4.0, 4.0}, 1.0);
  const auto sizes = powers_of_two(4, 256);
  CHECK(lambda_exponent(scalar, 2) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

  const auto rep = lower_index_scan(scalar, 2, MixedExponents{2.0, 1.2}, sizes);
  CHECK(rep.lifted_levels == 1);
  CHECK(std::abs(rep.fitted_slope - 1.0 / 12.0) < 1e-6);
  CHECK(rep.theoretical_slope == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  CHECK(rep.verdict == GrowthVerdict::growing);

  // Identical to a direct scan of the lower-arity family.
  const auto direct = growth_scan(scalar.tail(2), MixedExponents{1.2}, sizes);
  CHECK(rep.ratios == direct.ratios);
  CHECK(rep.fitted_slope == direct.fitted_slope);

  const auto flat = lower_index_scan(scalar, 2, MixedExponents{2.0, 4.0 / 3.0}, sizes);
  CHECK(std::abs(flat.fitted_slope) < 1e-12);
  CHECK(flat.verdict == GrowthVerdict::bounded);

  CHECK_THROWS_AS(lower_index_scan(scalar, 2, MixedExponents{1.5, 1.2}, sizes), ValidationError);
  CHECK_THROWS_AS(lower_index_scan(scalar, 1, MixedExponents{2.0, 1.2}, sizes), ValidationError);
  CHECK_THROWS_AS(lower_index_scan(scalar, 3, MixedExponents{2.0, 1.2}, sizes), ValidationError);

  // Dense check: the lifted witness has the same ratio as the scan.
  const ExponentProfile three({kInfExp, 4.0, 4.0}, 1.0);
  const MixedExponents q{3.0, 1.7, 1.5};
  const auto lifted_scan = lower_index_scan(three, 2, q, {2, 3, 4, 5});
  const Exponent p_tail[] = {4.0, 4.0};
  const Exponent p_full[] = {kInfExp, 4.0, 4.0};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t n = lifted_scan.sizes[i];
    const auto base = diagonal_operator(n, three.tail(2), 1);
    const auto lifted = lift_operator(base, 3);
    CHECK(mixed_norm(lifted, q) == doctest::Approx(lifted_scan.mixed_norms[i]).epsilon(1e-14));
    CHECK(ascend(lifted, p_full).value == doctest::Approx(ascend(base, p_tail).value).epsilon(1e-9));
    CHECK(ascend(lifted, p_full).value == doctest::Approx(lifted_scan.operator_norms[i]).epsilon(1e-6));
  }
}

TEST_CASE("verdict grading") {
  const VerifyOptions opts;
  CHECK(grade(1.0, NormStatus::exact, opts) == Verdict::pass);
  CHECK(grade(1.0 + 5e-10, NormStatus::exact, opts) == Verdict::pass);
  CHECK(grade(1.0 + 1e-7, NormStatus::exact, opts) == Verdict::needs_review);
  CHECK(grade(1.01, NormStatus::exact, opts) == Verdict::fail);
  CHECK(grade(5.0, NormStatus::lower_bound, opts) == Verdict::informational);

  CampaignResult c;
  c.reports.push_back({"a", 1.0, {}, 0.5, Verdict::pass});
  CHECK(c.passed());
  c.reports.push_back({"b", 1.0, {}, 1.0 + 1e-7, Verdict::needs_review});
  CHECK(c.passed());
  c.reports.push_back({"c", 2.0, {}, 2.0, Verdict::fail});
  CHECK_FALSE(c.passed());

  const ExponentProfile prof({kInfExp, kInfExp}, 2.0);
  VerifyOptions bad;
  bad.tolerance = -0.1;
  CHECK_THROWS_AS(verify_constant_one(prof, MixedExponents{2.0, 2.0}, parse_suite("diagonal:3", 0), bad),
                  ValidationError);
}
