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

#include <random>

#include "doctest.h"
#include "hllab/lp.hpp"
#include "hllab/opnorm.hpp"
#include "hllab/witnesses.hpp"
#include "oracles.hpp"

using namespace hllab;

namespace {

const Exponent kInfExp = Exponent::infinity();

double dual_norm(const std::vector<double>& v, double p) {
  return oracle::plain_norm(v, std::isinf(p) ? 1.0 : p / (p - 1.0));
}

CoefficientTensor outer(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> e;
  for (double x : a) {
    for (double y : b) e.push_back(x * y);
  }
  return CoefficientTensor({a.size(), b.size()}, std::move(e));
}

}  // namespace

TEST_CASE("lp primitives") {
  const std::vector<double> v = {3.0, -4.0};
  CHECK(lp::norm(v, 2.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lp::norm(v, 1.0) == 7.0);
  CHECK(lp::norm(v, kInfExp) == 4.0);
  CHECK(lp::norm(std::vector<double>{1.0, 1.0}, 0.5) == doctest::Approx(4.0).epsilon(1e-15));

  std::vector<double> x(2);
  for (double p : {1.5, 2.0, 3.0, 10.0}) {
    REQUIRE(lp::dual_maximizer(v, p, x));
    CHECK(lp::norm(x, p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v[0] * x[0] + v[1] * x[1] == doctest::Approx(dual_norm(v, p)).epsilon(1e-14));
  }
  REQUIRE(lp::dual_maximizer(std::vector<double>{0.0, -1.0}, kInfExp, x));
  CHECK(x == std::vector<double>{1.0, -1.0});
  CHECK_FALSE(lp::dual_maximizer(std::vector<double>{0.0, 0.0}, 2.0, x));

  for (double rho : {1.0, 1.5, 2.0, 4.0, std::numeric_limits<double>::infinity()}) {
    const auto phi = lp::duality_map(v, rho);
    CHECK(phi[0] * v[0] + phi[1] * v[1] == doctest::Approx(lp::norm(v, rho)).epsilon(1e-14));
    CHECK(lp::norm(phi, conjugate(rho)) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(lp::duality_map(std::vector<double>{2.0, -2.0}, kInfExp) == std::vector<double>{1.0, 0.0});
  CHECK(lp::duality_map(std::vector<double>{0.0, -2.0}, 1.0) == std::vector<double>{1.0, -1.0});
}

TEST_CASE("enumerate_exact examples") {
  const Exponent both_inf[] = {kInfExp, kInfExp};
  const CoefficientTensor hadamard({2, 2}, {1, 1, 1, -1});
  const auto h = enumerate_exact(hadamard, both_inf);
  CHECK(h.status == NormStatus::exact);
  CHECK(h.value == 2.0);
  CHECK(oracle::all_signs_norm(hadamard) == 2.0);

  const ExponentProfile scalar2({kInfExp, kInfExp}, 1.0);
  CHECK(enumerate_exact(diagonal_operator(4, scalar2, 1), both_inf).value == 4.0);

  const auto ab = outer({1.0, -2.0}, {1.0, 1.0, 1.0});
  const Exponent p[] = {kInfExp, 3.0};
  const double expected = 3.0 * std::pow(3.0, 2.0 / 3.0);  // ||a||_1 ||b||_{3/2}
  const auto est = enumerate_exact(ab, p);
  CHECK(est.value == doctest::Approx(expected).epsilon(1e-14));
  CHECK(output_norm(ab, est.argmax) == doctest::Approx(est.value).epsilon(1e-12));

  CHECK(enumerate_exact(CoefficientTensor::zeros({3, 3}), both_inf).value == 0.0);
}

TEST_CASE("enumerate_exact rejects unsupported instances") {
  const auto t = CoefficientTensor::zeros({3, 3});
  const Exponent two_finite[] = {2.0, 3.0};
  CHECK_FALSE(enumerable(t, two_finite));
  CHECK_THROWS_AS(enumerate_exact(t, two_finite), ValidationError);

  const auto vec = CoefficientTensor::zeros({3, 3}, 2, 2.0);
  const Exponent one_finite[] = {kInfExp, 3.0};
  CHECK_THROWS_AS(enumerate_exact(vec, one_finite), ValidationError);

  const auto wide = CoefficientTensor::zeros({13, 13, 13});
  const Exponent all_inf[] = {kInfExp, kInfExp, kInfExp};
  CHECK_FALSE(enumerable(wide, all_inf));  // one slot resolved, 13 + 13 enumerated bits
  CHECK(enumerable(wide, all_inf, 26));

  const Exponent bad[] = {kInfExp, 1.0};
  CHECK_THROWS_AS(enumerate_exact(t, bad), ValidationError);
  const Exponent short_p[] = {kInfExp};
  CHECK_THROWS_AS(enumerate_exact(t, short_p), ValidationError);
}

TEST_CASE("enumerate_exact matches brute force over every sign pattern") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = 2 + trial % 2;
    std::vector<std::size_t> dims(m);
    for (auto& n : dims) n = size(rng);
    const bool vec = trial % 4 == 0;
    const double rhos[] = {1.0, 2.0, 3.0, std::numeric_limits<double>::infinity()};
    const auto t = oracle::random_tensor(rng, dims, vec ? 3 : 1, rhos[trial % 4]);
    const Exponents p(m, kInfExp);
    const auto est = enumerate_exact(t, p, kEnumerationMaxBits, 1 + trial % 3);
    CHECK(est.value == doctest::Approx(oracle::all_signs_norm(t)).epsilon(1e-12));
    CHECK(output_norm(t, est.argmax) == doctest::Approx(est.value).epsilon(1e-12));
  }
}

TEST_CASE("enumerate_exact with one finite slot matches the oracle") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  const double finite[] = {1.25, 1.5, 2.0, 3.0, 7.0};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + trial % 2;
    std::vector<std::size_t> dims(m);
    for (auto& n : dims) n = size(rng);
    const auto t = oracle::random_tensor(rng, dims);
    const std::size_t slot = static_cast<std::size_t>(trial) % m;
    Exponents p(m, kInfExp);
    p[slot] = finite[trial % 5];
    const auto est = enumerate_exact(t, p);
    CHECK(est.value == doctest::Approx(oracle::one_finite_slot_norm(t, slot, p[slot].value())).epsilon(1e-12));
    CHECK(output_norm(t, est.argmax) == doctest::Approx(est.value).epsilon(1e-12));
    for (std::size_t k = 0; k < m; ++k) CHECK(lp::norm(est.argmax[k], p[k]) <= 1.0 + 1e-12);
  }
}

TEST_CASE("ascend closed forms") {
  SUBCASE("rank one") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double exps[] = {1.2, 1.5, 2.0, 3.0, 6.0, std::numeric_limits<double>::infinity()};
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<double> a(3), b(4);
      for (double& x : a) x = u(rng);
      for (double& x : b) x = u(rng);
      const double p1 = exps[trial % 6], p2 = exps[(trial / 6) % 6];
      const Exponent p[] = {p1, p2};
      const auto est = ascend(outer(a, b), p);
      CHECK(est.status == NormStatus::lower_bound);
      CHECK(est.value == doctest::Approx(dual_norm(a, p1) * dual_norm(b, p2)).epsilon(1e-10));
    }
  }

  SUBCASE("zero tensor") {
    const Exponent p[] = {2.0, 3.0};
    const auto est = ascend(CoefficientTensor::zeros({3, 2}), p);
    CHECK(est.value == 0.0);
  }

  SUBCASE("diagonal m=2, n=3 on l_∞ x l_∞") {
    const ExponentProfile prof({kInfExp, kInfExp}, 1.0);
    const Exponent p[] = {kInfExp, kInfExp};
    const auto t = diagonal_operator(3, prof, 1);
    CHECK(ascend(t, p).value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(enumerate_exact(t, p).value == 3.0);
  }

  SUBCASE("linear functional: one sweep to the dual norm") {
    const CoefficientTensor c({4}, {1.0, -2.0, 0.5, 3.0});
    for (double p : {1.5, 2.0, 4.0, std::numeric_limits<double>::infinity()}) {
      const Exponent pe[] = {p};
      const auto est = ascend(c, pe);
      CHECK(est.iterations == 1);
      CHECK(est.value == doctest::Approx(dual_norm({1.0, -2.0, 0.5, 3.0}, p)).epsilon(1e-14));
    }
  }
}

TEST_CASE("ascend agrees with enumeration at desk sizes") {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 2;
    std::vector<std::size_t> dims(m);
    for (auto& n : dims) n = size(rng);
    const bool vec = trial % 5 == 0;
    const auto t = oracle::random_tensor(rng, dims, vec ? 2 : 1, 2.0);
    Exponents p(m, kInfExp);
    if (!vec && trial % 2) p[static_cast<std::size_t>(trial) % m] = 2.5;
    AscentOptions opts;
    opts.seed = static_cast<std::uint64_t>(trial);
    const auto lo = ascend(t, p, opts);
    const auto ex = enumerate_exact(t, p);
    CHECK(lo.value <= ex.value * (1.0 + 1e-12));
    CHECK(lo.value == doctest::Approx(ex.value).epsilon(1e-6));
    CHECK(output_norm(t, lo.argmax) == doctest::Approx(lo.value).epsilon(1e-12));
  }
}

TEST_CASE("ascend homogeneity, determinism and thread independence") {
  std::mt19937_64 rng(25);
  const auto t = oracle::random_tensor(rng, {4, 5, 3});
  const Exponent p[] = {3.0, 4.0, 5.0};
  AscentOptions opts;
  opts.seed = 99;
  const auto base = ascend(t, p, opts);
  for (double c : {-2.5, 0.1, 7.0}) {
    CHECK(ascend(t.scaled(c), p, opts).value == doctest::Approx(std::abs(c) * base.value).epsilon(1e-12));
  }
  const auto again = ascend(t, p, opts);
  CHECK(again.value == base.value);
  CHECK(again.argmax == base.argmax);
  opts.threads = 4;
  const auto threaded = ascend(t, p, opts);
  CHECK(threaded.value == base.value);
  CHECK(threaded.argmax == base.argmax);
  CHECK(threaded.restarts_used == 17);
}

TEST_CASE("ascent objective never decreases across sweeps") {
  // The solver asserts monotonicity internally; exercising many random
  // vector-valued instances makes any violation throw.
  std::mt19937_64 rng(26);
  const double rhos[] = {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = oracle::random_tensor(rng, {3, 4, 2}, 3, rhos[trial % 5]);
    const Exponent p[] = {1.5, 2.0, std::numeric_limits<double>::infinity()};
    AscentOptions opts;
    opts.seed = static_cast<std::uint64_t>(trial);
    opts.restarts = 4;
    CHECK_NOTHROW(ascend(t, p, opts));
  }
}

TEST_CASE("diagonal family: ascend reaches the closed form") {
  const ExponentProfile scalar({4.0, 4.0}, 1.0);
  CHECK(diagonal_norm_closed_form(16, scalar) == doctest::Approx(4.0).epsilon(1e-15));
  const Exponent p44[] = {4.0, 4.0};
  CHECK(ascend(diagonal_operator(16, scalar, 1), p44).value == doctest::Approx(4.0).epsilon(1e-6));

  const ExponentProfile line({kInfExp}, 2.0);
  CHECK(diagonal_norm_closed_form(9, line) == doctest::Approx(3.0).epsilon(1e-15));

  const ExponentProfile example({10.0, 10.0, 10.0}, 3.0);
  CHECK(diagonal_norm_closed_form(1000, example) == doctest::Approx(std::pow(1000.0, 1.0 / 30.0)).epsilon(1e-13));

  for (std::size_t n : {2u, 8u, 32u, 64u}) {
    const ExponentProfile vec({5.0, 8.0}, 2.0);
    const Exponent pv[] = {5.0, 8.0};
    const auto t = diagonal_operator(n, vec, n);
    CHECK(ascend(t, pv).value == doctest::Approx(diagonal_norm_closed_form(n, vec)).epsilon(1e-6));
    const auto ts = diagonal_operator(n, scalar, 1);
    CHECK(ascend(ts, p44).value == doctest::Approx(diagonal_norm_closed_form(n, scalar)).epsilon(1e-6));
  }
  for (std::size_t n : {2u, 6u, 12u}) {
    const ExponentProfile cubic({10.0, 10.0, 10.0}, 3.0);
    const Exponent p3[] = {10.0, 10.0, 10.0};
    CHECK(ascend(diagonal_operator(n, cubic, n), p3).value ==
          doctest::Approx(diagonal_norm_closed_form(n, cubic)).epsilon(1e-6));
  }
}

TEST_CASE("operator_norm dispatch") {
  const auto zero = CoefficientTensor::zeros({2, 2});
  const Exponent inf2[] = {kInfExp, kInfExp};
  CHECK(operator_norm(zero, inf2).status == NormStatus::exact);
  const Exponent finite2[] = {2.0, 2.0};
  const CoefficientTensor id({2, 2}, {1, 0, 0, 1});
  const auto est = operator_norm(id, finite2);
  CHECK(est.status == NormStatus::lower_bound);
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
}
