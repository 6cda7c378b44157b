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

#include "hllab/lp.hpp"

#include <algorithm>
#include <cmath>

namespace hllab::lp {

namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double sign_or_plus(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

double norm(std::span<const double> v, Exponent q) {
  const double top = max_abs(v);
  if (q.is_infinite() || top == 0.0) return top;
  const double e = q.value();
  double acc = 0.0;
  for (double x : v) acc += std::pow(std::abs(x) / top, e);
  return top * std::pow(acc, 1.0 / e);
}

bool dual_maximizer(std::span<const double> c, Exponent p, std::span<double> x) {
  if (p.is_infinite()) {
    for (std::size_t i = 0; i < c.size(); ++i) x[i] = sign_or_plus(c[i]);
    return true;
  }
  const double top = max_abs(c);
  if (top == 0.0) return false;
  const double power = conjugate(p).value() - 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double a = std::abs(c[i]) / top;
    x[i] = a == 0.0 ? 0.0 : std::copysign(std::pow(a, power), c[i]);
  }
  const double scale = norm(x, p);
  for (double& xi : x) xi /= scale;
  return true;
}

std::vector<double> duality_map(std::span<const double> y, Exponent rho) {
  std::vector<double> phi(y.size(), 0.0);
  if (y.empty()) return phi;
  if (rho.value() == 1.0) {
    for (std::size_t i = 0; i < y.size(); ++i) phi[i] = sign_or_plus(y[i]);
    return phi;
  }
  if (rho.is_infinite()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < y.size(); ++i) {
      if (std::abs(y[i]) > std::abs(y[best])) best = i;
    }
    phi[best] = sign_or_plus(y[best]);
    return phi;
  }
  const double top = max_abs(y);
  if (top == 0.0) {
    phi[0] = 1.0;
    return phi;
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double a = std::abs(y[i]) / top;
    phi[i] = a == 0.0 ? 0.0 : std::copysign(std::pow(a, rho.value() - 1.0), y[i]);
  }
  const double scale = norm(phi, conjugate(rho));
  for (double& v : phi) v /= scale;
  return phi;
}

}  // namespace hllab::lp
