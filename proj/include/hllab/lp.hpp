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

#include <span>
#include <vector>

#include "hllab/exponent.hpp"

// Finite-dimensional lp primitives shared by the norm evaluators and the
// ascent solver.
namespace hllab::lp {

/// (sum |v_i|^q)^(1/q), or max |v_i| for q = ∞. Accepts q in (0, 1) as the
/// power-sum quasi-norm. Terms are scaled by the largest magnitude and summed
/// in index order.
double norm(std::span<const double> v, Exponent q);

/// x with ||x||_p = 1 maximizing <c, x>; the maximum is ||c||_{p*}.
/// For p = ∞ this is sign(c) with zeros mapped to +1. Returns false (and
/// leaves x untouched) when c is identically zero and p < ∞.
bool dual_maximizer(std::span<const double> c, Exponent p, std::span<double> x);

/// Norming functional phi of y in l_rho: ||phi||_{rho*} = 1 and
/// <phi, y> = ||y||_rho.
///  rho in (1, ∞): phi_i ∝ sign(y_i) |y_i|^(rho-1)
///  rho = 1:       sign(y), ties toward +1
///  rho = ∞:       signed unit vector at the first maximal |y_i|
/// For y = 0 and rho in (1, ∞) the first basis vector is returned.
std::vector<double> duality_map(std::span<const double> y, Exponent rho);

}  // namespace hllab::lp
