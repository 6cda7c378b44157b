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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hllab {

/// Raised for malformed or out-of-domain input (exponents, profiles, tensors,
/// configs). The CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Lebesgue exponent in (0, ∞]. Infinity is a genuine value with
/// 1/∞ = 0, never a large finite stand-in.
class Exponent {
 public:
  Exponent(double value) : value_(value) {  // NOLINT(google-explicit-constructor)
    if (!(value > 0.0)) {
      throw ValidationError("exponent must be positive, got " + std::to_string(value));
    }
  }

  static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

  double value() const { return value_; }
  bool is_infinite() const { return std::isinf(value_); }
  double reciprocal() const { return is_infinite() ? 0.0 : 1.0 / value_; }

  friend bool operator==(Exponent a, Exponent b) { return a.value_ == b.value_; }

 private:
  double value_;
};

using Exponents = std::vector<Exponent>;

/// s* with 1/s + 1/s* = 1; conjugate(1) = ∞ and conjugate(∞) = 1.
Exponent conjugate(Exponent s);

/// Parses "inf", "∞", decimals and exact fractions such as "30/7".
/// A fraction is divided once in double precision.
Exponent parse_exponent(std::string_view text);

/// Comma separated list of exponents, e.g. "10,10,inf".
Exponents parse_exponent_list(std::string_view text);

/// Shortest text that parses back to the same exponent ("inf" for ∞).
std::string format_exponent(Exponent e);

}  // namespace hllab
