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

#include "hllab/exponent.hpp"

#include <charconv>

namespace hllab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError("cannot parse exponent '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Exponent conjugate(Exponent s) {
  if (s.is_infinite()) return Exponent(1.0);
  if (s.value() < 1.0) {
    throw ValidationError("conjugate exponent requires s >= 1, got " + std::to_string(s.value()));
  }
  if (s.value() == 1.0) return Exponent::infinity();
  return Exponent(s.value() / (s.value() - 1.0));
}

Exponent parse_exponent(std::string_view text) {
  const auto s = trim(text);
  if (s == "inf" || s == "Inf" || s == "INF" || s == "infinity" || s == "∞") {
    return Exponent::infinity();
  }
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const double num = parse_real(trim(s.substr(0, slash)), text);
    const double den = parse_real(trim(s.substr(slash + 1)), text);
    if (den == 0.0) throw ValidationError("zero denominator in exponent '" + std::string(text) + "'");
    return Exponent(num / den);
  }
  const double v = parse_real(s, text);
  if (std::isinf(v)) return Exponent::infinity();
  return Exponent(v);
}

Exponents parse_exponent_list(std::string_view text) {
  Exponents out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_exponent(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_exponent(Exponent e) {
  if (e.is_infinite()) return "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, e.value());
  return std::string(buf, res.ptr);
}

}  // namespace hllab
