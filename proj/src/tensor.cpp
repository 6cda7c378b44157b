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

#include "hllab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hllab/lp.hpp"

namespace hllab {

namespace {

std::size_t checked_cells(const std::vector<std::size_t>& dims, std::size_t value_dim, std::size_t max_cells) {
  if (dims.empty()) throw ValidationError("tensor needs at least one axis");
  if (value_dim == 0) throw ValidationError("value_dim must be at least 1");
  std::size_t cells = value_dim;
  for (std::size_t n : dims) {
    if (n == 0) throw ValidationError("tensor dimensions must be positive");
    if (cells > max_cells / n) throw ValidationError("tensor exceeds the dense cell cap");
    cells *= n;
  }
  if (cells > max_cells) throw ValidationError("tensor exceeds the dense cell cap");
  return cells;
}

}  // namespace

CoefficientTensor::CoefficientTensor(std::vector<std::size_t> dims, std::size_t value_dim, Exponent value_norm,
                                     std::vector<double> entries, std::size_t max_cells)
    : dims_(std::move(dims)), value_dim_(value_dim), value_norm_(value_norm), entries_(std::move(entries)) {
  const std::size_t cells = checked_cells(dims_, value_dim_, max_cells);
  if (entries_.size() != cells) {
    throw ValidationError("tensor expects " + std::to_string(cells) + " entries, got " +
                          std::to_string(entries_.size()));
  }
  if (value_norm_.value() < 1.0) throw ValidationError("value norm must lie in [1, inf]");
  for (double v : entries_) {
    if (!std::isfinite(v)) throw ValidationError("tensor entries must be finite");
  }
}

CoefficientTensor::CoefficientTensor(std::vector<std::size_t> dims, std::vector<double> entries,
                                     std::size_t max_cells)
    : CoefficientTensor(std::move(dims), 1, Exponent(2.0), std::move(entries), max_cells) {}

CoefficientTensor CoefficientTensor::zeros(std::vector<std::size_t> dims, std::size_t value_dim,
                                           Exponent value_norm, std::size_t max_cells) {
  const std::size_t cells = checked_cells(dims, value_dim, max_cells);
  return CoefficientTensor(std::move(dims), value_dim, value_norm, std::vector<double>(cells, 0.0), max_cells);
}

std::size_t CoefficientTensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) throw ValidationError("index arity mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] >= dims_[k]) throw std::out_of_range("tensor index out of range");
    flat = flat * dims_[k] + index[k];
  }
  return flat;
}

std::vector<double> CoefficientTensor::entry_norms() const {
  std::vector<double> out(index_count());
  if (value_dim_ == 1) {
    std::transform(entries_.begin(), entries_.end(), out.begin(), [](double v) { return std::abs(v); });
    return out;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lp::norm(entry(i), value_norm_);
  return out;
}

CoefficientTensor CoefficientTensor::scaled(double c) const {
  std::vector<double> e(entries_);
  for (double& v : e) v *= c;
  return CoefficientTensor(dims_, value_dim_, value_norm_, std::move(e), std::numeric_limits<std::size_t>::max());
}

bool operator==(const CoefficientTensor& a, const CoefficientTensor& b) {
  return a.dims_ == b.dims_ && a.value_dim_ == b.value_dim_ && a.value_norm_ == b.value_norm_ &&
         a.entries_ == b.entries_;
}

double mixed_norm(const CoefficientTensor& t, const MixedExponents& q) {
  if (q.size() != t.arity()) {
    throw ValidationError("mixed norm needs " + std::to_string(t.arity()) + " exponents, got " +
                          std::to_string(q.size()));
  }
  std::vector<double> level = t.entry_norms();
  for (std::size_t k = t.arity(); k-- > 0;) {
    const std::size_t n = t.dims()[k];
    std::vector<double> next(level.size() / n);
    for (std::size_t g = 0; g < next.size(); ++g) {
      next[g] = lp::norm(std::span<const double>(level).subspan(g * n, n), q[k]);
    }
    level = std::move(next);
  }
  return level.front();
}

double flat_norm(const CoefficientTensor& t, Exponent s) {
  const std::vector<double> norms = t.entry_norms();
  if (s.is_infinite()) return *std::max_element(norms.begin(), norms.end());
  long double acc = 0.0L;
  for (double v : norms) acc += std::pow(static_cast<long double>(v), static_cast<long double>(s.value()));
  return static_cast<double>(std::pow(acc, 1.0L / static_cast<long double>(s.value())));
}

CoefficientTensor permute_axes(const CoefficientTensor& t, std::span<const std::size_t> perm) {
  const std::size_t m = t.arity();
  if (perm.size() != m) throw ValidationError("permutation length must equal tensor arity");
  std::vector<bool> seen(m, false);
  for (std::size_t a : perm) {
    if (a >= m || seen[a]) throw ValidationError("invalid axis permutation");
    seen[a] = true;
  }
  std::vector<std::size_t> dims(m);
  for (std::size_t k = 0; k < m; ++k) dims[k] = t.dims()[perm[k]];

  // Source strides in index-tuple units.
  std::vector<std::size_t> src_stride(m, 1);
  for (std::size_t k = m - 1; k-- > 0;) src_stride[k] = src_stride[k + 1] * t.dims()[k + 1];

  const std::size_t d = t.value_dim();
  std::vector<double> out(t.entries().size());
  std::vector<std::size_t> idx(m, 0);
  for (std::size_t flat = 0; flat < t.index_count(); ++flat) {
    std::size_t src = 0;
    for (std::size_t k = 0; k < m; ++k) src += idx[k] * src_stride[perm[k]];
    std::copy_n(t.entries().begin() + static_cast<std::ptrdiff_t>(src * d), d,
                out.begin() + static_cast<std::ptrdiff_t>(flat * d));
    for (std::size_t k = m; k-- > 0;) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return CoefficientTensor(std::move(dims), d, t.value_norm(), std::move(out),
                           std::numeric_limits<std::size_t>::max());
}

}  // namespace hllab
