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

#include "hllab/witnesses.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "hllab/lp.hpp"

namespace hllab {

CoefficientTensor diagonal_operator(std::size_t n, const ExponentProfile& profile, std::size_t target_dim) {
  if (n == 0) throw ValidationError("diagonal size must be positive");
  if (target_dim == 0) throw ValidationError("target dimension must be positive");
  const std::size_t m = profile.arity();
  const bool vector_mode = target_dim > 1;
  if (vector_mode && target_dim < n) {
    throw ValidationError("vector-valued diagonal witness needs target_dim >= n");
  }
  const Exponent rho = vector_mode ? Exponent(profile.r()) : Exponent(2.0);
  auto t = CoefficientTensor::zeros(std::vector<std::size_t>(m, n), target_dim, rho);
  std::vector<double> entries(t.entries().begin(), t.entries().end());

  // Flat tuple offset of (j, j, ..., j) is j * (1 + n + n^2 + ... + n^{m-1}).
  std::size_t step = 0;
  for (std::size_t k = 0, pw = 1; k < m; ++k, pw *= n) step += pw;
  for (std::size_t j = 0; j < n; ++j) {
    entries[j * step * target_dim + (vector_mode ? j : 0)] = 1.0;
  }
  return CoefficientTensor(std::vector<std::size_t>(m, n), target_dim, rho, std::move(entries));
}

double diagonal_mixed_norm(std::size_t n, const MixedExponents& q) {
  if (n == 0) throw ValidationError("diagonal size must be positive");
  // Inner levels: one nonzero unit entry among n.
  double inner = 1.0;
  for (std::size_t k = q.size(); k-- > 1;) {
    const double single[] = {inner};
    inner = lp::norm(single, q[k]);
  }
  if (q[0].is_infinite()) return inner;
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += std::pow(inner, q[0].value());
  return std::pow(acc, 1.0 / q[0].value());
}

CoefficientTensor lift_operator(const CoefficientTensor& t, std::size_t leading_size) {
  if (leading_size == 0) throw ValidationError("leading size must be positive");
  std::vector<std::size_t> dims;
  dims.reserve(t.arity() + 1);
  dims.push_back(leading_size);
  dims.insert(dims.end(), t.dims().begin(), t.dims().end());
  std::vector<double> entries(t.entries().size() * leading_size, 0.0);
  std::copy(t.entries().begin(), t.entries().end(), entries.begin());
  return CoefficientTensor(std::move(dims), t.value_dim(), t.value_norm(), std::move(entries));
}

CoefficientTensor slice_operator(const CoefficientTensor& t, Exponent rho) {
  if (!t.scalar_valued()) throw ValidationError("slice_operator needs a scalar-valued tensor");
  if (t.arity() < 2) throw ValidationError("slice_operator needs arity at least 2");
  std::vector<std::size_t> dims(t.dims().begin(), t.dims().end() - 1);
  const std::size_t d = t.dims().back();
  return CoefficientTensor(std::move(dims), d, rho, std::vector<double>(t.entries().begin(), t.entries().end()));
}

RademacherMatrix::RademacherMatrix(int level) : level_(level) {
  if (level < 1 || level > kMaxLevel) {
    throw ValidationError("Rademacher level must lie in 1.." + std::to_string(kMaxLevel));
  }
  std::vector<std::int8_t> prev = {1, -1};
  for (int n = 1; n < level; ++n) {
    const std::size_t prev_rows = std::size_t{1} << n;
    const std::size_t cols = static_cast<std::size_t>(n) + 1;
    std::vector<std::int8_t> next(2 * prev_rows * cols);
    for (std::size_t half = 0; half < 2; ++half) {
      for (std::size_t i = 0; i < prev_rows; ++i) {
        std::int8_t* row = next.data() + (half * prev_rows + i) * cols;
        row[0] = half == 0 ? 1 : -1;
        std::copy_n(prev.data() + i * n, n, row + 1);
      }
    }
    prev = std::move(next);
  }
  entries_ = std::move(prev);
}

std::vector<std::int64_t> RademacherMatrix::gram() const {
  const std::size_t n = cols();
  std::vector<std::int64_t> g(n * n, 0);
  for (std::size_t i = 0; i < rows(); ++i) {
    const std::int8_t* row = entries_.data() + i * n;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) g[a * n + b] += row[a] * row[b];
    }
  }
  return g;
}

std::string RademacherMatrix::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) out << ',';
      out << static_cast<int>((*this)(i, j));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

struct MatrixView {
  const RademacherMatrix& r;
  bool forward;
  std::size_t rows() const { return forward ? r.rows() : r.cols(); }
  std::size_t cols() const { return forward ? r.cols() : r.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return forward ? r(i, j) : r(j, i); }
};

NormEstimate exact_estimate(double value, std::vector<double> y, std::vector<double> x) {
  NormEstimate est;
  est.value = value;
  est.status = NormStatus::exact;
  est.argmax = {std::move(y), std::move(x)};
  return est;
}

}  // namespace

CoefficientTensor rademacher_bilinear(const RademacherMatrix& r, MatrixDirection direction) {
  const MatrixView m{r, direction == MatrixDirection::forward};
  std::vector<double> entries(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) entries[i * m.cols() + j] = m(i, j);
  }
  return CoefficientTensor({m.rows(), m.cols()}, std::move(entries));
}

NormEstimate rademacher_matrix_norm(const RademacherMatrix& r, Exponent from, Exponent to, MatrixDirection direction,
                                    const AscentOptions& options) {
  if (from.value() < 1.0 || to.value() < 1.0) throw ValidationError("matrix norm exponents must lie in [1, inf]");
  const MatrixView m{r, direction == MatrixDirection::forward};

  if (from.value() == 2.0 && to.value() == 2.0) {
    const std::size_t n = r.cols();
    const auto g = r.gram();
    Eigen::MatrixXd gram(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) gram(a, b) = static_cast<double>(g[a * n + b]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    const double sigma = std::sqrt(eig.eigenvalues()(n - 1));
    const Eigen::VectorXd v = eig.eigenvectors().col(n - 1);
    // R v / sigma is the matching left singular vector.
    std::vector<double> right(v.data(), v.data() + n);
    std::vector<double> left(r.rows(), 0.0);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) left[i] += r(i, j) * right[j];
      left[i] /= sigma;
    }
    if (direction == MatrixDirection::forward) return exact_estimate(sigma, std::move(left), std::move(right));
    return exact_estimate(sigma, std::move(right), std::move(left));
  }

  if (from.value() == 1.0) {
    double best = -1.0;
    std::size_t best_col = 0;
    std::vector<double> col(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m(i, j);
      const double v = lp::norm(col, to);
      if (v > best) best = v, best_col = j;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m(i, best_col);
    std::vector<double> x(m.cols(), 0.0);
    x[best_col] = 1.0;
    return exact_estimate(best, lp::duality_map(col, to), std::move(x));
  }

  if (to.is_infinite()) {
    const Exponent dual = conjugate(from);
    double best = -1.0;
    std::size_t best_row = 0;
    std::vector<double> row(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
      const double v = lp::norm(row, dual);
      if (v > best) best = v, best_row = i;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(best_row, j);
    std::vector<double> x(m.cols());
    lp::dual_maximizer(row, from, x);
    std::vector<double> y(m.rows(), 0.0);
    y[best_row] = 1.0;
    return exact_estimate(best, std::move(y), std::move(x));
  }

  const CoefficientTensor form = rademacher_bilinear(r, direction);
  const Exponent p[] = {conjugate(to), from};
  return ascend(form, p, options);
}

}  // namespace hllab
