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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hllab/experiments.hpp"
#include "hllab/exponent.hpp"
#include "hllab/exponents.hpp"
#include "hllab/opnorm.hpp"
#include "hllab/tensor.hpp"
#include "hllab/witnesses.hpp"

namespace py = pybind11;
using namespace hllab;

namespace {

// Exponents arrive as numbers or as strings such as "inf" and "30/7".
Exponent to_exponent(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_exponent(h.cast<std::string>());
  return Exponent(h.cast<double>());
}

Exponents to_exponents(const py::iterable& seq) {
  Exponents out;
  for (const auto& h : seq) out.push_back(to_exponent(h));
  return out;
}

ExponentProfile to_profile(const py::iterable& p, const py::handle& r) {
  return ExponentProfile(to_exponents(p), to_exponent(r).value());
}

AscentOptions ascent_options(std::uint64_t seed, int restarts, int max_sweeps, unsigned threads) {
  AscentOptions o;
  o.seed = seed;
  o.restarts = restarts;
  o.max_sweeps = max_sweeps;
  o.threads = threads;
  return o;
}

py::dict growth_dict(const GrowthReport& r) {
  py::dict d;
  d["family"] = r.family;
  d["sizes"] = r.sizes;
  d["mixed_norms"] = r.mixed_norms;
  d["operator_norms"] = r.operator_norms;
  d["ratios"] = r.ratios;
  d["fitted_slope"] = r.fitted_slope;
  d["theoretical_slope"] = r.theoretical_slope;
  d["slope_threshold"] = r.slope_threshold;
  d["lifted_levels"] = r.lifted_levels;
  d["verdict"] = std::string(to_string(r.verdict));
  return d;
}

}  // namespace

PYBIND11_MODULE(_hllab, m) {
  m.doc() = "Mixed-sum exponents, mixed norms and multilinear operator norms";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("conjugate", [](const py::handle& p) { return conjugate(to_exponent(p)).value(); }, py::arg("p"));
  m.def("parse_exponent", [](const std::string& s) { return parse_exponent(s).value(); }, py::arg("text"));

  m.def(
      "lambda_exponent",
      [](const py::iterable& p, const py::handle& r, std::size_t k) { return lambda_exponent(to_profile(p, r), k); },
      py::arg("p"), py::arg("r"), py::arg("k"));
  m.def(
      "lambda_thresholds", [](const py::iterable& p, const py::handle& r) { return lambda_thresholds(to_profile(p, r)); },
      py::arg("p"), py::arg("r"));
  m.def(
      "bilinear_classics",
      [](const py::handle& p, const py::handle& q) {
        const auto b = bilinear_classics(to_exponent(p), to_exponent(q));
        return py::make_tuple(b.lambda, b.mu);
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "admissible",
      [](const py::iterable& p, const py::handle& r, const py::iterable& q, double slack, double tolerance) {
        const auto rep = admissible(to_profile(p, r), MixedExponents(to_exponents(q)), slack, tolerance);
        py::dict d;
        d["admissible"] = rep.admissible;
        d["margins"] = rep.margins;
        d["thresholds"] = rep.thresholds;
        return d;
      },
      py::arg("p"), py::arg("r"), py::arg("q"), py::arg("slack") = 0.0,
      py::arg("tolerance") = kAdmissibilityTolerance);

  py::class_<CoefficientTensor>(m, "Tensor")
      .def(py::init([](std::vector<std::size_t> dims, std::vector<double> entries, std::size_t value_dim,
                       const py::handle& value_norm) {
             return CoefficientTensor(std::move(dims), value_dim, to_exponent(value_norm), std::move(entries));
           }),
           py::arg("dims"), py::arg("entries"), py::arg("value_dim") = 1, py::arg("value_norm") = 2.0)
      .def_static("zeros", [](std::vector<std::size_t> dims) { return CoefficientTensor::zeros(std::move(dims)); })
      .def_static("from_json", [](const std::string& text) { return tensor_from_json(text); })
      .def_static("load", [](const std::string& path) { return load_tensor(path); })
      .def("to_json", [](const CoefficientTensor& t) { return to_json(t); })
      .def("save", [](const CoefficientTensor& t, const std::string& path) { save_tensor(t, path); })
      .def_property_readonly("dims", &CoefficientTensor::dims)
      .def_property_readonly("arity", &CoefficientTensor::arity)
      .def_property_readonly("value_dim", &CoefficientTensor::value_dim)
      .def_property_readonly("value_norm", [](const CoefficientTensor& t) { return t.value_norm().value(); })
      .def_property_readonly("entries",
                             [](const CoefficientTensor& t) {
                               return std::vector<double>(t.entries().begin(), t.entries().end());
                             })
      .def("__eq__", [](const CoefficientTensor& a, const CoefficientTensor& b) { return a == b; })
      .def("__repr__", [](const CoefficientTensor& t) {
        std::string dims;
        for (std::size_t n : t.dims()) dims += (dims.empty() ? "" : "x") + std::to_string(n);
        return "<hllab.Tensor " + dims + " value_dim=" + std::to_string(t.value_dim()) + ">";
      });

  m.def(
      "mixed_norm",
      [](const CoefficientTensor& t, const py::iterable& q) { return mixed_norm(t, MixedExponents(to_exponents(q))); },
      py::arg("tensor"), py::arg("q"));
  m.def(
      "flat_norm", [](const CoefficientTensor& t, const py::handle& s) { return flat_norm(t, to_exponent(s)); },
      py::arg("tensor"), py::arg("s"));
  m.def(
      "permute_axes",
      [](const CoefficientTensor& t, const std::vector<std::size_t>& perm) { return permute_axes(t, perm); },
      py::arg("tensor"), py::arg("perm"));

  py::class_<NormEstimate>(m, "NormEstimate")
      .def_readonly("value", &NormEstimate::value)
      .def_property_readonly("status", [](const NormEstimate& e) { return std::string(to_string(e.status)); })
      .def_readonly("restarts_used", &NormEstimate::restarts_used)
      .def_readonly("iterations", &NormEstimate::iterations)
      .def_readonly("reinitializations", &NormEstimate::reinitializations)
      .def_readonly("argmax", &NormEstimate::argmax)
      .def("__repr__", [](const NormEstimate& e) {
        return "<hllab.NormEstimate " + std::to_string(e.value) + " " + std::string(to_string(e.status)) + ">";
      });

  m.def(
      "ascend",
      [](const CoefficientTensor& t, const py::iterable& p, std::uint64_t seed, int restarts, int max_sweeps,
         unsigned threads) {
        const Exponents ps = to_exponents(p);
        py::gil_scoped_release release;
        return ascend(t, ps, ascent_options(seed, restarts, max_sweeps, threads));
      },
      py::arg("tensor"), py::arg("p"), py::arg("seed") = 0, py::arg("restarts") = 16, py::arg("max_sweeps") = 500,
      py::arg("threads") = 1);
  m.def(
      "enumerate_exact",
      [](const CoefficientTensor& t, const py::iterable& p, unsigned threads) {
        const Exponents ps = to_exponents(p);
        py::gil_scoped_release release;
        return enumerate_exact(t, ps, kEnumerationMaxBits, threads);
      },
      py::arg("tensor"), py::arg("p"), py::arg("threads") = 1);
  m.def(
      "operator_norm",
      [](const CoefficientTensor& t, const py::iterable& p, std::uint64_t seed, int restarts, unsigned threads) {
        const Exponents ps = to_exponents(p);
        py::gil_scoped_release release;
        return operator_norm(t, ps, ascent_options(seed, restarts, 500, threads));
      },
      py::arg("tensor"), py::arg("p"), py::arg("seed") = 0, py::arg("restarts") = 16, py::arg("threads") = 1);
  m.def(
      "enumerable",
      [](const CoefficientTensor& t, const py::iterable& p) { return enumerable(t, to_exponents(p)); },
      py::arg("tensor"), py::arg("p"));
  m.def(
      "diagonal_norm_closed_form",
      [](std::size_t n, const py::iterable& p, const py::handle& r) {
        return diagonal_norm_closed_form(n, to_profile(p, r));
      },
      py::arg("n"), py::arg("p"), py::arg("r"));

  m.def(
      "diagonal_operator",
      [](std::size_t n, const py::iterable& p, const py::handle& r, std::size_t target_dim) {
        return diagonal_operator(n, to_profile(p, r), target_dim);
      },
      py::arg("n"), py::arg("p"), py::arg("r"), py::arg("target_dim") = 1);
  m.def(
      "diagonal_mixed_norm",
      [](std::size_t n, const py::iterable& q) { return diagonal_mixed_norm(n, MixedExponents(to_exponents(q))); },
      py::arg("n"), py::arg("q"));
  m.def("lift_operator", &lift_operator, py::arg("tensor"), py::arg("leading_size"));
  m.def(
      "slice_operator",
      [](const CoefficientTensor& t, const py::handle& rho) { return slice_operator(t, to_exponent(rho)); },
      py::arg("tensor"), py::arg("rho"));
  m.def(
      "rademacher",
      [](int level) {
        const RademacherMatrix r(level);
        std::vector<std::vector<int>> rows(r.rows(), std::vector<int>(r.cols()));
        for (std::size_t i = 0; i < r.rows(); ++i) {
          for (std::size_t j = 0; j < r.cols(); ++j) rows[i][j] = r(i, j);
        }
        return rows;
      },
      py::arg("level"));
  m.def(
      "rademacher_matrix_norm",
      [](int level, const py::handle& from, const py::handle& to, const std::string& direction, std::uint64_t seed,
         int restarts) {
        if (direction != "forward" && direction != "transpose") {
          throw ValidationError("direction must be 'forward' or 'transpose'");
        }
        const RademacherMatrix r(level);
        const auto dir = direction == "forward" ? MatrixDirection::forward : MatrixDirection::transpose;
        const Exponent f = to_exponent(from), t = to_exponent(to);
        py::gil_scoped_release release;
        return rademacher_matrix_norm(r, f, t, dir, ascent_options(seed, restarts, 500, 1));
      },
      py::arg("level"), py::arg("from_exponent"), py::arg("to_exponent"), py::arg("direction") = "forward",
      py::arg("seed") = 0, py::arg("restarts") = 16);

  m.def(
      "growth_scan",
      [](const py::iterable& p, const py::handle& r, const py::iterable& q, const std::vector<std::size_t>& sizes,
         double slope_threshold) {
        return growth_dict(growth_scan(to_profile(p, r), MixedExponents(to_exponents(q)), sizes, slope_threshold));
      },
      py::arg("p"), py::arg("r"), py::arg("q"), py::arg("sizes"), py::arg("slope_threshold") = kDefaultSlopeThreshold);
  m.def(
      "lower_index_scan",
      [](const py::iterable& p, const py::handle& r, std::size_t k, const py::iterable& q,
         const std::vector<std::size_t>& sizes, double slope_threshold) {
        return growth_dict(
            lower_index_scan(to_profile(p, r), k, MixedExponents(to_exponents(q)), sizes, slope_threshold));
      },
      py::arg("p"), py::arg("r"), py::arg("k"), py::arg("q"), py::arg("sizes"),
      py::arg("slope_threshold") = kDefaultSlopeThreshold);
  m.def(
      "verify_constant_one",
      [](const py::iterable& p, const py::handle& r, const py::iterable& q, const std::string& suite,
         std::uint64_t seed, double tolerance, int restarts, unsigned threads) {
        const ExponentProfile profile = to_profile(p, r);
        const MixedExponents qs(to_exponents(q));
        const Suite s = parse_suite(suite, seed);
        VerifyOptions opts;
        opts.tolerance = tolerance;
        opts.ascent = ascent_options(seed, restarts, 500, threads);
        CampaignResult res;
        {
          py::gil_scoped_release release;
          res = verify_constant_one(profile, qs, s, opts);
        }
        py::list reports;
        for (const auto& rep : res.reports) {
          py::dict d;
          d["instance"] = rep.instance;
          d["mixed_norm"] = rep.mixed_norm;
          d["operator_norm"] = rep.operator_norm.value;
          d["status"] = std::string(to_string(rep.operator_norm.status));
          d["ratio"] = rep.ratio;
          d["verdict"] = std::string(to_string(rep.verdict));
          reports.append(d);
        }
        py::dict out;
        out["passed"] = res.passed();
        out["max_exact_ratio"] = res.max_exact_ratio();
        out["reports"] = reports;
        return out;
      },
      py::arg("p"), py::arg("r"), py::arg("q"), py::arg("suite"), py::arg("seed") = 0, py::arg("tolerance") = 1e-9,
      py::arg("restarts") = 16, py::arg("threads") = 1);
}
