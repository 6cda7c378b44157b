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

#include "hllab/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hllab/experiments.hpp"
#include "hllab/exponents.hpp"
#include "hllab/opnorm.hpp"
#include "hllab/tensor.hpp"
#include "hllab/witnesses.hpp"

namespace hllab::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string format = "csv";
  std::string output;
  std::optional<unsigned> threads;
  std::uint64_t seed = 0;
  int restarts = 16;
  int max_sweeps = 500;
  double tolerance = 1e-9;

  std::optional<std::size_t> m;
  std::string p;
  double r = 1.0;
  std::string q;
  double slack = 0.0;
  std::string bilinear;

  std::string tensor;
  std::size_t diagonal = 0;
  std::optional<std::size_t> value_dim;
  std::string flat;
  std::string save_tensor;
  std::string method = "auto";

  std::string sizes;
  std::size_t k = 1;
  double slope_threshold = kDefaultSlopeThreshold;

  std::string suite;

  int level = 0;
  std::string emit = "csv";
  std::string from = "2";
  std::string to = "2";
  std::string direction = "forward";
};

/// Report in both shapes; the writer picks one.
struct Result {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string raw;  // emitted verbatim when non-empty
  int exit_code = kExitOk;
};

json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return std::strtod(format_number(v).c_str(), nullptr);
}

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

json exponents_json(const Exponents& e) {
  json a = json::array();
  for (const auto& x : e) a.push_back(number(x.value()));
  return a;
}

std::string join_exponents(const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ";" : "") + format_number(e[i].value());
  return s;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw ValidationError("cannot parse size '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

ExponentProfile profile_from(const RunConfig& c) {
  if (c.p.empty()) throw ValidationError("--p is required");
  Exponents p = parse_exponent_list(c.p);
  if (c.m && *c.m != p.size()) {
    throw ValidationError("--m is " + std::to_string(*c.m) + " but --p lists " + std::to_string(p.size()) +
                          " exponents");
  }
  return ExponentProfile(std::move(p), c.r);
}

unsigned thread_count(const RunConfig& c) {
  if (c.threads) return std::max(1u, *c.threads);
  if (const char* env = std::getenv("HLLAB_THREADS")) {
    unsigned v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ValidationError("HLLAB_THREADS must be an integer");
    return std::max(1u, v);
  }
  return 1;
}

AscentOptions ascent_from(const RunConfig& c) {
  AscentOptions o;
  o.seed = c.seed;
  o.restarts = c.restarts;
  o.max_sweeps = c.max_sweeps;
  o.threads = thread_count(c);
  return o;
}

json estimate_json(const NormEstimate& e) {
  json j;
  j["value"] = number(e.value);
  j["status"] = std::string(to_string(e.status));
  j["restarts_used"] = e.restarts_used;
  j["iterations"] = e.iterations;
  j["reinitializations"] = e.reinitializations;
  j["argmax"] = json::array();
  for (const auto& a : e.argmax) j["argmax"].push_back(numbers(a));
  return j;
}

json header_json(std::string_view command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = std::string(command);
  return j;
}

CoefficientTensor tensor_from(const RunConfig& c, std::size_t arity_hint) {
  if (!c.tensor.empty() && c.diagonal > 0) throw ValidationError("use either --tensor or --diagonal");
  if (!c.tensor.empty()) return load_tensor(c.tensor);
  if (c.diagonal == 0) throw ValidationError("a tensor source is required (--tensor or --diagonal)");
  const std::size_t m = c.m ? *c.m : arity_hint;
  if (m == 0) throw ValidationError("--diagonal needs the arity (--m, --p or --q)");
  Exponents p = c.p.empty() ? Exponents(m, Exponent::infinity()) : parse_exponent_list(c.p);
  const ExponentProfile profile(std::move(p), c.r);
  if (profile.arity() != m) throw ValidationError("--m does not match the number of exponents");
  const std::size_t d = c.value_dim ? *c.value_dim : (profile.scalar_valued() ? 1 : c.diagonal);
  return diagonal_operator(c.diagonal, profile, d);
}

Result cmd_exponents(const RunConfig& c) {
  Result res;
  res.doc = header_json("exponents");
  if (!c.bilinear.empty()) {
    const Exponents pq = parse_exponent_list(c.bilinear);
    if (pq.size() != 2) throw ValidationError("--bilinear takes two exponents p,q");
    const auto b = bilinear_classics(pq[0], pq[1]);
    res.doc["bilinear"] = {{"p", number(pq[0].value())}, {"q", number(pq[1].value())},
                           {"lambda", number(b.lambda)}, {"mu", number(b.mu)}};
    res.header = {"p", "q", "lambda", "mu"};
    res.rows.push_back(
        {format_number(pq[0].value()), format_number(pq[1].value()), format_number(b.lambda), format_number(b.mu)});
    return res;
  }
  const ExponentProfile profile = profile_from(c);
  const auto thresholds = lambda_thresholds(profile);
  res.doc["profile"] = {{"m", profile.arity()}, {"p", exponents_json(profile.p())}, {"r", number(profile.r())}};
  res.doc["thresholds"] = numbers(thresholds);
  res.header = {"k", "threshold"};
  if (c.q.empty()) {
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
      res.rows.push_back({std::to_string(k + 1), format_number(thresholds[k])});
    }
    return res;
  }
  const MixedExponents q(parse_exponent_list(c.q));
  const auto report = admissible(profile, q, c.slack, c.tolerance);
  res.doc["q"] = exponents_json(q.values());
  res.doc["slack"] = number(c.slack);
  res.doc["margins"] = numbers(report.margins);
  res.doc["admissible"] = report.admissible;
  res.header.insert(res.header.end(), {"q", "margin", "admissible"});
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    res.rows.push_back({std::to_string(k + 1), format_number(thresholds[k]), format_number(q[k].value()),
                        format_number(report.margins[k]), report.admissible ? "true" : "false"});
  }
  return res;
}

Result cmd_mixed_norm(const RunConfig& c) {
  if (c.q.empty() == c.flat.empty()) throw ValidationError("mixed-norm needs exactly one of --q or --flat");
  Exponents q = c.q.empty() ? Exponents{} : parse_exponent_list(c.q);
  const CoefficientTensor t = tensor_from(c, q.size());
  if (!c.save_tensor.empty()) save_tensor(t, c.save_tensor);
  Result res;
  res.doc = header_json("mixed-norm");
  res.doc["dims"] = t.dims();
  res.doc["value_dim"] = t.value_dim();
  res.header = {"norm", "exponents", "value"};
  if (!c.flat.empty()) {
    const Exponent s = parse_exponent(c.flat);
    const double v = flat_norm(t, s);
    res.doc["norm"] = "flat";
    res.doc["exponents"] = exponents_json({s});
    res.doc["value"] = number(v);
    res.rows.push_back({"flat", format_number(s.value()), format_number(v)});
  } else {
    const MixedExponents mq(std::move(q));
    const double v = mixed_norm(t, mq);
    res.doc["norm"] = "mixed";
    res.doc["exponents"] = exponents_json(mq.values());
    res.doc["value"] = number(v);
    res.rows.push_back({"mixed", join_exponents(mq.values()), format_number(v)});
  }
  return res;
}

Result cmd_opnorm(const RunConfig& c) {
  if (c.p.empty()) throw ValidationError("--p is required");
  const Exponents p = parse_exponent_list(c.p);
  const CoefficientTensor t = tensor_from(c, p.size());
  if (!c.save_tensor.empty()) save_tensor(t, c.save_tensor);
  const AscentOptions opts = ascent_from(c);
  NormEstimate est;
  if (c.method == "auto") {
    est = operator_norm(t, p, opts);
  } else if (c.method == "exact") {
    est = enumerate_exact(t, p, kEnumerationMaxBits, opts.threads);
  } else if (c.method == "ascend") {
    est = ascend(t, p, opts);
  } else {
    throw ValidationError("--method must be auto, exact or ascend");
  }
  Result res;
  res.doc = header_json("opnorm");
  res.doc["p"] = exponents_json(p);
  res.doc["seed"] = c.seed;
  res.doc["estimate"] = estimate_json(est);
  res.header = {"value", "status", "restarts_used", "iterations", "reinitializations"};
  res.rows.push_back({format_number(est.value), std::string(to_string(est.status)), std::to_string(est.restarts_used),
                      std::to_string(est.iterations), std::to_string(est.reinitializations)});
  return res;
}

Result cmd_growth(const RunConfig& c) {
  const ExponentProfile profile = profile_from(c);
  if (c.q.empty()) throw ValidationError("--q is required");
  if (c.sizes.empty()) throw ValidationError("--sizes is required");
  const MixedExponents q(parse_exponent_list(c.q));
  const auto sizes = parse_sizes(c.sizes);
  const GrowthReport rep = c.k <= 1 ? growth_scan(profile, q, sizes, c.slope_threshold)
                                    : lower_index_scan(profile, c.k, q, sizes, c.slope_threshold);
  Result res;
  res.doc = header_json("growth");
  res.doc["family"] = rep.family;
  res.doc["k"] = c.k;
  res.doc["sizes"] = rep.sizes;
  res.doc["mixed_norms"] = numbers(rep.mixed_norms);
  res.doc["operator_norms"] = numbers(rep.operator_norms);
  res.doc["ratios"] = numbers(rep.ratios);
  res.doc["fitted_slope"] = number(rep.fitted_slope);
  res.doc["theoretical_slope"] = number(rep.theoretical_slope);
  res.doc["slope_threshold"] = number(rep.slope_threshold);
  res.doc["lifted_levels"] = rep.lifted_levels;
  res.doc["verdict"] = std::string(to_string(rep.verdict));
  res.header = {"n", "mixed_norm", "operator_norm", "ratio", "fitted_slope", "theoretical_slope", "verdict"};
  for (std::size_t i = 0; i < rep.sizes.size(); ++i) {
    res.rows.push_back({std::to_string(rep.sizes[i]), format_number(rep.mixed_norms[i]),
                        format_number(rep.operator_norms[i]), format_number(rep.ratios[i]),
                        format_number(rep.fitted_slope), format_number(rep.theoretical_slope),
                        std::string(to_string(rep.verdict))});
  }
  return res;
}

Result cmd_verify(const RunConfig& c) {
  const ExponentProfile profile = profile_from(c);
  if (c.q.empty()) throw ValidationError("--q is required");
  if (c.suite.empty()) throw ValidationError("--suite is required");
  const MixedExponents q(parse_exponent_list(c.q));
  const Suite suite = parse_suite(c.suite, c.seed);
  VerifyOptions opts;
  opts.tolerance = c.tolerance;
  opts.ascent = ascent_from(c);
  const CampaignResult campaign = verify_constant_one(profile, q, suite, opts);

  Result res;
  res.doc = header_json("verify");
  res.doc["profile"] = {{"m", profile.arity()}, {"p", exponents_json(profile.p())}, {"r", number(profile.r())}};
  res.doc["q"] = exponents_json(q.values());
  res.doc["seed"] = c.seed;
  res.doc["tolerance"] = number(c.tolerance);
  res.doc["passed"] = campaign.passed();
  res.doc["max_exact_ratio"] = number(campaign.max_exact_ratio());
  res.doc["counts"] = {{"pass", campaign.count(Verdict::pass)},
                       {"needs_review", campaign.count(Verdict::needs_review)},
                       {"fail", campaign.count(Verdict::fail)},
                       {"informational", campaign.count(Verdict::informational)}};
  res.doc["reports"] = json::array();
  res.header = {"instance", "mixed_norm", "operator_norm", "status", "ratio", "verdict"};
  for (const auto& r : campaign.reports) {
    res.doc["reports"].push_back({{"instance", r.instance},
                                  {"mixed_norm", number(r.mixed_norm)},
                                  {"operator_norm", number(r.operator_norm.value)},
                                  {"status", std::string(to_string(r.operator_norm.status))},
                                  {"ratio", number(r.ratio)},
                                  {"verdict", std::string(to_string(r.verdict))}});
    res.rows.push_back({r.instance, format_number(r.mixed_norm), format_number(r.operator_norm.value),
                        std::string(to_string(r.operator_norm.status)), format_number(r.ratio),
                        std::string(to_string(r.verdict))});
  }
  res.exit_code = campaign.passed() ? kExitOk : kExitCampaignFailed;
  return res;
}

Result cmd_rademacher(const RunConfig& c) {
  const RademacherMatrix rm(c.level);
  Result res;
  if (c.emit == "csv") {
    res.raw = rm.to_csv();
    return res;
  }
  res.doc = header_json("rademacher");
  res.doc["n"] = c.level;
  if (c.emit == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < rm.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < rm.cols(); ++j) row.push_back(static_cast<int>(rm(i, j)));
      rows.push_back(std::move(row));
    }
    res.doc["rows"] = std::move(rows);
    res.raw = res.doc.dump() + "\n";
    return res;
  }
  if (c.emit != "norm") throw ValidationError("--emit must be csv, json or norm");
  MatrixDirection dir;
  if (c.direction == "forward") {
    dir = MatrixDirection::forward;
  } else if (c.direction == "transpose") {
    dir = MatrixDirection::transpose;
  } else {
    throw ValidationError("--direction must be forward or transpose");
  }
  const Exponent from = parse_exponent(c.from);
  const Exponent to = parse_exponent(c.to);
  const NormEstimate est = rademacher_matrix_norm(rm, from, to, dir, ascent_from(c));
  res.doc["from"] = number(from.value());
  res.doc["to"] = number(to.value());
  res.doc["direction"] = c.direction;
  res.doc["estimate"] = estimate_json(est);
  res.header = {"n", "from", "to", "direction", "value", "status"};
  res.rows.push_back({std::to_string(c.level), format_number(from.value()), format_number(to.value()), c.direction,
                      format_number(est.value), std::string(to_string(est.status))});
  return res;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string render(const Result& res, const std::string& format) {
  if (!res.raw.empty()) return res.raw;
  if (format == "json") return res.doc.dump(2) + "\n";
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
    out += '\n';
  };
  line(res.header);
  for (const auto& r : res.rows) line(r);
  return out;
}

std::string config_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + config_value(v[i]);
    return s;
  }
  throw ValidationError("unsupported config value " + v.dump());
}

/// Turns {"p": [10, 10], "r": 3} into {"--p", "10,10", "--r", "3"}.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config does not parse: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  std::vector<std::string> out;
  for (const auto& [key, value] : j.items()) {
    if (key == "config") throw ValidationError("config files cannot nest --config");
    out.push_back("--" + key);
    out.push_back(config_value(value));
  }
  return out;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", c.output, "Write results to this file instead of stdout");
  sub->add_option("--threads", c.threads, "Worker thread cap (falls back to HLLAB_THREADS)");
  sub->add_option("--config", "JSON file whose keys are long option names");
}

void add_profile(CLI::App* sub, RunConfig& c) {
  sub->add_option("--m", c.m, "Arity (checked against --p)");
  sub->add_option("--p", c.p, "Domain exponents, comma separated; 'inf' and fractions allowed");
  sub->add_option("--r", c.r, "Cotype parameter r >= 2, or 1 for scalar targets");
}

void add_ascent(CLI::App* sub, RunConfig& c) {
  sub->add_option("--seed", c.seed, "Seed for every random choice");
  sub->add_option("--restarts", c.restarts, "Random restarts besides the all-ones start");
  sub->add_option("--max-sweeps", c.max_sweeps, "Sweep cap per start");
}

void add_tensor_source(CLI::App* sub, RunConfig& c) {
  sub->add_option("--tensor", c.tensor, "Tensor JSON file");
  sub->add_option("--diagonal", c.diagonal, "Use the diagonal witness of this size");
  sub->add_option("--d", c.value_dim, "Target dimension of the diagonal witness");
  sub->add_option("--save-tensor", c.save_tensor, "Also write the tensor in exchange format");
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"hllab: mixed-norm inequalities for multilinear operators on lp spaces", "hllab"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  auto* exponents = app.add_subcommand("exponents", "Optimal nested-sum thresholds and admissibility");
  add_common(exponents, c);
  add_profile(exponents, c);
  exponents->add_option("--q", c.q, "Mixed exponents to test for admissibility");
  exponents->add_option("--slack", c.slack, "Epsilon slack added to every q_k");
  exponents->add_option("--tolerance", c.tolerance, "Comparison tolerance");
  exponents->add_option("--bilinear", c.bilinear, "Print the classical bilinear exponents for p,q");

  auto* mixed = app.add_subcommand("mixed-norm", "Nested mixed norm of a coefficient tensor");
  add_common(mixed, c);
  add_tensor_source(mixed, c);
  add_profile(mixed, c);
  mixed->add_option("--q", c.q, "Mixed exponents, outermost first");
  mixed->add_option("--flat", c.flat, "Unnested exponent s instead of --q");

  auto* opnorm = app.add_subcommand("opnorm", "Operator norm on a product of lp balls");
  add_common(opnorm, c);
  add_tensor_source(opnorm, c);
  add_profile(opnorm, c);
  add_ascent(opnorm, c);
  opnorm->add_option("--method", c.method, "auto, exact or ascend");

  auto* growth = app.add_subcommand("growth", "Growth of mixed norm / operator norm along the diagonal family");
  add_common(growth, c);
  add_profile(growth, c);
  growth->add_option("--q", c.q, "Mixed exponents");
  growth->add_option("--sizes", c.sizes, "Increasing sizes, comma separated (at least 4)");
  growth->add_option("--k", c.k, "Threshold index to probe (k >= 2 lifts the family)");
  growth->add_option("--slope-threshold", c.slope_threshold, "Slope above which the verdict is 'growing'");

  auto* verify = app.add_subcommand("verify", "Constant-one campaign over a witness suite");
  add_common(verify, c);
  add_profile(verify, c);
  add_ascent(verify, c);
  verify->add_option("--q", c.q, "Mixed exponents");
  verify->add_option("--suite", c.suite, "e.g. random:3x3:200,rank_one:3x3:50,diagonal:8");
  verify->add_option("--tolerance", c.tolerance, "Pass when ratio <= 1 + tolerance");

  auto* rad = app.add_subcommand("rademacher", "Rademacher matrices and their norms");
  add_common(rad, c);
  add_ascent(rad, c);
  rad->add_option("--n", c.level, "Level (1..20)")->required();
  rad->add_option("--emit", c.emit, "csv, json or norm");
  rad->add_option("--from", c.from, "Domain exponent t for --emit norm");
  rad->add_option("--to", c.to, "Target exponent s for --emit norm");
  rad->add_option("--direction", c.direction, "forward or transpose");

  try {
    // Expand --config before the real parse; explicit flags come later and win.
    std::vector<std::string> argv;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) {
        const auto extra = config_args(args[i + 1]);
        argv.insert(argv.end(), extra.begin(), extra.end());
        ++i;
      } else if (args[i].rfind("--config=", 0) == 0) {
        const auto extra = config_args(args[i].substr(9));
        argv.insert(argv.end(), extra.begin(), extra.end());
      }
    }
    std::vector<std::string> ordered;
    std::size_t first_flag = 0;
    while (first_flag < args.size() && args[first_flag].rfind("--", 0) != 0) ordered.push_back(args[first_flag++]);
    ordered.insert(ordered.end(), argv.begin(), argv.end());
    for (std::size_t i = first_flag; i < args.size(); ++i) {
      if (args[i] == "--config") {
        ++i;
        continue;
      }
      if (args[i].rfind("--config=", 0) == 0) continue;
      ordered.push_back(args[i]);
    }
    // CLI11 consumes arguments in reverse order.
    std::vector<std::string> reversed(ordered.rbegin(), ordered.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hllab: error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "hllab: error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    Result res;
    if (exponents->parsed()) {
      res = cmd_exponents(c);
    } else if (mixed->parsed()) {
      res = cmd_mixed_norm(c);
    } else if (opnorm->parsed()) {
      res = cmd_opnorm(c);
    } else if (growth->parsed()) {
      res = cmd_growth(c);
    } else if (verify->parsed()) {
      res = cmd_verify(c);
    } else {
      res = cmd_rademacher(c);
    }
    const std::string text = render(res, c.format);
    if (c.output.empty()) {
      out << text;
    } else {
      std::ofstream file(c.output);
      if (!file) throw ValidationError("cannot write '" + c.output + "'");
      file << text;
    }
    if (res.exit_code == kExitCampaignFailed) err << "hllab: verification campaign failed\n";
    return res.exit_code;
  } catch (const ValidationError& e) {
    err << "hllab: error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    err << "hllab: error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace hllab::cli
