// Copyright 2026 The qmetric Authors
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

#include "cli.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qmetric/compare.h"
#include "qmetric/error.h"
#include "qmetric/fuzzy.h"
#include "qmetric/serialize.h"

namespace qmetric::cli {
namespace {

using nlohmann::json;

// Raised for bad flag values; carries the message shown to the user.
struct UsageError {
  std::string message;
};

std::string Fmt(double value, int digits = 17) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

std::vector<double> ParseNumbers(std::string_view flag, std::string_view text,
                                 std::size_t expected, const char* shape) {
  std::vector<double> values;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    const std::string_view field =
        text.substr(begin, comma == std::string_view::npos ? text.npos
                                                           : comma - begin);
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(flag) + ": expected " + shape + ", got '" +
                      std::string(text) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  if (values.size() != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(flag) + ": expected " + shape + ", got '" +
                    std::string(text) + "'");
  }
  return values;
}

// Prefixes library validation messages with the flag that supplied them.
template <typename Fn>
auto ForFlag(std::string_view flag, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(flag) + ": " + e.what());
  }
}

struct CommonOptions {
  std::string format = "table";
  double tolerance = kDefaultTolerance;
  std::int64_t max_iterations = kDefaultMaxIterations;
  std::uint64_t seed = 0;
  std::string out;
};

void AddCommonOptions(CLI::App* sub, CommonOptions& common,
                      const std::string& default_format) {
  common.format = default_format;
  sub->add_option("--format", common.format,
                  "Output format: table, json or csv")
      ->capture_default_str();
  sub->add_option("--tol", common.tolerance, "Convergence tolerance")
      ->capture_default_str();
  sub->add_option("--max-iter", common.max_iterations, "Iteration budget")
      ->capture_default_str();
  sub->add_option("--seed", common.seed, "Random seed")->capture_default_str();
  sub->add_option("--out", common.out, "Write the report to this file");
}

void CheckFormat(const CommonOptions& common, bool csv_allowed) {
  if (common.format == "table" || common.format == "json") return;
  if (common.format == "csv") {
    if (csv_allowed) return;
    throw UsageError{"--format: csv output is only available for iterate"};
  }
  throw UsageError{"--format: must be one of table, json, csv"};
}

void CheckIterationOptions(const CommonOptions& common) {
  if (!(common.tolerance > 0.0)) {
    throw UsageError{"--tol: tolerance must be positive"};
  }
  if (common.max_iterations < 1) {
    throw UsageError{"--max-iter: must be >= 1"};
  }
}

json CommonInputs(const CommonOptions& common) {
  return {{"format", common.format},
          {"tol", common.tolerance},
          {"max_iter", common.max_iterations},
          {"seed", common.seed}};
}

std::string Dump(const json& document) { return document.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// distance

struct DistanceOptions {
  CommonOptions common;
  std::string a;
  std::string b;
  bool quadrature = false;
  double half_width = QuadratureConfig{}.half_width_sigmas;
  std::int64_t panels = QuadratureConfig{}.panels;
};

int RunDistance(const DistanceOptions& opt, std::ostream& out) {
  CheckFormat(opt.common, /*csv_allowed=*/false);
  CheckIterationOptions(opt.common);
  const GaussianState a = ParseState("--a", opt.a);
  const GaussianState b = ParseState("--b", opt.b);
  const QuadratureConfig config{opt.half_width, opt.panels};
  if (opt.quadrature) ForFlag("--panels/--half-width", [&] { config.Validate(); });

  const double distance = L2Distance(a, b);
  const double overlap = OverlapClosedForm(a, b);

  json quadrature = nullptr;
  double quad_overlap = 0.0;
  if (opt.quadrature) {
    quad_overlap = OverlapQuadrature(a, b, config);
    quadrature = {{"overlap", quad_overlap},
                  {"abs_discrepancy", std::abs(quad_overlap - overlap)}};
  }

  if (opt.common.format == "json") {
    json inputs = CommonInputs(opt.common);
    inputs["a"] = ToJson(a);
    inputs["b"] = ToJson(b);
    inputs["quadrature"] = opt.quadrature;
    inputs["half_width_sigmas"] = config.half_width_sigmas;
    inputs["panels"] = config.panels;
    out << Dump(MakeEnvelope("distance", std::move(inputs),
                             {{"distance", distance},
                              {"overlap", overlap},
                              {"quadrature", quadrature}}));
    return kExitOk;
  }

  out << "state a           mu=" << Fmt(a.mu(), 10)
      << " sigma=" << Fmt(a.sigma(), 10) << "\n"
      << "state b           mu=" << Fmt(b.mu(), 10)
      << " sigma=" << Fmt(b.sigma(), 10) << "\n"
      << "distance          " << Fmt(distance) << "\n"
      << "overlap           " << Fmt(overlap) << "\n";
  if (opt.quadrature) {
    out << "overlap (quad)    " << Fmt(quad_overlap) << "\n"
        << "abs discrepancy   " << Fmt(std::abs(quad_overlap - overlap))
        << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// iterate

struct IterateOptions {
  CommonOptions common;
  std::string map;
  std::string start;
};

void WriteTraceCsv(const FixedPointReport& report, std::ostream& out) {
  out << "n,mu,sigma,step_distance,a_priori_bound\n";
  for (std::size_t n = 0; n < report.iterates.size(); ++n) {
    const GaussianState& s = report.iterates[n];
    out << n << ',' << Fmt(s.mu()) << ',' << Fmt(s.sigma()) << ',';
    if (n < report.step_distances.size()) out << Fmt(report.step_distances[n]);
    out << ',' << Fmt(report.a_priori_bounds[n]) << '\n';
  }
}

int RunIterate(const IterateOptions& opt, std::ostream& out) {
  CheckFormat(opt.common, /*csv_allowed=*/true);
  CheckIterationOptions(opt.common);
  const AffineGaussianMap map = ParseMap("--map", opt.map);
  const GaussianState start = ParseState("--start", opt.start);

  const FixedPointReport report = IterateToFixedPoint(
      map, start, opt.common.tolerance, opt.common.max_iterations);
  const int status = report.converged ? kExitOk : kExitNotConverged;

  if (opt.common.format == "json") {
    json inputs = CommonInputs(opt.common);
    inputs["map"] = ToJson(map);
    inputs["start"] = ToJson(start);
    out << Dump(MakeEnvelope("iterate", std::move(inputs), ToJson(report)));
  } else if (opt.common.format == "csv") {
    WriteTraceCsv(report, out);
  } else {
    out << "converged         " << (report.converged ? "yes" : "no") << "\n"
        << "iterations        " << report.iterations_used << "\n"
        << "fixed point       mu=" << Fmt(report.fixed_point.mu())
        << " sigma=" << Fmt(report.fixed_point.sigma()) << "\n"
        << "k estimate        " << Fmt(report.k_estimate) << "\n\n";
    char line[160];
    std::snprintf(line, sizeof line, "%6s  %22s  %22s  %22s  %22s\n", "n",
                  "mu", "sigma", "step distance", "a priori bound");
    out << line;
    for (std::size_t n = 0; n < report.iterates.size(); ++n) {
      const GaussianState& s = report.iterates[n];
      const std::string step = n < report.step_distances.size()
                                   ? Fmt(report.step_distances[n])
                                   : std::string("-");
      std::snprintf(line, sizeof line, "%6zu  %22s  %22s  %22s  %22s\n", n,
                    Fmt(s.mu()).c_str(), Fmt(s.sigma()).c_str(), step.c_str(),
                    Fmt(report.a_priori_bounds[n]).c_str());
      out << line;
    }
  }
  return status;
}

// ---------------------------------------------------------------------------
// audit

struct AuditOptions {
  CommonOptions common;
  std::string target;
  std::string kind;
  int resolution = 21;
  std::string carrier = "real";
  std::int64_t points = 1000;
  std::int64_t t_samples = 16;
  std::int64_t samples = 10'000;
  std::string map = "0.5,0,0.5,0.5";
  std::string start = "4,3";
  std::optional<double> k;
};

TNormKind ParseKind(const std::string& text) {
  const auto kind = ParseTNormKind(text);
  if (!kind) {
    throw UsageError{"--kind: unknown t-norm '" + text +
                     "' (expected minimum, product or lukasiewicz)"};
  }
  return *kind;
}

int RunAudit(const AuditOptions& opt, std::ostream& out) {
  CheckFormat(opt.common, /*csv_allowed=*/false);
  CheckIterationOptions(opt.common);
  json inputs = CommonInputs(opt.common);
  inputs["target"] = opt.target;
  std::vector<AxiomAuditReport> audits;

  if (opt.target == "tnorm") {
    if (opt.resolution < 5) throw UsageError{"--resolution: must be >= 5"};
    inputs["resolution"] = opt.resolution;
    if (opt.kind.empty() || opt.kind == "all") {
      inputs["kind"] = "all";
      for (TNormKind kind : {TNormKind::kMinimum, TNormKind::kProduct,
                             TNormKind::kLukasiewicz}) {
        audits.push_back(AuditTNormAxioms(kind, opt.resolution));
      }
      audits.push_back(AuditTNormOrdering(opt.resolution));
    } else {
      const TNormKind kind = ParseKind(opt.kind);
      inputs["kind"] = ToString(kind);
      audits.push_back(AuditTNormAxioms(kind, opt.resolution));
    }
  } else if (opt.target == "gv") {
    const TNormKind kind =
        opt.kind.empty() ? TNormKind::kProduct : ParseKind(opt.kind);
    if (opt.points < 10) throw UsageError{"--points: must be >= 10"};
    if (opt.t_samples < 5) throw UsageError{"--t-samples: must be >= 5"};
    inputs["kind"] = ToString(kind);
    inputs["carrier"] = opt.carrier;
    inputs["points"] = opt.points;
    inputs["t_samples"] = opt.t_samples;
    if (opt.carrier == "real") {
      audits.push_back(AuditFuzzyMetricAxioms(
          FuzzyMetric<double>(RealLineCarrier(), kind), opt.points,
          opt.t_samples, opt.common.seed));
    } else if (opt.carrier == "gaussian") {
      audits.push_back(AuditFuzzyMetricAxioms(
          FuzzyMetric<GaussianState>(GaussianCarrier(), kind), opt.points,
          opt.t_samples, opt.common.seed));
    } else {
      throw UsageError{"--carrier: must be real or gaussian"};
    }
  } else if (opt.target == "metric-axioms") {
    if (opt.samples < 1) throw UsageError{"--samples: must be >= 1"};
    inputs["samples"] = opt.samples;
    audits.push_back(AuditMetricAxioms(opt.samples, opt.common.seed));
  } else if (opt.target == "banach-bounds") {
    const AffineGaussianMap map = ParseMap("--map", opt.map);
    const GaussianState start = ParseState("--start", opt.start);
    inputs["map"] = ToJson(map);
    inputs["start"] = ToJson(start);
    const FixedPointReport report = IterateToFixedPoint(
        map, start, opt.common.tolerance, opt.common.max_iterations);
    if (!report.converged) {
      throw Error(ErrorCode::kNotConverged,
                  "iteration did not converge within " +
                      std::to_string(opt.common.max_iterations) +
                      " iterations");
    }
    const double k = opt.k.value_or(report.k_estimate);
    inputs["k"] = Number(k);
    audits.push_back(ForFlag("--k", [&] { return VerifyBanachBounds(report, k); }));
  } else {
    throw UsageError{"--target: unknown target '" + opt.target +
                     "' (expected tnorm, gv, metric-axioms or banach-bounds)"};
  }

  bool passed = true;
  for (const auto& a : audits) passed = passed && a.passed();

  if (opt.common.format == "json") {
    json results = json::array();
    for (const auto& a : audits) results.push_back(ToJson(a));
    out << Dump(MakeEnvelope("audit", std::move(inputs),
                             {{"passed", passed}, {"audits", results}}));
  } else {
    for (const auto& a : audits) {
      out << a.subject << ": " << (a.passed() ? "PASS" : "FAIL") << "\n";
      for (const auto& c : a.checks) {
        out << "  " << (c.passed() ? "pass" : "FAIL") << "  " << c.name
            << "  (" << c.evaluated << " evaluated, " << c.violations
            << " violations)\n";
        if (c.witness) {
          out << "        witness: " << c.witness->description << "\n";
          for (const auto& [name, value] : c.witness->values) {
            out << "          " << name << " = " << Fmt(value) << "\n";
          }
        }
      }
    }
  }
  return passed ? kExitOk : kExitAuditFailed;
}

// ---------------------------------------------------------------------------
// compare

struct CompareOptions {
  CommonOptions common;
  std::string map = "0.5,0,0.5,0.5";
  std::string start = "4,3";
  std::string probe_a = "0,1";
  std::string probe_b = "1,1";
};

int RunCompare(const CompareOptions& opt, std::ostream& out) {
  CheckFormat(opt.common, /*csv_allowed=*/false);
  CheckIterationOptions(opt.common);
  const AffineGaussianMap map = ParseMap("--map", opt.map);
  const GaussianState start = ParseState("--start", opt.start);
  const GaussianState probe_a = ParseState("--probe-a", opt.probe_a);
  const GaussianState probe_b = ParseState("--probe-b", opt.probe_b);

  const FeatureReport report =
      BuildFeatureReport(map, start, probe_a, probe_b, opt.common.tolerance,
                         opt.common.max_iterations, opt.common.seed);

  if (opt.common.format == "json") {
    json inputs = CommonInputs(opt.common);
    inputs["map"] = ToJson(map);
    inputs["start"] = ToJson(start);
    inputs["probe_a"] = ToJson(probe_a);
    inputs["probe_b"] = ToJson(probe_b);
    out << Dump(MakeEnvelope("compare", std::move(inputs), ToJson(report)));
    return kExitOk;
  }

  const auto& q = report.quantum;
  const auto& f = report.fuzzy;
  out << "interference excess  quantum=" << Fmt(report.interference_excess_quantum)
      << "  fuzzy=" << Fmt(report.interference_excess_fuzzy) << "\n"
      << "quantum fixed point  mu=" << Fmt(q.fixed_point.mu())
      << " sigma=" << Fmt(q.fixed_point.sigma()) << "  (" << q.iterations_used
      << " iterations, k estimate " << Fmt(q.k_estimate, 6) << ")\n"
      << "fuzzy fixed point    mu=" << Fmt(f.fixed_point.mu())
      << " sigma=" << Fmt(f.fixed_point.sigma()) << "  (" << f.iterations_used
      << " iterations, k " << Fmt(f.k, 6) << ", condition "
      << (f.condition_holds ? "holds" : "violated") << ")\n"
      << "fixed point distance " << Fmt(report.fixed_point_agreement) << "\n\n";
  for (const auto& n : report.notes) {
    out << "  " << n.feature << ": fuzzy=" << n.fuzzy
        << ", quantum=" << n.quantum << " -- " << n.note << "\n";
  }
  return kExitOk;
}

}  // namespace

GaussianState ParseState(std::string_view flag, std::string_view text) {
  const auto v = ParseNumbers(flag, text, 2, "mu,sigma");
  return ForFlag(flag, [&] { return GaussianState(v[0], v[1]); });
}

AffineGaussianMap ParseMap(std::string_view flag, std::string_view text) {
  const auto v = ParseNumbers(flag, text, 4, "lambda,b,eta,c");
  return ForFlag(flag, [&] { return AffineGaussianMap(v[0], v[1], v[2], v[3]); });
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gaussian-state distances, contraction fixed points and "
               "fuzzy-metric audits"};
  app.name("qmetric");
  app.require_subcommand(1);

  DistanceOptions distance;
  auto* distance_cmd =
      app.add_subcommand("distance", "L2 distance and overlap of two states");
  distance_cmd->add_option("--a", distance.a, "First state as mu,sigma")
      ->required();
  distance_cmd->add_option("--b", distance.b, "Second state as mu,sigma")
      ->required();
  distance_cmd->add_flag("--quadrature", distance.quadrature,
                         "Cross-check the overlap by numerical integration");
  distance_cmd->add_option("--half-width", distance.half_width,
                           "Quadrature truncation radius in sigmas")
      ->capture_default_str();
  distance_cmd->add_option("--panels", distance.panels,
                           "Quadrature subintervals (even, >= 64)")
      ->capture_default_str();
  AddCommonOptions(distance_cmd, distance.common, "table");

  IterateOptions iterate;
  auto* iterate_cmd =
      app.add_subcommand("iterate", "Fixed-point iteration of an affine map");
  iterate_cmd->add_option("--map", iterate.map, "Map as lambda,b,eta,c")
      ->required();
  iterate_cmd->add_option("--start", iterate.start, "Start state as mu,sigma")
      ->required();
  AddCommonOptions(iterate_cmd, iterate.common, "table");

  AuditOptions audit;
  auto* audit_cmd = app.add_subcommand("audit", "Run an axiom or bound audit");
  audit_cmd
      ->add_option("--target", audit.target,
                   "tnorm, gv, metric-axioms or banach-bounds")
      ->required();
  audit_cmd->add_option("--kind", audit.kind,
                        "t-norm: minimum, product, lukasiewicz (tnorm: all)");
  audit_cmd->add_option("--resolution", audit.resolution, "t-norm grid size")
      ->capture_default_str();
  audit_cmd->add_option("--carrier", audit.carrier,
                        "Fuzzy metric carrier: real or gaussian")
      ->capture_default_str();
  audit_cmd->add_option("--points", audit.points, "Sampled point triples (gv)")
      ->capture_default_str();
  audit_cmd->add_option("--t-samples", audit.t_samples, "Sampled t values (gv)")
      ->capture_default_str();
  audit_cmd->add_option("--samples", audit.samples,
                        "Sampled triples (metric-axioms)")
      ->capture_default_str();
  audit_cmd->add_option("--map", audit.map, "Map for banach-bounds")
      ->capture_default_str();
  audit_cmd->add_option("--start", audit.start, "Start for banach-bounds")
      ->capture_default_str();
  audit_cmd->add_option("--k", audit.k,
                        "Contraction factor for banach-bounds "
                        "(default: the run's k estimate)");
  AddCommonOptions(audit_cmd, audit.common, "table");

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Quantum vs fuzzy fixed-point feature report");
  compare_cmd->add_option("--map", compare.map, "Map as lambda,b,eta,c")
      ->capture_default_str();
  compare_cmd->add_option("--start", compare.start, "Start state as mu,sigma")
      ->capture_default_str();
  compare_cmd->add_option("--probe-a", compare.probe_a,
                          "First interference probe")
      ->capture_default_str();
  compare_cmd->add_option("--probe-b", compare.probe_b,
                          "Second interference probe")
      ->capture_default_str();
  AddCommonOptions(compare_cmd, compare.common, "json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  const CommonOptions* common = nullptr;
  try {
    if (distance_cmd->parsed()) {
      common = &distance.common;
      status = RunDistance(distance, buffer);
    } else if (iterate_cmd->parsed()) {
      common = &iterate.common;
      status = RunIterate(iterate, buffer);
    } else if (audit_cmd->parsed()) {
      common = &audit.common;
      status = RunAudit(audit, buffer);
    } else {
      common = &compare.common;
      status = RunCompare(compare, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kNotConverged ? kExitNotConverged
                                                : kExitInvalidInput;
  }

  if (common->out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(common->out, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: --out: cannot write '" << common->out << "'\n";
      return kExitInvalidInput;
    }
  }
  if (status == kExitNotConverged) {
    err << "error: iteration did not converge within the iteration budget\n";
  }
  return status;
}

}  // namespace qmetric::cli
