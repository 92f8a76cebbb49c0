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

#include "qmetric/serialize.h"

#include <cmath>
#include <limits>
#include <string>

#include "qmetric/error.h"

namespace qmetric {

using nlohmann::json;

namespace {

template <typename Fn>
auto Parsing(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("malformed report document: ") + e.what());
  }
}

json Numbers(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(Number(v));
  return out;
}

std::vector<double> NumbersFromJson(const json& j) {
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& v : j) out.push_back(NumberFromJson(v));
  return out;
}

json States(const std::vector<GaussianState>& states) {
  json out = json::array();
  for (const auto& s : states) out.push_back(ToJson(s));
  return out;
}

template <typename Point>
json FuzzyReportJson(const FuzzyFixedPointReport<Point>& report,
                     json iterates, json fixed_point) {
  return {
      {"iterates", std::move(iterates)},
      {"step_distances", Numbers(report.step_distances)},
      {"fixed_point", std::move(fixed_point)},
      {"converged", report.converged},
      {"iterations_used", report.iterations_used},
      {"k", Number(report.k)},
      {"condition_holds", report.condition_holds()},
      {"max_condition_gap", Number(report.max_condition_gap)},
      {"condition_audit", ToJson(report.condition_audit)},
  };
}

}  // namespace

json Number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

double NumberFromJson(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return Parsing([&] { return j.get<double>(); });
}

json ToJson(const GaussianState& state) {
  return {{"mu", state.mu()}, {"sigma", state.sigma()}};
}

json ToJson(const AffineGaussianMap& map) {
  return {{"lambda", map.mean_scale()},
          {"b", map.mean_offset()},
          {"eta", map.width_scale()},
          {"c", map.width_offset()}};
}

json ToJson(const StateBox& box) {
  return {{"mu_lo", box.mu_lo},
          {"mu_hi", box.mu_hi},
          {"sigma_lo", box.sigma_lo},
          {"sigma_hi", box.sigma_hi}};
}

json ToJson(const AxiomAuditReport& report) {
  json checks = json::array();
  for (const AxiomCheck& c : report.checks) {
    json check = {{"name", c.name},
                  {"passed", c.passed()},
                  {"evaluated", c.evaluated},
                  {"violations", c.violations},
                  {"witness", nullptr}};
    if (c.witness) {
      json values = json::object();
      for (const auto& [name, value] : c.witness->values) {
        values[name] = Number(value);
      }
      check["witness"] = {{"description", c.witness->description},
                          {"values", std::move(values)}};
    }
    checks.push_back(std::move(check));
  }
  return {{"subject", report.subject},
          {"passed", report.passed()},
          {"checks", std::move(checks)}};
}

json ToJson(const FixedPointReport& report) {
  return {
      {"iterates", States(report.iterates)},
      {"step_distances", Numbers(report.step_distances)},
      {"k_estimate", Number(report.k_estimate)},
      {"a_priori_bounds", Numbers(report.a_priori_bounds)},
      {"fixed_point", ToJson(report.fixed_point)},
      {"converged", report.converged},
      {"iterations_used", report.iterations_used},
  };
}

json ToJson(const FeatureReport& report) {
  json notes = json::array();
  for (const FeatureNote& n : report.notes) {
    notes.push_back({{"feature", n.feature},
                     {"fuzzy", n.fuzzy},
                     {"quantum", n.quantum},
                     {"note", n.note}});
  }
  const auto& q = report.quantum;
  const auto& f = report.fuzzy;
  return {
      {"probe_a", ToJson(report.probe_a)},
      {"probe_b", ToJson(report.probe_b)},
      {"interference_excess_quantum",
       Number(report.interference_excess_quantum)},
      {"interference_excess_fuzzy", Number(report.interference_excess_fuzzy)},
      {"interference_excess_quadrature",
       Number(report.interference_excess_quadrature)},
      {"quantum",
       {{"fixed_point", ToJson(q.fixed_point)},
        {"converged", q.converged},
        {"iterations_used", q.iterations_used},
        {"k_estimate", Number(q.k_estimate)},
        {"final_step_distance", Number(q.final_step_distance)}}},
      {"fuzzy",
       {{"fixed_point", ToJson(f.fixed_point)},
        {"converged", f.converged},
        {"iterations_used", f.iterations_used},
        {"lipschitz_estimate", Number(f.lipschitz_estimate)},
        {"k", Number(f.k)},
        {"condition_holds", f.condition_holds},
        {"max_condition_gap", Number(f.max_condition_gap)},
        {"condition_audit", ToJson(f.condition_audit)}}},
      {"fixed_point_agreement", Number(report.fixed_point_agreement)},
      {"notes", std::move(notes)},
  };
}

json ToJson(const FuzzyFixedPointReport<double>& report) {
  return FuzzyReportJson(report, Numbers(report.iterates),
                         Number(report.fixed_point));
}

json ToJson(const FuzzyFixedPointReport<GaussianState>& report) {
  return FuzzyReportJson(report, States(report.iterates),
                         ToJson(report.fixed_point));
}

GaussianState GaussianStateFromJson(const json& j) {
  return Parsing([&] {
    return GaussianState(j.at("mu").get<double>(), j.at("sigma").get<double>());
  });
}

AffineGaussianMap AffineGaussianMapFromJson(const json& j) {
  return Parsing([&] {
    return AffineGaussianMap(j.at("lambda").get<double>(),
                             j.at("b").get<double>(), j.at("eta").get<double>(),
                             j.at("c").get<double>());
  });
}

AxiomAuditReport AxiomAuditReportFromJson(const json& j) {
  return Parsing([&] {
    AxiomAuditReport report;
    report.subject = j.at("subject").get<std::string>();
    for (const json& c : j.at("checks")) {
      AxiomCheck check;
      check.name = c.at("name").get<std::string>();
      check.evaluated = c.at("evaluated").get<std::int64_t>();
      check.violations = c.at("violations").get<std::int64_t>();
      const json& w = c.at("witness");
      if (!w.is_null()) {
        Witness witness{w.at("description").get<std::string>(), {}};
        for (const auto& [name, value] : w.at("values").items()) {
          witness.values.emplace_back(name, NumberFromJson(value));
        }
        check.witness = std::move(witness);
      }
      report.checks.push_back(std::move(check));
    }
    return report;
  });
}

FixedPointReport FixedPointReportFromJson(const json& j) {
  return Parsing([&] {
    FixedPointReport report;
    for (const json& s : j.at("iterates")) {
      report.iterates.push_back(GaussianStateFromJson(s));
    }
    report.step_distances = NumbersFromJson(j.at("step_distances"));
    report.k_estimate = NumberFromJson(j.at("k_estimate"));
    report.a_priori_bounds = NumbersFromJson(j.at("a_priori_bounds"));
    report.fixed_point = GaussianStateFromJson(j.at("fixed_point"));
    report.converged = j.at("converged").get<bool>();
    report.iterations_used = j.at("iterations_used").get<std::int64_t>();
    return report;
  });
}

json MakeEnvelope(std::string_view command, json inputs, json result) {
  return {{"command", std::string(command)},
          {"inputs", std::move(inputs)},
          {"result", std::move(result)},
          {"version", kReportSchemaVersion}};
}

}  // namespace qmetric
