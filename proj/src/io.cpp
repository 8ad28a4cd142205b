// Copyright 2026 The jrp Authors
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

#include "jrp/io.hpp"

#include <fstream>
#include <sstream>

#include "jrp/errors.hpp"

namespace jrp {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  } catch (const DomainError& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

Rational rational_field(const Json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ValidationError("expected a rational string, got " + v.dump());
}

}  // namespace

Json instance_to_json(const Instance& instance) {
  Json commodities = Json::array();
  for (const Commodity& c : instance.commodities) {
    commodities.push_back(
        {{"id", c.id}, {"K", c.model.ordering_cost}, {"H", c.model.holding_rate}});
  }
  return {{"K0", instance.joint_cost}, {"commodities", std::move(commodities)}};
}

Instance instance_from_json(const Json& doc) {
  Instance instance = guarded("instance", [&] {
    Instance out;
    out.joint_cost = doc.at("K0").get<double>();
    for (const Json& c : doc.at("commodities")) {
      out.commodities.push_back(
          {c.at("id").get<int>(), {c.at("K").get<double>(), c.at("H").get<double>()}});
    }
    return out;
  });
  validate(instance);
  return instance;
}

Json report_to_json(const CostReport& report) {
  Json doc = {{"J", report.joint},
              {"C", report.per_commodity},
              {"F", report.total},
              {"j_method", std::string(to_string(report.j_method))}};
  if (report.cap_fallback) doc["cap_fallback"] = true;
  return doc;
}

CostReport report_from_json(const Json& doc) {
  return guarded("cost report", [&] {
    CostReport r;
    r.joint = doc.at("J").get<double>();
    r.per_commodity = doc.at("C").get<std::vector<double>>();
    r.total = doc.at("F").get<double>();
    r.j_method = parse_j_method(doc.at("j_method").get<std::string>());
    r.cap_fallback = doc.value("cap_fallback", false);
    return r;
  });
}

Json policy_to_json(const ScaledGridPolicy& policy, const CostReport* report) {
  Json grid = Json::array();
  for (const Rational& r : policy.joint_grid) grid.push_back(r.str());
  Json intervals = Json::array();
  for (const CommodityInterval& iv : policy.intervals) {
    intervals.push_back({{"id", iv.id},
                         {"multiplier", iv.multiplier.str()},
                         {"of_representative", iv.of_representative.str()}});
  }
  Json doc = {{"base", policy.base},
              {"tmin", policy.tmin},
              {"joint_grid", std::move(grid)},
              {"intervals", std::move(intervals)},
              {"components", policy.components}};
  Json provenance = {{"method", policy.provenance.method}};
  if (policy.provenance.tmin_index) {
    provenance["tmin_index"] = *policy.provenance.tmin_index;
  }
  if (policy.provenance.guess_ordinal) {
    provenance["guess_ordinal"] = *policy.provenance.guess_ordinal;
  }
  if (!policy.provenance.guess.empty()) provenance["guess"] = policy.provenance.guess;
  doc["provenance"] = std::move(provenance);
  if (report) doc["cost"] = report_to_json(*report);
  return doc;
}

ScaledGridPolicy policy_from_json(const Json& doc) {
  if (doc.contains("policy")) {
    if (doc["policy"].is_null()) {
      throw ValidationError(
          "result carries no grid policy (easy-regime intervals are off-grid; "
          "only its certified upper bound is available)");
    }
    return policy_from_json(doc["policy"]);
  }
  return guarded("policy", [&] {
    ScaledGridPolicy p;
    p.base = doc.at("base").get<double>();
    p.tmin = doc.value("tmin", p.base);
    for (const Json& r : doc.at("joint_grid")) p.joint_grid.push_back(rational_field(r));
    for (const Json& iv : doc.at("intervals")) {
      const Rational multiplier = rational_field(iv.at("multiplier"));
      p.intervals.push_back(
          {iv.at("id").get<int>(), multiplier,
           iv.contains("of_representative") ? rational_field(iv["of_representative"])
                                             : multiplier});
    }
    if (doc.contains("components")) {
      p.components = doc["components"].get<std::vector<std::vector<std::size_t>>>();
    }
    if (doc.contains("provenance")) {
      const Json& pv = doc["provenance"];
      p.provenance.method = pv.value("method", "");
      if (pv.contains("tmin_index")) p.provenance.tmin_index = pv["tmin_index"].get<std::size_t>();
      if (pv.contains("guess_ordinal")) {
        p.provenance.guess_ordinal = pv["guess_ordinal"].get<std::uint64_t>();
      }
      p.provenance.guess = pv.value("guess", "");
    }
    return p;
  });
}

Json certificate_to_json(const Certificate& c) {
  return {{"best_cost", c.best_cost},
          {"lower_bound", c.lower_bound},
          {"ratio", c.ratio},
          {"budget_exhausted", c.budget_exhausted},
          {"psi_eff", c.psi_eff},
          {"theoretical_psi", c.theoretical_psi.get_str()}};
}

Json result_to_json(const SolveResult& r) {
  Json doc = {
      {"method", std::string(to_string(r.best_method))},
      {"best_cost", r.best_cost},
      {"lower_bound", r.lower_bound},
      {"pow2_cost", r.pow2_cost},
      {"easy_cost", r.easy_cost},
      {"opt_estimate", r.opt_estimate},
      {"best_aligned_cost", r.best_aligned_cost ? Json(*r.best_aligned_cost) : Json()},
      {"epsilon", r.epsilon.str()},
      {"psi_eff", r.psi_eff},
      {"theoretical_psi", r.theoretical_psi.get_str()},
      {"num_segments", r.num_segments},
      {"tmin_candidates", r.tmin_candidates},
      {"candidates_evaluated", r.candidates_evaluated},
      {"guesses_enumerated", r.guesses_enumerated},
      {"guesses_pruned", r.guesses_pruned},
      {"collisions", r.collisions},
      {"budget_exhausted", r.budget_exhausted},
      {"best_guess", r.best_guess},
      {"cost", report_to_json(r.best_report)},
      {"policy", r.best_policy ? policy_to_json(*r.best_policy) : Json()},
      {"certificate", certificate_to_json(certify(r))},
  };
  if (!r.easy_intervals.empty()) doc["easy_intervals"] = r.easy_intervals;
  return doc;
}

SolveResult result_from_json(const Json& doc) {
  return guarded("solve result", [&] {
    SolveResult r;
    r.best_method = parse_method(doc.at("method").get<std::string>());
    r.best_cost = doc.at("best_cost").get<double>();
    r.lower_bound = doc.at("lower_bound").get<double>();
    r.pow2_cost = doc.at("pow2_cost").get<double>();
    r.easy_cost = doc.at("easy_cost").get<double>();
    r.opt_estimate = doc.at("opt_estimate").get<double>();
    if (!doc.at("best_aligned_cost").is_null()) {
      r.best_aligned_cost = doc["best_aligned_cost"].get<double>();
    }
    r.epsilon = Rational::parse(doc.at("epsilon").get<std::string>());
    r.psi_eff = doc.at("psi_eff").get<std::int64_t>();
    r.theoretical_psi = BigInt(doc.at("theoretical_psi").get<std::string>(), 10);
    r.num_segments = doc.at("num_segments").get<int>();
    r.tmin_candidates = doc.at("tmin_candidates").get<std::size_t>();
    r.candidates_evaluated = doc.at("candidates_evaluated").get<std::uint64_t>();
    r.guesses_enumerated = doc.at("guesses_enumerated").get<std::uint64_t>();
    r.guesses_pruned = doc.at("guesses_pruned").get<std::uint64_t>();
    r.collisions = doc.at("collisions").get<std::uint64_t>();
    r.budget_exhausted = doc.at("budget_exhausted").get<bool>();
    r.best_guess = doc.at("best_guess").get<std::string>();
    r.best_report = report_from_json(doc.at("cost"));
    if (!doc.at("policy").is_null()) r.best_policy = policy_from_json(doc["policy"]);
    if (doc.contains("easy_intervals")) {
      r.easy_intervals = doc["easy_intervals"].get<std::vector<double>>();
    }
    return r;
  });
}

Json baseline_to_json(const BaselineResult& b) {
  return {{"LB", b.lower_bound},
          {"pow2_cost", b.pow2_cost},
          {"opt_estimate", b.opt_estimate},
          {"easy_cost", b.easy.certified_cost}};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << doc.dump(2) << "\n";
}

Instance read_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json(path));
}

}  // namespace jrp
