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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "jrp/bench.hpp"
#include "jrp/errors.hpp"
#include "jrp/generator.hpp"
#include "jrp/io.hpp"

namespace fs = std::filesystem;
using jrp::Json;
using jrp::Rational;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("jrp_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

jrp::SolverConfig small_config() {
  jrp::SolverConfig c;
  c.psi_cap = 8;
  c.guess_budget = 200;
  return c;
}

}  // namespace

TEST_CASE("instance round trip") {
  jrp::GenSpec spec;
  spec.n = 6;
  spec.seed = 77;
  const auto inst = jrp::generate(spec);
  CHECK(jrp::instance_from_json(jrp::instance_to_json(inst)) == inst);
  CHECK(jrp::instance_from_json(Json::parse(jrp::instance_to_json(inst).dump())) == inst);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(jrp::instance_from_json(Json::parse(R"({"K0": 1})")), jrp::ValidationError);
  CHECK_THROWS_AS(jrp::instance_from_json(Json::parse(R"({"K0": "x", "commodities": []})")),
                  jrp::ValidationError);
  CHECK_THROWS_AS(jrp::instance_from_json(Json::parse(R"({"K0": 1, "commodities": []})")),
                  jrp::ValidationError);
  CHECK_THROWS_AS(jrp::policy_from_json(Json::parse(R"({"base": 1, "joint_grid": ["1/0"], "intervals": []})")),
                  jrp::ValidationError);
  CHECK_THROWS_AS(jrp::policy_from_json(Json::parse(R"({"policy": null})")), jrp::ValidationError);
}

TEST_CASE("policy and result round trip") {
  jrp::GenSpec spec;
  spec.n = 3;
  spec.seed = 4;
  const auto inst = jrp::generate(spec);
  const auto r = jrp::solve(inst, Rational(2, 5), small_config());
  const Json doc = jrp::result_to_json(r);
  const auto back = jrp::result_from_json(Json::parse(doc.dump()));
  CHECK(jrp::result_to_json(back) == doc);
  REQUIRE(r.best_policy);
  CHECK(jrp::policy_from_json(doc) == *r.best_policy);
  const Json pj = jrp::policy_to_json(*r.best_policy, &r.best_report);
  CHECK(jrp::policy_from_json(pj) == *r.best_policy);
  CHECK(pj.at("cost").at("F") == r.best_cost);
}

TEST_CASE("baseline document") {
  const jrp::Instance inst{3.0, {{0, {1.0, 1.0}}}};
  const Json doc = jrp::baseline_to_json(jrp::compute_baseline(inst));
  for (const char* key : {"LB", "pow2_cost", "opt_estimate", "easy_cost"}) CHECK(doc.contains(key));
  CHECK(doc["LB"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("generator") {
  jrp::GenSpec spec;
  spec.n = 3;
  spec.seed = 7;
  spec.family = jrp::Family::kIdentical;
  CHECK(jrp::instance_to_json(jrp::generate(spec)).dump() ==
        jrp::instance_to_json(jrp::generate(spec)).dump());
  const auto same = jrp::generate(spec);
  CHECK(same.commodities[0].model == same.commodities[2].model);

  spec.family = jrp::Family::kRandom;
  spec.n = 10;
  spec.k_range = {0.5, 2.0};
  spec.h_range = {3.0, 3.0};
  const auto inst = jrp::generate(spec);
  CHECK(inst.size() == 10);
  for (const auto& c : inst.commodities) {
    CHECK(c.model.ordering_cost >= 0.5);
    CHECK(c.model.ordering_cost <= 2.0);
    CHECK(c.model.holding_rate == 3.0);
  }

  spec.family = jrp::Family::kTwoScale;
  spec.n = 4;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    spec.seed = seed;
    const auto ts = jrp::generate(spec);
    double lo = 1e300, hi = 0.0;
    for (const auto& c : ts.commodities) {
      lo = std::min(lo, jrp::eoq_minimizer(c.model));
      hi = std::max(hi, jrp::eoq_minimizer(c.model));
    }
    CHECK(hi > 10.0 * lo);
  }

  spec.k_range = {2.0, 1.0};
  CHECK_THROWS_AS(jrp::generate(spec), jrp::ValidationError);
  spec.k_range = {0.0, 1.0};
  CHECK_THROWS_AS(jrp::generate(spec), jrp::ValidationError);
  CHECK(jrp::parse_family("two_scale") == jrp::Family::kTwoScale);
  CHECK_THROWS_AS(jrp::parse_family("other"), jrp::ConfigError);
}

TEST_CASE("bench") {
  jrp::BenchConfig config;
  config.solver = small_config();
  config.jobs = 2;

  const fs::path empty = scratch("empty");
  std::ostringstream out;
  jrp::write_bench_csv(out, jrp::run_bench(empty, config));
  const std::string header = out.str();
  CHECK(std::count(header.begin(), header.end(), '\n') == 1);
  CHECK(header.rfind("instance,n,lower_bound,", 0) == 0);

  const fs::path dir = scratch("corpus");
  for (int i = 0; i < 3; ++i) {
    jrp::GenSpec spec;
    spec.n = 2 + i;
    spec.seed = 50 + i;
    jrp::write_json(dir / ("i" + std::to_string(2 - i) + ".json"),
                    jrp::instance_to_json(jrp::generate(spec)));
  }
  std::ofstream(dir / "broken.json") << "{ not json";
  const auto rows = jrp::run_bench(dir, config);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].instance == "broken.json");
  CHECK_FALSE(rows[0].error.empty());
  CHECK(rows[1].instance == "i0.json");
  CHECK(rows[3].instance == "i2.json");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].result);
    const auto& r = *rows[i].result;
    CHECK(r.best_cost / r.lower_bound >= 1 - 1e-9);
    CHECK(r.pow2_cost / r.lower_bound >= 1 - 1e-9);
    CHECK(r.easy_cost / r.lower_bound >= 1 - 1e-9);
  }
  std::ostringstream csv;
  jrp::write_bench_csv(csv, rows);
  const std::string table = csv.str();
  CHECK(std::count(table.begin(), table.end(), '\n') == 5);

  CHECK_THROWS_AS(jrp::run_bench(dir / "missing", config), jrp::ValidationError);
}
