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

#include <cmath>

#include "doctest.h"

#include "jrp/errors.hpp"
#include "jrp/generator.hpp"
#include "jrp/io.hpp"
#include "jrp/solver.hpp"

using jrp::Rational;

namespace {

jrp::SolverConfig small_config() {
  jrp::SolverConfig c;
  c.psi_cap = 8;
  c.guess_budget = 400;
  return c;
}

jrp::Instance random_instance(std::uint64_t seed, int n) {
  jrp::GenSpec spec;
  spec.n = n;
  spec.seed = seed;
  return jrp::generate(spec);
}

}  // namespace

TEST_CASE("single commodity") {
  const jrp::Instance inst{3.0, {{0, {1.0, 1.0}}}};
  const auto r = jrp::solve(inst, Rational(2, 5), small_config());
  CHECK(r.best_cost >= 4.0 * (1 - 1e-12));
  CHECK(r.best_cost <= 4.25);
  CHECK(r.lower_bound == doctest::Approx(4.0));
}

TEST_CASE("result sandwich") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto inst = random_instance(seed, 2 + seed % 3);
    const auto r = jrp::solve(inst, Rational(2, 5), small_config());
    CHECK(r.best_cost <= r.pow2_cost);
    CHECK(r.best_cost <= r.easy_cost);
    CHECK(r.best_cost >= r.lower_bound * (1 - 1e-12));
    if (r.best_aligned_cost) CHECK(r.best_cost <= *r.best_aligned_cost);
    CHECK(r.num_segments == 3);
    CHECK(r.psi_eff == 8);
    CHECK(r.theoretical_psi == 360);
    const auto cert = jrp::certify(r);
    CHECK(cert.ratio >= 1 - 1e-12);
    CHECK(cert.ratio == doctest::Approx(r.best_cost / r.lower_bound));
    if (r.best_policy) {
      const auto again = jrp::evaluate_exact(inst, *r.best_policy);
      CHECK(again.total == doctest::Approx(r.best_cost).epsilon(1e-12));
    }
  }
}

TEST_CASE("zero budget keeps only the baselines") {
  auto c = small_config();
  c.guess_budget = 0;
  const auto r = jrp::solve(random_instance(3, 4), Rational(2, 5), c);
  CHECK(r.candidates_evaluated == 2);
  CHECK_FALSE(r.best_aligned_cost.has_value());
  CHECK(r.best_method != jrp::Method::kAligned);
}

TEST_CASE("determinism across thread counts") {
  const auto inst = random_instance(12, 4);
  auto c = small_config();
  const auto a = jrp::result_to_json(jrp::solve(inst, Rational(2, 5), c));
  c.threads = 3;
  const auto b = jrp::result_to_json(jrp::solve(inst, Rational(2, 5), c));
  CHECK(a.dump() == b.dump());
  c.exact_compare = true;
  const auto e1 = jrp::result_to_json(jrp::solve(inst, Rational(2, 5), c));
  c.threads = 1;
  const auto e2 = jrp::result_to_json(jrp::solve(inst, Rational(2, 5), c));
  CHECK(e1.dump() == e2.dump());
}

TEST_CASE("homogeneity") {
  auto inst = random_instance(21, 3);
  const auto a = jrp::solve(inst, Rational(2, 5), small_config());
  inst.joint_cost *= 8.0;
  for (auto& c : inst.commodities) {
    c.model.ordering_cost *= 8.0;
    c.model.holding_rate *= 8.0;
  }
  const auto b = jrp::solve(inst, Rational(2, 5), small_config());
  CHECK(b.best_cost == doctest::Approx(8.0 * a.best_cost).epsilon(1e-9));
  CHECK(b.best_method == a.best_method);
  CHECK(b.best_guess == a.best_guess);
}

TEST_CASE("observer sees candidates in canonical order") {
  auto c = small_config();
  c.threads = 2;
  std::vector<std::pair<std::size_t, std::uint64_t>> seen;
  c.observer = [&](const jrp::CandidateRecord& rec) {
    seen.emplace_back(rec.guess->tmin_index, rec.guess->ordinal);
    CHECK(rec.report->total > 0.0);
  };
  const auto r = jrp::solve(random_instance(5, 3), Rational(2, 5), c);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.size() + 2 == r.candidates_evaluated);
}

TEST_CASE("pinned tmin and configuration errors") {
  const auto inst = random_instance(8, 3);
  auto c = small_config();
  c.tmin_index = 1;
  const auto r = jrp::solve(inst, Rational(2, 5), c);
  if (r.best_policy && r.best_method == jrp::Method::kAligned) {
    CHECK(r.best_policy->provenance.tmin_index == std::optional<std::size_t>(1));
  }
  c.tmin_index = 10000;
  CHECK_THROWS_AS(jrp::solve(inst, Rational(2, 5), c), jrp::ConfigError);
  CHECK_THROWS_AS(jrp::solve(inst, Rational(1, 2), small_config()), jrp::ConfigError);
  jrp::Instance bad{1.0, {}};
  CHECK_THROWS_AS(jrp::solve(bad, Rational(2, 5), small_config()), jrp::ValidationError);
  auto huge = small_config();
  huge.psi_cap = std::nullopt;
  CHECK_THROWS_AS(jrp::solve(inst, Rational(1, 10), huge), jrp::ConfigError);
}
