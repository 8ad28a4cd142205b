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
#include <random>

#include "doctest.h"

#include "jrp/eoq.hpp"
#include "jrp/errors.hpp"

using jrp::EoqModel;

TEST_CASE("eoq hand values") {
  const EoqModel m{1.0, 1.0};
  CHECK(jrp::eoq_minimizer(m) == 1.0);
  CHECK(jrp::eoq_cost(m, 1.0) == 2.0);
  CHECK(jrp::eoq_cost(m, 2.0) == doctest::Approx(2.5));
  CHECK(jrp::eoq_cost_exact(m, jrp::Rational(2)) == jrp::Rational(5, 2));
  CHECK_THROWS_AS(jrp::eoq_cost(m, 0.0), jrp::DomainError);
  CHECK_THROWS_AS(jrp::eoq_cost(m, -1.0), jrp::DomainError);
}

TEST_CASE("eoq scaling identity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lg(-4.0, 4.0);
  for (int i = 0; i < 500; ++i) {
    const EoqModel m{std::exp(lg(rng)), std::exp(lg(rng))};
    const double t = jrp::eoq_minimizer(m);
    const double theta = std::exp(lg(rng) / 2);
    const double lhs = jrp::eoq_cost(m, theta * t);
    const double rhs = 0.5 * (theta + 1.0 / theta) * jrp::eoq_cost(m, t);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    CHECK(jrp::eoq_cost(m, t) == doctest::Approx(2.0 * std::sqrt(m.ordering_cost * m.holding_rate)));
    // Minimality against nearby points.
    CHECK(jrp::eoq_cost(m, t * 1.001) >= jrp::eoq_cost(m, t));
    CHECK(jrp::eoq_cost(m, t / 1.001) >= jrp::eoq_cost(m, t));
  }
}

TEST_CASE("instance validation") {
  jrp::Instance inst{1.0, {{1, {1.0, 1.0}}, {2, {2.0, 3.0}}}};
  CHECK_NOTHROW(jrp::validate(inst));
  CHECK(inst.commodity(2).model.holding_rate == 3.0);
  CHECK_THROWS_AS(inst.commodity(7), jrp::LookupError);
  CHECK(jrp::overloaded_cost(inst, 1, 2.0) == doctest::Approx(2.0 / 2.0 + 2.0));

  auto bad = inst;
  bad.commodities[1].id = 1;
  CHECK_THROWS_AS(jrp::validate(bad), jrp::ValidationError);
  bad = inst;
  bad.joint_cost = 0.0;
  CHECK_THROWS_AS(jrp::validate(bad), jrp::ValidationError);
  bad = inst;
  bad.commodities[0].model.ordering_cost = 0.0;
  CHECK_THROWS_AS(jrp::validate(bad), jrp::ValidationError);
  bad = inst;
  bad.commodities[0].model.holding_rate = NAN;
  CHECK_THROWS_AS(jrp::validate(bad), jrp::ValidationError);
  bad = inst;
  bad.commodities.clear();
  CHECK_THROWS_AS(jrp::validate(bad), jrp::ValidationError);
}
