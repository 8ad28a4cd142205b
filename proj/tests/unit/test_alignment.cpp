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

#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "jrp/alignment.hpp"
#include "jrp/errors.hpp"
#include "../oracles.hpp"

using jrp::AlignmentGuess;
using jrp::Rational;

namespace {

bool acyclic(const AlignmentGuess& g) {
  std::map<int, int> parent;
  for (int v : g.active) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  for (const auto& e : g.forest) {
    const int a = find(e.low), b = find(e.high);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

oracle::Frac frac(const Rational& r) {
  return {r.numerator().get_si(), r.denominator().get_si()};
}

// Exhaustive alpha search on exact values too large for the 64-bit oracle.
bool brute_aligned(const Rational& a, const Rational& b, std::int64_t psi) {
  for (long x = 1; x <= psi; ++x) {
    for (long y = 1; y <= psi; ++y) {
      if (Rational(x) * a == Rational(y) * b) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("epsilon validation") {
  CHECK_NOTHROW(jrp::validate_epsilon(Rational(1, 4)));
  CHECK_THROWS_AS(jrp::validate_epsilon(Rational(0)), jrp::ConfigError);
  CHECK_THROWS_AS(jrp::validate_epsilon(Rational(1, 2)), jrp::ConfigError);
  CHECK_THROWS_AS(jrp::validate_epsilon(Rational(-1, 4)), jrp::ConfigError);
}

TEST_CASE("segment counts and psi") {
  CHECK(jrp::build_segments(Rational(1, 2) - Rational(1, 1000), 1.0).size() == 2);
  CHECK(jrp::build_segments(Rational(2, 5), 1.0).size() == 3);
  CHECK(jrp::build_segments(Rational(9, 20), 1.0).size() == 3);
  CHECK(jrp::build_segments(Rational(49, 100), 1.0).size() == 2);
  CHECK(jrp::build_segments(Rational(1, 4), 1.0).size() == 7);
  CHECK(jrp::theoretical_psi(Rational(9, 20), 3) == 320);
  CHECK(jrp::theoretical_psi(Rational(49, 100), 2) == 66);
  CHECK(jrp::theoretical_psi(Rational(2, 5), 3) == 360);
  CHECK(jrp::psi_value(Rational(9, 20), 3, 64) == 64);
  CHECK(jrp::psi_value(Rational(9, 20), 3, std::nullopt) == 320);
  CHECK_THROWS_AS(jrp::psi_value(Rational(9, 20), 3, 0), jrp::ConfigError);

  const auto ladder = jrp::build_segments(Rational(2, 5), 3.0);
  CHECK(ladder.lower(1) == Rational(1));
  CHECK(ladder.upper(3) == Rational(343, 125));
  for (int l = 1; l <= ladder.size(); ++l) CHECK(ladder.upper(l) == ladder.lower(l) * Rational(7, 5));
}

TEST_CASE("tmin candidates") {
  // (1 + 1/5)^j < 2 / (2/5) = 5  ->  j = 0..8.
  const auto t = jrp::enumerate_tmin(2.0, 4.0, Rational(2, 5), 2);
  REQUIRE(t.size() == 9);
  CHECK(t[0] == 0.5);
  CHECK(t[1] == doctest::Approx(0.6));
}

TEST_CASE("hand-counted guess streams") {
  const auto ladder = jrp::build_segments(Rational(49, 100), 1.0);
  REQUIRE(ladder.size() == 2);
  // {1}, {1,2} without edge, {1,2} with (1,1) and (2,1).
  jrp::GuessStreamStats stats;
  auto guesses = jrp::collect_guesses(ladder, 2, 1000, &stats);
  CHECK(guesses.size() == 4);
  CHECK_FALSE(stats.budget_exhausted);
  guesses = jrp::collect_guesses(ladder, 1, 1000, &stats);
  CHECK(guesses.size() == 3);
  guesses = jrp::collect_guesses(ladder, 2, 3, &stats);
  CHECK(guesses.size() == 3);
  CHECK(stats.budget_exhausted);
  guesses = jrp::collect_guesses(ladder, 2, 4, &stats);
  CHECK_FALSE(stats.budget_exhausted);
  CHECK_THROWS_AS(jrp::collect_guesses(ladder, 2, 0), jrp::DomainError);
}

TEST_CASE("guess stream invariants") {
  const auto ladder = jrp::build_segments(Rational(2, 5), 1.0);
  const auto guesses = jrp::collect_guesses(ladder, 6, 1000000);
  CHECK(guesses == jrp::collect_guesses(ladder, 6, 1000000));
  std::set<std::string> ids;
  for (std::size_t i = 0; i < guesses.size(); ++i) {
    const auto& g = guesses[i];
    CHECK(g.ordinal == i);
    REQUIRE(!g.active.empty());
    CHECK(g.active.front() == 1);
    CHECK(acyclic(g));
    for (const auto& e : g.forest) {
      CHECK(e.low < e.high);
      CHECK(std::gcd(e.alpha_low, e.alpha_high) == 1);
      CHECK(e.alpha_low <= 6);
      CHECK(e.alpha_high <= 6);
    }
    ids.insert(g.id());
  }
  CHECK(ids.size() == guesses.size());
}

TEST_CASE("admissible labels respect segment ratios") {
  const auto ladder = jrp::build_segments(Rational(2, 5), 1.0);
  const Rational q(7, 5);
  for (int low = 1; low <= 3; ++low) {
    for (int high = low + 1; high <= 3; ++high) {
      const auto labels = jrp::admissible_labels(ladder, low, high, 20);
      for (auto [a, b] : labels) {
        // R_high / R_low = a / b must be reachable from the closures.
        const Rational ratio(a, b);
        CHECK(ratio >= jrp::rational_power(q, high - low - 1));
        CHECK(ratio <= jrp::rational_power(q, high - low + 1));
      }
      // Completeness against a brute scan.
      std::size_t expected = 0;
      for (long a = 1; a <= 20; ++a) {
        for (long b = 1; b <= 20; ++b) {
          if (std::gcd(a, b) != 1) continue;
          const Rational ratio(a, b);
          if (ratio >= jrp::rational_power(q, high - low - 1) &&
              ratio <= jrp::rational_power(q, high - low + 1)) {
            ++expected;
          }
        }
      }
      CHECK(labels.size() == expected);
    }
  }
}

TEST_CASE("betas satisfy every edge equation") {
  const auto ladder = jrp::build_segments(Rational(1, 4), 1.0);
  std::uint64_t checked = 0;
  jrp::enumerate_guesses(ladder, 8, 20000, [&](const AlignmentGuess& g) {
    for (const auto& comp : jrp::forest_components(g)) {
      const auto betas = jrp::propagate_betas(g, comp, comp.front());
      CHECK(betas.at(comp.front()) == Rational(1));
      for (const auto& e : g.forest) {
        if (!betas.count(e.low)) continue;
        CHECK(Rational(e.alpha_low) * betas.at(e.low) == Rational(e.alpha_high) * betas.at(e.high));
      }
      jrp::BigInt bound = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) bound *= 8;
      for (const auto& [v, b] : betas) {
        CHECK(b.numerator() <= bound);
        CHECK(b.denominator() <= bound);
      }
    }
    ++checked;
    return true;
  });
  CHECK(checked == 20000);
}

TEST_CASE("feasibility interval") {
  const auto ladder = jrp::build_segments(Rational(2, 5), 1.0);
  // Segment 1 alone: source anywhere in [1, 7/5].
  auto r = jrp::feasibility_interval({{1, Rational(1)}}, ladder);
  REQUIRE(r);
  CHECK(r->low == Rational(1));
  CHECK(r->high == Rational(7, 5));
  // R_2 = (7/5) R_1 pins R_1 to its upper bound? No: [7/5, 49/25] / (7/5) = [1, 7/5].
  r = jrp::feasibility_interval({{1, Rational(1)}, {2, Rational(7, 5)}}, ladder);
  REQUIRE(r);
  CHECK(r->low == Rational(1));
  // R_2 = 2 R_1: R_1 in [7/10, 49/50] intersect [1, 7/5] = empty.
  r = jrp::feasibility_interval({{1, Rational(1)}, {2, Rational(2)}}, ladder);
  CHECK_FALSE(r);
  // R_3 = 2 R_1: R_1 in [49/50, 343/250] intersect [1, 7/5] -> [1, 343/250].
  r = jrp::feasibility_interval({{1, Rational(1)}, {3, Rational(2)}}, ladder);
  REQUIRE(r);
  CHECK(r->high == Rational(343, 250));
}

TEST_CASE("psi_aligned agrees with brute force") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> d(1, 40);
  for (int trial = 0; trial < 400; ++trial) {
    const Rational a(d(rng), d(rng)), b(d(rng), d(rng));
    const std::int64_t psi = 1 + trial % 12;
    CHECK(jrp::psi_aligned(a, b, psi) == oracle::brute_aligned(frac(a), frac(b), psi));
  }
}

TEST_CASE("representatives land in segments and avoid cross alignment") {
  const auto ladder = jrp::build_segments(Rational(1, 4), 1.0);
  std::uint64_t multi = 0;
  jrp::enumerate_guesses(ladder, 6, 30000, [&](const AlignmentGuess& g) {
    const auto comps = jrp::solve_components(g, ladder, 6);
    if (!comps || comps->size() < 2) return true;
    const auto reps = jrp::choose_representatives(*comps, 6);
    for (int l : g.active) {
      REQUIRE(reps.values.count(l));
      CHECK(reps.values.at(l) >= ladder.lower(l));
      CHECK(reps.values.at(l) <= ladder.upper(l));
    }
    for (const auto& c : *comps) {
      for (const auto& [v, beta] : c.betas) {
        CHECK(reps.values.at(v) == beta * reps.values.at(c.source));
      }
    }
    std::set<std::pair<int, int>> collided;
    for (const auto& col : reps.collisions) collided.insert({col.segment_a, col.segment_b});
    for (std::size_t i = 0; i < comps->size(); ++i) {
      for (std::size_t j = i + 1; j < comps->size(); ++j) {
        const auto& ci = (*comps)[i];
        const auto& cj = (*comps)[j];
        for (int u : ci.vertices) {
          for (int v : cj.vertices) {
            const bool aligned = brute_aligned(reps.values.at(u), reps.values.at(v), 6);
            if (aligned) {
              CHECK(ci.tight());
              CHECK(cj.tight());
              CHECK(collided.count({std::min(u, v), std::max(u, v)}) == 1);
            }
          }
        }
      }
    }
    ++multi;
    return true;
  });
  CHECK(multi > 100);
}
