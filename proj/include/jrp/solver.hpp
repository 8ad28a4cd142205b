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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jrp/alignment.hpp"
#include "jrp/baseline.hpp"
#include "jrp/eoq.hpp"
#include "jrp/policy.hpp"
#include "jrp/rational.hpp"

namespace jrp {

// Declaration order is the tie-break order between equal-cost candidates.
enum class Method { kAligned, kPowerOfTwo, kEasyRegime };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

// One evaluated aligned candidate, as seen by SolverConfig::observer.
struct CandidateRecord {
  const AlignmentGuess* guess = nullptr;
  const RepresentativeSet* representatives = nullptr;
  const ScaledGridPolicy* policy = nullptr;
  const CostReport* report = nullptr;
};

struct SolverConfig {
  // nullopt runs with the theoretical psi.
  std::optional<std::int64_t> psi_cap = 64;
  // Guesses per tmin candidate; 0 skips the aligned search entirely.
  std::uint64_t guess_budget = 100000;
  std::optional<std::size_t> tmin_index;
  unsigned threads = 1;
  // Break near-ties (1e-9 relative) between exactly costed candidates with
  // exact rational F values.
  bool exact_compare = false;
  std::size_t exponent_cap = kDefaultExponentCap;
  // Called for every aligned candidate in canonical order.
  std::function<void(const CandidateRecord&)> observer;
};

struct SolveResult {
  Method best_method = Method::kPowerOfTwo;
  double best_cost = 0.0;
  // Set unless the easy-regime policy won.
  std::optional<ScaledGridPolicy> best_policy;
  // Easy-regime intervals, set when that policy won.
  std::vector<double> easy_intervals;
  CostReport best_report;
  std::string best_guess;

  std::optional<double> best_aligned_cost;
  double lower_bound = 0.0;
  double pow2_cost = 0.0;
  double easy_cost = 0.0;
  double opt_estimate = 0.0;

  Rational epsilon;
  std::int64_t psi_eff = 0;
  BigInt theoretical_psi;
  int num_segments = 0;
  std::size_t tmin_candidates = 0;

  std::uint64_t candidates_evaluated = 0;
  std::uint64_t guesses_enumerated = 0;
  std::uint64_t guesses_pruned = 0;
  std::uint64_t collisions = 0;
  bool budget_exhausted = false;
};

// Throws ConfigError for epsilon outside (0, 1/2) or an out-of-range tmin
// index, ValidationError for a malformed instance.
SolveResult solve(const Instance& instance, const Rational& epsilon,
                  const SolverConfig& config = {});

struct Certificate {
  double best_cost = 0.0;
  double lower_bound = 0.0;
  double ratio = 0.0;  // best_cost / lower_bound, an optimality-gap bound
  bool budget_exhausted = false;
  std::int64_t psi_eff = 0;
  BigInt theoretical_psi;
};

Certificate certify(const SolveResult& result);

}  // namespace jrp
