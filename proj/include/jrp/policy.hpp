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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jrp/alignment.hpp"
#include "jrp/density.hpp"
#include "jrp/eoq.hpp"
#include "jrp/rational.hpp"

namespace jrp {

enum class JMethod { kExact, kUncrossing, kCertifiedUpperBound };

std::string_view to_string(JMethod method);
JMethod parse_j_method(std::string_view text);

// Commodity ordering interval: multiplier * base, an integer multiple of the
// joint-grid value of_representative.
struct CommodityInterval {
  int id = 0;
  Rational multiplier;
  Rational of_representative;

  friend bool operator==(const CommodityInterval&,
                         const CommodityInterval&) = default;
};

struct Provenance {
  std::string method;  // "aligned" or "power_of_two"
  std::optional<std::size_t> tmin_index;
  std::optional<std::uint64_t> guess_ordinal;
  std::string guess;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Joint orders at every multiple of every joint_grid value (times base);
// each commodity orders on a sub-grid of one of them.
struct ScaledGridPolicy {
  double base = 0.0;
  double tmin = 0.0;
  std::vector<Rational> joint_grid;
  std::vector<CommodityInterval> intervals;
  // Partition of joint_grid indices; evaluation treats a policy without one
  // as a single component.
  std::vector<std::vector<std::size_t>> components;
  Provenance provenance;

  friend bool operator==(const ScaledGridPolicy&,
                         const ScaledGridPolicy&) = default;
};

struct CostReport {
  double joint = 0.0;                 // J
  std::vector<double> per_commodity;  // C_i
  double total = 0.0;                 // F
  JMethod j_method = JMethod::kExact;
  // Set when the exact evaluator fell back to uncrossing at the cap.
  bool cap_fallback = false;
};

// Throws ValidationError if the policy is malformed or some commodity
// interval is not an integer multiple of a joint-grid value.
void validate_policy(const Instance& instance, const ScaledGridPolicy& policy);

// Smallest k >= 1 with k * r >= x, computed in floating point and corrected.
std::int64_t multiples_to_cover(double x, double r);
double round_up_to_multiple(double x, double r);

// Picks, for every commodity, the cheapest of the representatives and the
// single large option ceil(max(tmin/eps, sqrt(K/H))) rounded up to a
// multiple of the segment-1 representative. Throws InvalidCandidate when
// segment 1 has no representative.
ScaledGridPolicy assemble_policy(const Instance& instance,
                                 const RepresentativeSet& reps,
                                 const Rational& epsilon, double tmin);

// Full inclusion-exclusion over the joint grid. Above the exponent cap this
// falls back to evaluate_uncrossing and sets cap_fallback.
CostReport evaluate_exact(const Instance& instance,
                          const ScaledGridPolicy& policy,
                          std::size_t cap = kDefaultExponentCap);

// Inclusion-exclusion restricted to subsets inside one component.
CostReport evaluate_uncrossing(const Instance& instance,
                               const ScaledGridPolicy& policy,
                               std::size_t cap = kDefaultExponentCap);

// F as an exact rational, with K, H and base at their binary values.
Rational exact_total_cost(const Instance& instance,
                          const ScaledGridPolicy& policy,
                          std::size_t cap = kDefaultExponentCap);

}  // namespace jrp
