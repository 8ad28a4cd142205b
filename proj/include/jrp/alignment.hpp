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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jrp/rational.hpp"

namespace jrp {

// Throws ConfigError unless 0 < epsilon < 1/2.
void validate_epsilon(const Rational& epsilon);

// Candidate under-estimates of the minimal ordering interval:
// (K0 / opt) * (1 + eps/2)^j for every j >= 0 with (1 + eps/2)^j < n / eps.
// The ratio test is exact; only the final scaling is floating point.
std::vector<double> enumerate_tmin(double joint_ordering_cost,
                                   double opt_estimate, const Rational& epsilon,
                                   std::size_t num_commodities);

// Geometric bands [(1+eps)^{l-1}, (1+eps)^l] * tmin, l = 1..L, with L the
// smallest count such that (1+eps)^L >= 1/eps. Bounds are exact multipliers
// of tmin.
class SegmentLadder {
 public:
  SegmentLadder(Rational epsilon, double tmin);

  const Rational& epsilon() const { return epsilon_; }
  double tmin() const { return tmin_; }
  int size() const { return static_cast<int>(bounds_.size()) - 1; }

  // Closed segment bounds for 1 <= segment <= size().
  const Rational& lower(int segment) const { return bounds_.at(segment - 1); }
  const Rational& upper(int segment) const { return bounds_.at(segment); }

 private:
  Rational epsilon_;
  double tmin_;
  std::vector<Rational> bounds_;  // (1+eps)^0 .. (1+eps)^L
};

SegmentLadder build_segments(const Rational& epsilon, double tmin);

// ceil(2 L^2 2^L / eps).
BigInt theoretical_psi(const Rational& epsilon, int num_segments);

// min(theoretical_psi, cap) when a cap is given.
BigInt psi_value(const Rational& epsilon, int num_segments,
                 std::optional<std::int64_t> psi_cap);

// Forest edge between segments low < high carrying the alignment multiples:
// alpha_low * R_low == alpha_high * R_high.
struct AlignmentEdge {
  int low = 0;
  int high = 0;
  std::int64_t alpha_low = 1;
  std::int64_t alpha_high = 1;

  friend bool operator==(const AlignmentEdge&, const AlignmentEdge&) = default;
};

struct AlignmentGuess {
  std::size_t tmin_index = 0;
  std::uint64_t ordinal = 0;    // position in the guess stream of its ladder
  std::vector<int> active;      // sorted; always contains segment 1
  std::vector<AlignmentEdge> forest;  // sorted by (low, high)

  std::string id() const;
  friend bool operator==(const AlignmentGuess&, const AlignmentGuess&) = default;
};

// Coprime (alpha_low, alpha_high) pairs, both <= psi, whose ratio
// alpha_high / alpha_low lies in [(1+eps)^{low-high-1}, (1+eps)^{low-high+1}],
// the only ratios segment closures can realise. Lexicographic order.
std::vector<std::pair<std::int64_t, std::int64_t>> admissible_labels(
    const SegmentLadder& ladder, int low, int high, std::int64_t psi);

struct GuessStreamStats {
  std::uint64_t yielded = 0;
  bool budget_exhausted = false;
};

// Streams every (active set containing 1) x (forest over it) x (admissible
// labels) in canonical order: active sets by bitmask, forests by sorted edge
// list, labels lexicographically. Stops after `budget` guesses and flags the
// exhaustion if more remained, or as soon as `sink` returns false.
GuessStreamStats enumerate_guesses(
    const SegmentLadder& ladder, std::int64_t psi_eff, std::uint64_t budget,
    const std::function<bool(const AlignmentGuess&)>& sink,
    std::size_t tmin_index = 0);

std::vector<AlignmentGuess> collect_guesses(const SegmentLadder& ladder,
                                            std::int64_t psi_eff,
                                            std::uint64_t budget,
                                            GuessStreamStats* stats = nullptr);

// Connected components of the guess forest over its active set. Each is
// sorted and the list is ordered by smallest member, which is the source.
std::vector<std::vector<int>> forest_components(const AlignmentGuess& guess);

// beta_l with R_l = beta_l * R_source along the unique forest path. Throws
// InternalError if `component` is not connected in the forest.
std::map<int, Rational> propagate_betas(const AlignmentGuess& guess,
                                        std::span<const int> component,
                                        int source);

struct FeasibleRange {
  Rational low;   // r-
  Rational high;  // r+
  bool tight() const { return low == high; }
};

// Admissible values of the source representative (a multiplier of tmin), or
// nullopt when the closures of the component's segments cannot all be hit.
std::optional<FeasibleRange> feasibility_interval(
    const std::map<int, Rational>& betas, const SegmentLadder& ladder);

struct ComponentSolution {
  std::vector<int> vertices;
  int source = 0;
  std::map<int, Rational> betas;
  FeasibleRange range;
  bool tight() const { return range.tight(); }
};

// Per-component betas and ranges for a whole guess; nullopt if any component
// is infeasible. Asserts that every beta has numerator and denominator
// bounded by psi^|C|.
std::optional<std::vector<ComponentSolution>> solve_components(
    const AlignmentGuess& guess, const SegmentLadder& ladder,
    std::int64_t psi_eff);

// True when alpha_a * a == alpha_b * b for some positive integers
// alpha_a, alpha_b <= psi.
bool psi_aligned(const Rational& a, const Rational& b, std::int64_t psi);

// Two tight components whose forced representatives are psi-aligned.
struct Collision {
  int segment_a = 0;
  int segment_b = 0;
  friend bool operator==(const Collision&, const Collision&) = default;
};

struct RepresentativeSet {
  std::map<int, Rational> values;  // segment -> multiplier of tmin
  std::vector<std::vector<int>> components;
  std::int64_t psi_eff = 0;
  std::vector<Collision> collisions;
};

// Fixes tight components at their forced value, then gives each loose
// component the midpoint of the widest gap between values that would align
// it with an already-fixed component.
RepresentativeSet choose_representatives(
    std::span<const ComponentSolution> components, std::int64_t psi_eff);

}  // namespace jrp
