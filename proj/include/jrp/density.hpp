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
#include <functional>
#include <span>
#include <vector>

#include "jrp/rational.hpp"

namespace jrp {

inline constexpr std::size_t kDefaultExponentCap = 20;

// A family of periodic order grids sharing one real time base: grid i
// orders every multipliers[i] * base time units, starting at time 0.
class ScaledGrid {
 public:
  // Throws ValidationError unless base > 0 and the multipliers are a
  // non-empty set of distinct positive rationals.
  ScaledGrid(double base, std::vector<Rational> multipliers);

  double base() const { return base_; }
  const std::vector<Rational>& multipliers() const { return multipliers_; }
  std::size_t size() const { return multipliers_.size(); }

 private:
  double base_;
  std::vector<Rational> multipliers_;
};

// Calls visit(lcm, subset_size) once for every non-empty subset of values.
// Subsets are generated depth-first, so every LCM is a single rational_lcm
// away from its parent's. Throws BudgetError when values.size() > cap.
void for_each_subset_lcm(
    std::span<const Rational> values, std::size_t cap,
    const std::function<void(const Rational& lcm, std::size_t size)>& visit);

// Number of distinct order epochs in [0, horizon_mult * base], time 0
// included, via inclusion-exclusion over floor(horizon / M_N) + 1.
BigInt count_orders(const ScaledGrid& grid, const Rational& horizon_mult,
                    std::size_t cap = kDefaultExponentCap);

// Sum over non-empty subsets N of (-1)^{|N|+1} / lcm(N), in orders per base
// time unit.
Rational asymptotic_density(std::span<const Rational> multipliers,
                            std::size_t cap = kDefaultExponentCap);
Rational asymptotic_density(const ScaledGrid& grid,
                            std::size_t cap = kDefaultExponentCap);

// K0 * density / base. The only floating-point step is the final one.
double joint_cost(double joint_ordering_cost, const ScaledGrid& grid,
                  std::size_t cap = kDefaultExponentCap);

}  // namespace jrp
