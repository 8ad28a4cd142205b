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

#include "jrp/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jrp/errors.hpp"

namespace jrp {

namespace {

void visit_from(std::span<const Rational> values, std::size_t start,
                const Rational* parent, std::size_t depth,
                const std::function<void(const Rational&, std::size_t)>& visit) {
  for (std::size_t j = start; j < values.size(); ++j) {
    const Rational lcm = parent ? rational_lcm(*parent, values[j]) : values[j];
    visit(lcm, depth + 1);
    visit_from(values, j + 1, &lcm, depth + 1, visit);
  }
}

}  // namespace

ScaledGrid::ScaledGrid(double base, std::vector<Rational> multipliers)
    : base_(base), multipliers_(std::move(multipliers)) {
  if (!(std::isfinite(base_) && base_ > 0.0)) {
    throw ValidationError("grid base must be positive and finite");
  }
  if (multipliers_.empty()) throw ValidationError("grid has no multipliers");
  for (const Rational& m : multipliers_) {
    if (m.sign() <= 0) {
      throw ValidationError("grid multiplier must be positive, got " + m.str());
    }
  }
  std::vector<Rational> sorted = multipliers_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("grid multipliers must be distinct");
  }
}

void for_each_subset_lcm(
    std::span<const Rational> values, std::size_t cap,
    const std::function<void(const Rational&, std::size_t)>& visit) {
  if (values.size() > cap) {
    throw BudgetError("inclusion-exclusion over " +
                      std::to_string(values.size()) +
                      " multipliers exceeds the exponent cap of " +
                      std::to_string(cap));
  }
  visit_from(values, 0, nullptr, 0, visit);
}

BigInt count_orders(const ScaledGrid& grid, const Rational& horizon_mult,
                    std::size_t cap) {
  if (horizon_mult.sign() < 0) throw DomainError("negative horizon");
  BigInt total = 0;
  for_each_subset_lcm(grid.multipliers(), cap,
                      [&](const Rational& lcm, std::size_t size) {
                        const BigInt hits = (horizon_mult / lcm).floor() + 1;
                        if (size % 2 == 1) {
                          total += hits;
                        } else {
                          total -= hits;
                        }
                      });
  return total;
}

Rational asymptotic_density(std::span<const Rational> multipliers,
                            std::size_t cap) {
  Rational total;
  for_each_subset_lcm(multipliers, cap,
                      [&](const Rational& lcm, std::size_t size) {
                        if (size % 2 == 1) {
                          total += Rational(1) / lcm;
                        } else {
                          total -= Rational(1) / lcm;
                        }
                      });
  return total;
}

Rational asymptotic_density(const ScaledGrid& grid, std::size_t cap) {
  return asymptotic_density(grid.multipliers(), cap);
}

double joint_cost(double joint_ordering_cost, const ScaledGrid& grid,
                  std::size_t cap) {
  return joint_ordering_cost * asymptotic_density(grid, cap).to_double() /
         grid.base();
}

}  // namespace jrp
