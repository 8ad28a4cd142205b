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

#include "jrp/policy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "jrp/errors.hpp"

namespace jrp {

namespace {

std::vector<std::vector<std::size_t>> effective_components(
    const ScaledGridPolicy& policy) {
  if (!policy.components.empty()) return policy.components;
  std::vector<std::size_t> all(policy.joint_grid.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return {all};
}

std::vector<double> commodity_costs(const Instance& instance,
                                    const ScaledGridPolicy& policy) {
  std::vector<double> out;
  out.reserve(instance.commodities.size());
  for (std::size_t i = 0; i < instance.commodities.size(); ++i) {
    out.push_back(eoq_cost(instance.commodities[i].model,
                           policy.intervals[i].multiplier.to_double() * policy.base));
  }
  return out;
}

CostReport make_report(double joint, std::vector<double> per_commodity,
                       JMethod method) {
  CostReport r;
  r.joint = joint;
  r.total = joint;
  for (double c : per_commodity) r.total += c;
  r.per_commodity = std::move(per_commodity);
  r.j_method = method;
  return r;
}

}  // namespace

std::string_view to_string(JMethod method) {
  switch (method) {
    case JMethod::kExact:
      return "exact";
    case JMethod::kUncrossing:
      return "uncrossing";
    case JMethod::kCertifiedUpperBound:
      return "certified_upper_bound";
  }
  return "exact";
}

JMethod parse_j_method(std::string_view text) {
  if (text == "exact") return JMethod::kExact;
  if (text == "uncrossing") return JMethod::kUncrossing;
  if (text == "certified_upper_bound") return JMethod::kCertifiedUpperBound;
  throw ValidationError("unknown j_method '" + std::string(text) + "'");
}

void validate_policy(const Instance& instance, const ScaledGridPolicy& policy) {
  if (!(std::isfinite(policy.base) && policy.base > 0.0)) {
    throw ValidationError("policy base must be positive and finite");
  }
  // Distinctness and positivity of the grid.
  const ScaledGrid grid(policy.base, policy.joint_grid);
  (void)grid;

  if (policy.intervals.size() != instance.commodities.size()) {
    throw ValidationError("policy has " + std::to_string(policy.intervals.size()) +
                          " intervals for " +
                          std::to_string(instance.commodities.size()) +
                          " commodities");
  }
  for (std::size_t i = 0; i < policy.intervals.size(); ++i) {
    const CommodityInterval& iv = policy.intervals[i];
    if (iv.id != instance.commodities[i].id) {
      throw ValidationError("policy interval " + std::to_string(i) +
                            " has id " + std::to_string(iv.id) +
                            ", instance expects " +
                            std::to_string(instance.commodities[i].id));
    }
    const auto& g = policy.joint_grid;
    if (std::find(g.begin(), g.end(), iv.of_representative) == g.end()) {
      throw ValidationError("commodity " + std::to_string(iv.id) +
                            " is anchored to " + iv.of_representative.str() +
                            ", which is not a joint-grid value");
    }
    const Rational k = iv.multiplier / iv.of_representative;
    if (!k.is_integer() || k.sign() <= 0) {
      throw ValidationError("commodity " + std::to_string(iv.id) +
                            " interval " + iv.multiplier.str() +
                            " is not a positive integer multiple of " +
                            iv.of_representative.str() +
                            "; off-grid policies only admit certified bounds");
    }
  }
  if (!policy.components.empty()) {
    std::set<std::size_t> seen;
    for (const auto& comp : policy.components) {
      if (comp.empty()) throw ValidationError("empty policy component");
      for (std::size_t idx : comp) {
        if (idx >= policy.joint_grid.size() || !seen.insert(idx).second) {
          throw ValidationError("policy components do not partition the grid");
        }
      }
    }
    if (seen.size() != policy.joint_grid.size()) {
      throw ValidationError("policy components do not cover the grid");
    }
  }
}

std::int64_t multiples_to_cover(double x, double r) {
  if (!(x > 0.0) || !(r > 0.0)) {
    throw DomainError("round_up_to_multiple needs positive arguments");
  }
  const double q = std::ceil(x / r);
  if (!(q < 9.0e15)) throw DomainError("rounding quotient too large");
  auto k = std::max<std::int64_t>(1, static_cast<std::int64_t>(q));
  while (static_cast<double>(k) * r < x) ++k;
  while (k > 1 && static_cast<double>(k - 1) * r >= x) --k;
  return k;
}

double round_up_to_multiple(double x, double r) {
  return static_cast<double>(multiples_to_cover(x, r)) * r;
}

ScaledGridPolicy assemble_policy(const Instance& instance,
                                 const RepresentativeSet& reps,
                                 const Rational& epsilon, double tmin) {
  const auto first = reps.values.find(1);
  if (first == reps.values.end()) {
    throw InvalidCandidate("representative set lacks segment 1");
  }
  ScaledGridPolicy policy;
  policy.base = tmin;
  policy.tmin = tmin;

  std::map<int, std::size_t> grid_index;
  for (const auto& [segment, value] : reps.values) {
    const auto it =
        std::find(policy.joint_grid.begin(), policy.joint_grid.end(), value);
    if (it != policy.joint_grid.end()) {
      grid_index[segment] = static_cast<std::size_t>(it - policy.joint_grid.begin());
      continue;
    }
    grid_index[segment] = policy.joint_grid.size();
    policy.joint_grid.push_back(value);
  }
  std::set<std::size_t> assigned;
  for (const std::vector<int>& comp : reps.components) {
    std::vector<std::size_t> indices;
    for (int segment : comp) {
      const std::size_t idx = grid_index.at(segment);
      if (assigned.insert(idx).second) indices.push_back(idx);
    }
    if (!indices.empty()) policy.components.push_back(std::move(indices));
  }

  const Rational& r1 = first->second;
  const double r1_time = r1.to_double() * tmin;
  const double large_floor = tmin / epsilon.to_double();
  for (const Commodity& c : instance.commodities) {
    const double t_max = std::max(large_floor, eoq_minimizer(c.model));
    const std::int64_t k = multiples_to_cover(t_max, r1_time);

    CommodityInterval best{c.id, Rational(static_cast<long>(k)) * r1, r1};
    double best_cost = eoq_cost(c.model, best.multiplier.to_double() * tmin);
    for (const Rational& value : policy.joint_grid) {
      const double cost = eoq_cost(c.model, value.to_double() * tmin);
      if (cost < best_cost || (cost == best_cost && value < best.multiplier)) {
        best = {c.id, value, value};
        best_cost = cost;
      }
    }
    policy.intervals.push_back(std::move(best));
  }
  return policy;
}

CostReport evaluate_exact(const Instance& instance,
                          const ScaledGridPolicy& policy, std::size_t cap) {
  if (policy.joint_grid.size() > cap) {
    CostReport r = evaluate_uncrossing(instance, policy, cap);
    r.cap_fallback = true;
    return r;
  }
  const ScaledGrid grid(policy.base, policy.joint_grid);
  return make_report(joint_cost(instance.joint_cost, grid, cap),
                     commodity_costs(instance, policy), JMethod::kExact);
}

CostReport evaluate_uncrossing(const Instance& instance,
                               const ScaledGridPolicy& policy,
                               std::size_t cap) {
  Rational density;
  for (const auto& comp : effective_components(policy)) {
    std::vector<Rational> values;
    values.reserve(comp.size());
    for (std::size_t idx : comp) values.push_back(policy.joint_grid.at(idx));
    density += asymptotic_density(values, cap);
  }
  const double joint = instance.joint_cost * density.to_double() / policy.base;
  return make_report(joint, commodity_costs(instance, policy),
                     JMethod::kUncrossing);
}

Rational exact_total_cost(const Instance& instance,
                          const ScaledGridPolicy& policy, std::size_t cap) {
  const Rational base = Rational::from_double(policy.base);
  Rational total = Rational::from_double(instance.joint_cost) *
                   asymptotic_density(policy.joint_grid, cap) / base;
  for (std::size_t i = 0; i < instance.commodities.size(); ++i) {
    total += eoq_cost_exact(instance.commodities[i].model,
                            policy.intervals[i].multiplier * base);
  }
  return total;
}

}  // namespace jrp
