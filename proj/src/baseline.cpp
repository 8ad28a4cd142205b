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

#include "jrp/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jrp/errors.hpp"

namespace jrp {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr int kBaseGridPoints = 64;

double relaxation_value(const Instance& instance, double t0) {
  double g = instance.joint_cost / t0;
  for (const Commodity& c : instance.commodities) {
    g += eoq_cost(c.model, std::max(t0, eoq_minimizer(c.model)));
  }
  return g;
}

Rational power_of_two(int exponent) {
  if (exponent >= 0) return rational_power(Rational(2), static_cast<unsigned>(exponent));
  return Rational(1) / rational_power(Rational(2), static_cast<unsigned>(-exponent));
}

}  // namespace

RelaxationSolution relaxation_lower_bound(const Instance& instance) {
  validate(instance);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const Commodity& c : instance.commodities) {
    lo = std::min(lo, eoq_minimizer(c.model));
    hi = std::max(hi, std::sqrt((instance.joint_cost + c.model.ordering_cost) /
                                c.model.holding_rate));
  }
  lo *= 1e-3;
  hi *= 1e3;

  // Golden-section search in log space; g is unimodal in log T as well.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::log(lo);
  double b = std::log(hi);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = relaxation_value(instance, std::exp(x1));
  double f2 = relaxation_value(instance, std::exp(x2));
  while (b - a > 1e-10) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = relaxation_value(instance, std::exp(x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = relaxation_value(instance, std::exp(x2));
    }
  }
  RelaxationSolution out;
  out.base_interval = f1 <= f2 ? std::exp(x1) : std::exp(x2);
  out.lower_bound = std::min(f1, f2);
  for (const Commodity& c : instance.commodities) {
    out.intervals.push_back(std::max(out.base_interval, eoq_minimizer(c.model)));
  }
  return out;
}

int power_of_two_exponent(double target, double base) {
  if (!(target > 0.0) || !(base > 0.0)) {
    throw DomainError("power-of-two rounding needs positive arguments");
  }
  const double low = target / kSqrt2;
  int k = static_cast<int>(std::ceil(std::log2(low / base)));
  while (std::ldexp(base, k) < low) ++k;
  while (std::ldexp(base, k - 1) >= low) --k;
  return k;
}

ScaledGridPolicy power_of_two_policy(const Instance& instance, double base) {
  return power_of_two_policy(instance, relaxation_lower_bound(instance), base);
}

ScaledGridPolicy power_of_two_policy(const Instance& instance,
                                     const RelaxationSolution& relaxation,
                                     double base) {
  if (!(std::isfinite(base) && base > 0.0)) {
    throw DomainError("power-of-two base must be positive");
  }
  std::vector<int> exponents;
  for (double t : relaxation.intervals) {
    exponents.push_back(power_of_two_exponent(t, base));
  }
  const Rational finest = power_of_two(*std::min_element(exponents.begin(), exponents.end()));

  ScaledGridPolicy policy;
  policy.base = base;
  policy.tmin = base;
  policy.joint_grid = {finest};
  policy.components = {{0}};
  policy.provenance.method = "power_of_two";
  for (std::size_t i = 0; i < instance.commodities.size(); ++i) {
    policy.intervals.push_back(
        {instance.commodities[i].id, power_of_two(exponents[i]), finest});
  }
  return policy;
}

PowerOfTwoEstimate best_power_of_two(const Instance& instance,
                                     const RelaxationSolution& relaxation) {
  PowerOfTwoEstimate best;
  best.cost = std::numeric_limits<double>::infinity();
  for (int j = 0; j < kBaseGridPoints; ++j) {
    const double base = relaxation.base_interval *
                        std::exp2(static_cast<double>(j) / kBaseGridPoints);
    ScaledGridPolicy policy = power_of_two_policy(instance, relaxation, base);
    const double cost = evaluate_exact(instance, policy).total;
    // Strict comparison keeps the smallest base among ties.
    if (cost < best.cost) {
      best.cost = cost;
      best.policy = std::move(policy);
    }
  }
  return best;
}

double opt_estimate(const Instance& instance) {
  return best_power_of_two(instance, relaxation_lower_bound(instance)).cost;
}

EasyRegimePolicy easy_regime_policy(const Instance& instance) {
  validate(instance);
  EasyRegimePolicy out;
  for (const Commodity& c : instance.commodities) {
    const EoqModel overloaded{instance.joint_cost + c.model.ordering_cost,
                              c.model.holding_rate};
    const double t = eoq_minimizer(overloaded);
    out.intervals.push_back(t);
    out.certified_cost += eoq_cost(overloaded, t);
  }
  return out;
}

BaselineResult compute_baseline(const Instance& instance) {
  const RelaxationSolution relaxation = relaxation_lower_bound(instance);
  PowerOfTwoEstimate pow2 = best_power_of_two(instance, relaxation);
  BaselineResult out;
  out.lower_bound = relaxation.lower_bound;
  out.relaxation_base = relaxation.base_interval;
  out.pow2_policy = std::move(pow2.policy);
  out.pow2_cost = pow2.cost;
  out.opt_estimate = pow2.cost;
  out.easy = easy_regime_policy(instance);
  return out;
}

}  // namespace jrp
