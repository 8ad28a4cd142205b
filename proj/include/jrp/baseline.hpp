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

#include <vector>

#include "jrp/eoq.hpp"
#include "jrp/policy.hpp"

namespace jrp {

// Minimiser and value of g(T0) = K0/T0 + sum_i C_i(max(T0, sqrt(K_i/H_i))),
// a lower bound on the cost of every policy.
struct RelaxationSolution {
  double base_interval = 0.0;          // T0
  double lower_bound = 0.0;            // g(T0)
  std::vector<double> intervals;       // max(T0, sqrt(K_i/H_i))
};

RelaxationSolution relaxation_lower_bound(const Instance& instance);

// Exponent k with 2^k * base in [target/sqrt(2), sqrt(2) * target).
int power_of_two_exponent(double target, double base);

// Rounds every relaxation interval onto the power-of-two ladder of `base`.
// The grids nest, so the joint grid is the single finest multiplier.
ScaledGridPolicy power_of_two_policy(const Instance& instance, double base);
ScaledGridPolicy power_of_two_policy(const Instance& instance,
                                     const RelaxationSolution& relaxation,
                                     double base);

// Best power-of-two policy over 64 geometric bases in [T0, 2 T0).
struct PowerOfTwoEstimate {
  ScaledGridPolicy policy;
  double cost = 0.0;
};
PowerOfTwoEstimate best_power_of_two(const Instance& instance,
                                     const RelaxationSolution& relaxation);

double opt_estimate(const Instance& instance);

// Every commodity ordered alone at sqrt((K0 + K_i) / H_i), paying K0 on each
// of its orders. The certified cost bounds the policy's true cost from above.
struct EasyRegimePolicy {
  std::vector<double> intervals;
  double certified_cost = 0.0;
};

EasyRegimePolicy easy_regime_policy(const Instance& instance);

struct BaselineResult {
  double lower_bound = 0.0;
  double relaxation_base = 0.0;
  ScaledGridPolicy pow2_policy;
  double pow2_cost = 0.0;
  double opt_estimate = 0.0;  // equals pow2_cost
  EasyRegimePolicy easy;
};

BaselineResult compute_baseline(const Instance& instance);

}  // namespace jrp
