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

#include "jrp/rational.hpp"

namespace jrp {

// Single-commodity EOQ model C(T) = K/T + H*T. H is the folded holding rate
// (h * d / 2 per unit of time).
struct EoqModel {
  double ordering_cost = 0.0;  // K
  double holding_rate = 0.0;   // H

  friend bool operator==(const EoqModel&, const EoqModel&) = default;
};

struct Commodity {
  int id = 0;
  EoqModel model;

  friend bool operator==(const Commodity&, const Commodity&) = default;
};

struct Instance {
  double joint_cost = 0.0;  // K0
  std::vector<Commodity> commodities;

  // Throws LookupError for an unknown id.
  const Commodity& commodity(int id) const;
  std::size_t size() const { return commodities.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Both throw ValidationError. Zero ordering costs are rejected.
void validate(const EoqModel& model);
void validate(const Instance& instance);

double eoq_cost(const EoqModel& model, double interval);

// Exact K/T + H*T, with K and H taken at their exact binary values.
Rational eoq_cost_exact(const EoqModel& model, const Rational& interval);

// sqrt(K/H); the cost there is 2*sqrt(K*H).
double eoq_minimizer(const EoqModel& model);

// (K0 + K_i)/T + H_i*T: the joint cost charged to every order of commodity i.
double overloaded_cost(const Instance& instance, int id, double interval);

}  // namespace jrp
