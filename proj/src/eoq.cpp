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

#include "jrp/eoq.hpp"

#include <cmath>
#include <set>
#include <string>

#include "jrp/errors.hpp"

namespace jrp {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

const Commodity& Instance::commodity(int id) const {
  for (const Commodity& c : commodities) {
    if (c.id == id) return c;
  }
  throw LookupError("unknown commodity id " + std::to_string(id));
}

void validate(const EoqModel& model) {
  if (!positive_finite(model.ordering_cost)) {
    throw ValidationError("ordering cost K must be positive and finite, got " +
                          std::to_string(model.ordering_cost));
  }
  if (!positive_finite(model.holding_rate)) {
    throw ValidationError("holding rate H must be positive and finite, got " +
                          std::to_string(model.holding_rate));
  }
}

void validate(const Instance& instance) {
  if (!positive_finite(instance.joint_cost)) {
    throw ValidationError("joint ordering cost K0 must be positive and finite");
  }
  if (instance.commodities.empty()) {
    throw ValidationError("instance has no commodities");
  }
  std::set<int> ids;
  for (const Commodity& c : instance.commodities) {
    if (!ids.insert(c.id).second) {
      throw ValidationError("duplicate commodity id " + std::to_string(c.id));
    }
    try {
      validate(c.model);
    } catch (const ValidationError& e) {
      throw ValidationError("commodity " + std::to_string(c.id) + ": " +
                            e.what());
    }
  }
}

double eoq_cost(const EoqModel& model, double interval) {
  if (!(interval > 0.0)) {
    throw DomainError("EOQ interval must be positive, got " +
                      std::to_string(interval));
  }
  return model.ordering_cost / interval + model.holding_rate * interval;
}

Rational eoq_cost_exact(const EoqModel& model, const Rational& interval) {
  if (interval.sign() <= 0) throw DomainError("EOQ interval must be positive");
  return Rational::from_double(model.ordering_cost) / interval +
         Rational::from_double(model.holding_rate) * interval;
}

double eoq_minimizer(const EoqModel& model) {
  return std::sqrt(model.ordering_cost / model.holding_rate);
}

double overloaded_cost(const Instance& instance, int id, double interval) {
  const Commodity& c = instance.commodity(id);
  const EoqModel overloaded{instance.joint_cost + c.model.ordering_cost,
                            c.model.holding_rate};
  return eoq_cost(overloaded, interval);
}

}  // namespace jrp
