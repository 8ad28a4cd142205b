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

#include "jrp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "jrp/errors.hpp"

namespace jrp {

namespace {

// The standard distributions are not specified bit-for-bit, so map the raw
// 64-bit draws ourselves.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double log_uniform(const Range& r) {
    if (r.low == r.high) return r.low;
    const double v = std::exp(std::log(r.low) + unit() * (std::log(r.high) - std::log(r.low)));
    return std::clamp(v, r.low, r.high);
  }

 private:
  std::mt19937_64 engine_;
};

void check_range(const Range& r, const char* name) {
  if (!(std::isfinite(r.low) && std::isfinite(r.high) && r.low > 0.0 && r.low <= r.high)) {
    throw ValidationError(std::string(name) + " must satisfy 0 < low <= high < inf");
  }
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kRandom: return "random";
    case Family::kIdentical: return "identical";
    case Family::kTwoScale: return "two_scale";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "random") return Family::kRandom;
  if (text == "identical") return Family::kIdentical;
  if (text == "two_scale") return Family::kTwoScale;
  throw ConfigError("unknown family: " + std::string(text));
}

void validate(const GenSpec& spec) {
  if (spec.n < 1) throw ValidationError("n must be positive");
  check_range(spec.k0_range, "K0 range");
  check_range(spec.k_range, "K range");
  check_range(spec.h_range, "H range");
}

Instance generate(const GenSpec& spec) {
  validate(spec);
  Sampler rng(spec.seed);
  Instance out;
  out.joint_cost = rng.log_uniform(spec.k0_range);
  const auto sample = [&] {
    const double k = rng.log_uniform(spec.k_range);
    const double h = rng.log_uniform(spec.h_range);
    return EoqModel{k, h};
  };

  switch (spec.family) {
    case Family::kRandom:
      for (int i = 0; i < spec.n; ++i) out.commodities.push_back({i, sample()});
      break;
    case Family::kIdentical: {
      const EoqModel m = sample();
      for (int i = 0; i < spec.n; ++i) out.commodities.push_back({i, m});
      break;
    }
    case Family::kTwoScale: {
      const int small = (spec.n + 1) / 2;
      double widest = 0.0;
      for (int i = 0; i < spec.n; ++i) {
        EoqModel m = sample();
        if (i < small) {
          widest = std::max(widest, eoq_minimizer(m));
        } else {
          // Target sqrt(K/H) in [20, 40] x the widest small-scale interval.
          const double target = widest * 20.0 * std::exp2(rng.unit());
          m.ordering_cost = m.holding_rate * target * target;
        }
        out.commodities.push_back({i, m});
      }
      break;
    }
  }
  validate(out);
  return out;
}

}  // namespace jrp
