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

#include <cstdint>
#include <string_view>

#include "jrp/eoq.hpp"

namespace jrp {

enum class Family { kRandom, kIdentical, kTwoScale };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);  // throws ConfigError

struct Range {
  double low = 1.0;
  double high = 1.0;
};

struct GenSpec {
  int n = 1;
  std::uint64_t seed = 0;
  Range k0_range{0.01, 100.0};
  Range k_range{0.01, 100.0};
  Range h_range{0.01, 100.0};
  Family family = Family::kRandom;
};

void validate(const GenSpec& spec);  // throws ValidationError

// Parameters are log-uniform over the ranges. In the two_scale family the
// second half of the commodities gets ordering costs raised so that every
// sqrt(K/H) there is at least 20x the largest one in the first half; those
// K values may leave k_range.
Instance generate(const GenSpec& spec);

}  // namespace jrp
