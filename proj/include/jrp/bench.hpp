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

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "jrp/rational.hpp"
#include "jrp/solver.hpp"

namespace jrp {

// Frozen column order of the bench CSV.
inline constexpr std::array<std::string_view, 16> kBenchColumns = {
    "instance",   "n",          "lower_bound", "pow2_cost",
    "easy_cost",  "aligned_cost", "best_cost", "best_method",
    "ratio_best", "ratio_pow2", "ratio_easy",  "candidates_evaluated",
    "guesses_enumerated", "budget_exhausted", "wall_ms", "error"};

struct BenchConfig {
  Rational epsilon{2, 5};
  SolverConfig solver;  // solver.threads is forced to 1 per instance
  unsigned jobs = 1;    // instances solved concurrently
};

struct BenchRow {
  std::string instance;  // file name
  std::optional<SolveResult> result;
  std::size_t n = 0;
  double wall_ms = 0.0;
  std::string error;
};

// Every *.json file in `corpus`, in file-name order. Unreadable or invalid
// instances become rows with `error` set.
std::vector<BenchRow> run_bench(const std::filesystem::path& corpus,
                                const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
nlohmann::json bench_to_json(const std::vector<BenchRow>& rows);

}  // namespace jrp
