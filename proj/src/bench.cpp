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

#include "jrp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "jrp/errors.hpp"
#include "jrp/io.hpp"

namespace jrp {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Quote a CSV field when it needs it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

BenchRow run_one(const std::filesystem::path& file, const BenchConfig& config) {
  BenchRow row;
  row.instance = file.filename().string();
  const auto start = std::chrono::steady_clock::now();
  try {
    const Instance instance = read_instance(file);
    row.n = instance.size();
    SolverConfig solver = config.solver;
    solver.threads = 1;
    row.result = solve(instance, config.epsilon, solver);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::filesystem::path& corpus,
                                const BenchConfig& config) {
  if (!std::filesystem::is_directory(corpus)) {
    throw ValidationError("not a directory: " + corpus.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<BenchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      rows[i] = run_one(files[i], config);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, files.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  for (std::size_t i = 0; i < kBenchColumns.size(); ++i) {
    out << (i ? "," : "") << kBenchColumns[i];
  }
  out << "\n";
  for (const BenchRow& row : rows) {
    std::vector<std::string> f(kBenchColumns.size());
    f[0] = csv_field(row.instance);
    if (row.result) {
      const SolveResult& r = *row.result;
      f[1] = std::to_string(row.n);
      f[2] = fmt(r.lower_bound);
      f[3] = fmt(r.pow2_cost);
      f[4] = fmt(r.easy_cost);
      f[5] = r.best_aligned_cost ? fmt(*r.best_aligned_cost) : "";
      f[6] = fmt(r.best_cost);
      f[7] = std::string(to_string(r.best_method));
      f[8] = fmt(r.best_cost / r.lower_bound);
      f[9] = fmt(r.pow2_cost / r.lower_bound);
      f[10] = fmt(r.easy_cost / r.lower_bound);
      f[11] = std::to_string(r.candidates_evaluated);
      f[12] = std::to_string(r.guesses_enumerated);
      f[13] = r.budget_exhausted ? "true" : "false";
    }
    f[14] = fmt(row.wall_ms);
    f[15] = csv_field(row.error);
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
    out << "\n";
  }
}

nlohmann::json bench_to_json(const std::vector<BenchRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const BenchRow& row : rows) {
    nlohmann::json doc = {{"instance", row.instance}, {"wall_ms", row.wall_ms}};
    if (row.result) {
      doc["n"] = row.n;
      doc["result"] = result_to_json(*row.result);
    } else {
      doc["error"] = row.error;
    }
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace jrp
