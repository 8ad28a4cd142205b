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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "jrp/baseline.hpp"
#include "jrp/bench.hpp"
#include "jrp/errors.hpp"
#include "jrp/generator.hpp"
#include "jrp/io.hpp"
#include "jrp/policy.hpp"
#include "jrp/solver.hpp"

namespace {

using jrp::Json;

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string format;  // json by default, csv for bench
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw jrp::ValidationError("cannot write " + out_path);
  out << text;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

jrp::Range parse_range(const std::string& text, const char* name) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw jrp::ConfigError(std::string(name) + " expects low,high");
  }
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw jrp::ConfigError(std::string(name) + " expects low,high");
  }
}

std::string baseline_csv(const jrp::BaselineResult& b) {
  return "LB,pow2_cost,opt_estimate,easy_cost\n" + num(b.lower_bound) + "," +
         num(b.pow2_cost) + "," + num(b.opt_estimate) + "," +
         num(b.easy.certified_cost) + "\n";
}

std::string solve_csv(const std::string& name, const jrp::SolveResult& r,
                      std::size_t n) {
  jrp::BenchRow row;
  row.instance = name;
  row.n = n;
  row.result = r;
  std::ostringstream out;
  jrp::write_bench_csv(out, {row});
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint replenishment solver"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed (gen)");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  int gen_n = 5;
  std::string family = "random", k0_range = "0.01,100", k_range = "0.01,100",
              h_range = "0.01,100", gen_out;
  gen->add_option("-n,--n", gen_n, "Number of commodities");
  gen->add_option("--family", family, "random | identical | two_scale");
  gen->add_option("--k0-range", k0_range, "low,high for K0");
  gen->add_option("--k-range", k_range, "low,high for K");
  gen->add_option("--h-range", h_range, "low,high for H");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Run the aligned search");
  std::string instance_path, epsilon_text = "2/5", solve_out;
  std::int64_t psi_cap = 64;
  std::uint64_t guess_budget = 100000;
  std::optional<std::size_t> tmin_index;
  bool exact_compare = false;
  solve->add_option("--instance", instance_path, "Instance JSON")->required();
  solve->add_option("--epsilon", epsilon_text, "Accuracy, p/q or decimal in (0, 1/2)");
  solve->add_option("--psi-cap", psi_cap, "Cap on psi; 0 means uncapped")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--guess-budget", guess_budget, "Guesses per tmin candidate");
  solve->add_option("--tmin-index", tmin_index, "Pin one tmin candidate");
  solve->add_flag("--exact-compare", exact_compare, "Break near-ties exactly");
  solve->add_option("--out", solve_out, "Output file (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a grid policy");
  std::string eval_instance, policy_path, eval_out;
  eval->add_option("--instance", eval_instance, "Instance JSON")->required();
  eval->add_option("--policy", policy_path, "Policy or solve result JSON")->required();
  eval->add_option("--out", eval_out, "Output file (default stdout)");

  // baseline
  auto* base = app.add_subcommand("baseline", "Lower bound and power-of-2 policy");
  std::string base_instance, base_out;
  base->add_option("--instance", base_instance, "Instance JSON")->required();
  base->add_option("--out", base_out, "Output file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Solve every instance in a directory");
  std::string corpus, bench_out, bench_eps = "2/5";
  std::int64_t bench_psi = 64;
  std::uint64_t bench_budget = 100000;
  bench->add_option("--corpus", corpus, "Directory of instance files")->required();
  bench->add_option("--epsilon", bench_eps, "Accuracy");
  bench->add_option("--psi-cap", bench_psi, "Cap on psi; 0 means uncapped")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--guess-budget", bench_budget, "Guesses per tmin candidate");
  bench->add_option("--out", bench_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      jrp::GenSpec spec;
      spec.n = gen_n;
      spec.seed = g.seed;
      spec.family = jrp::parse_family(family);
      spec.k0_range = parse_range(k0_range, "--k0-range");
      spec.k_range = parse_range(k_range, "--k-range");
      spec.h_range = parse_range(h_range, "--h-range");
      emit(gen_out, jrp::instance_to_json(jrp::generate(spec)).dump(2) + "\n");
    } else if (solve->parsed()) {
      const jrp::Instance instance = jrp::read_instance(instance_path);
      jrp::SolverConfig config;
      config.psi_cap = psi_cap == 0 ? std::nullopt : std::optional(psi_cap);
      config.guess_budget = guess_budget;
      config.tmin_index = tmin_index;
      config.threads = g.threads;
      config.exact_compare = exact_compare;
      const jrp::SolveResult r =
          jrp::solve(instance, jrp::Rational::parse(epsilon_text), config);
      if (g.format == "csv") {
        emit(solve_out, solve_csv(std::filesystem::path(instance_path).filename().string(),
                                  r, instance.size()));
      } else {
        emit(solve_out, jrp::result_to_json(r).dump(2) + "\n");
      }
    } else if (eval->parsed()) {
      const jrp::Instance instance = jrp::read_instance(eval_instance);
      const jrp::ScaledGridPolicy policy =
          jrp::policy_from_json(jrp::read_json(policy_path));
      jrp::validate_policy(instance, policy);
      const jrp::CostReport exact = jrp::evaluate_exact(instance, policy);
      const jrp::CostReport uncrossing = jrp::evaluate_uncrossing(instance, policy);
      if (g.format == "csv") {
        emit(eval_out, "j_method,J,F\n" + std::string(to_string(exact.j_method)) + "," +
                           num(exact.joint) + "," + num(exact.total) + "\n" +
                           std::string(to_string(uncrossing.j_method)) + "," +
                           num(uncrossing.joint) + "," + num(uncrossing.total) + "\n");
      } else {
        const Json doc = {{"exact", jrp::report_to_json(exact)},
                          {"uncrossing", jrp::report_to_json(uncrossing)}};
        emit(eval_out, doc.dump(2) + "\n");
      }
    } else if (base->parsed()) {
      const jrp::BaselineResult b =
          jrp::compute_baseline(jrp::read_instance(base_instance));
      emit(base_out, g.format == "csv" ? baseline_csv(b)
                                       : jrp::baseline_to_json(b).dump(2) + "\n");
    } else if (bench->parsed()) {
      jrp::BenchConfig config;
      config.epsilon = jrp::Rational::parse(bench_eps);
      config.solver.psi_cap = bench_psi == 0 ? std::nullopt : std::optional(bench_psi);
      config.solver.guess_budget = bench_budget;
      config.jobs = g.threads;
      const auto rows = jrp::run_bench(corpus, config);
      if (g.format == "json") {
        emit(bench_out, jrp::bench_to_json(rows).dump(2) + "\n");
      } else {
        std::ostringstream out;
        jrp::write_bench_csv(out, rows);
        emit(bench_out, out.str());
      }
    }
  } catch (const std::invalid_argument& e) {
    // ValidationError, ConfigError, InvalidCandidate
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
