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

#include "jrp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "jrp/errors.hpp"

namespace jrp {

namespace {

constexpr std::size_t kBatchPerThread = 256;
constexpr std::int64_t kMaxEnumerablePsi = 1 << 20;

struct Candidate {
  Method method = Method::kPowerOfTwo;
  double cost = 0.0;
  std::optional<Rational> exact;
  std::size_t tmin_index = 0;
  std::uint64_t ordinal = 0;
  std::optional<ScaledGridPolicy> policy;
  CostReport report;
  std::string guess;
};

// Strict preference: cheaper first, then method order, then guess order.
bool preferred(const Candidate& a, const Candidate& b, bool exact_compare) {
  if (exact_compare && a.exact && b.exact &&
      std::abs(a.cost - b.cost) <= 1e-9 * std::max(a.cost, b.cost)) {
    if (*a.exact != *b.exact) return *a.exact < *b.exact;
  } else if (a.cost != b.cost) {
    return a.cost < b.cost;
  }
  if (a.method != b.method) return a.method < b.method;
  if (a.tmin_index != b.tmin_index) return a.tmin_index < b.tmin_index;
  return a.ordinal < b.ordinal;
}

struct GuessOutcome {
  bool feasible = false;
  RepresentativeSet reps;
  Candidate candidate;
};

GuessOutcome evaluate_guess(const Instance& instance, const SegmentLadder& ladder,
                            const AlignmentGuess& guess, std::int64_t psi,
                            const SolverConfig& config) {
  GuessOutcome out;
  const auto components = solve_components(guess, ladder, psi);
  if (!components) return out;
  out.reps = choose_representatives(*components, psi);

  Candidate& c = out.candidate;
  c.method = Method::kAligned;
  c.tmin_index = guess.tmin_index;
  c.ordinal = guess.ordinal;
  c.guess = guess.id();
  ScaledGridPolicy policy =
      assemble_policy(instance, out.reps, ladder.epsilon(), ladder.tmin());
  policy.provenance = {"aligned", guess.tmin_index, guess.ordinal, c.guess};
  try {
    c.report = evaluate_exact(instance, policy, config.exponent_cap);
    if (config.exact_compare && !c.report.cap_fallback) {
      c.exact = exact_total_cost(instance, policy, config.exponent_cap);
    }
  } catch (const BudgetError&) {
    return out;
  }
  c.cost = c.report.total;
  c.policy = std::move(policy);
  out.feasible = true;
  return out;
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kAligned:
      return "aligned";
    case Method::kPowerOfTwo:
      return "power_of_two";
    case Method::kEasyRegime:
      return "easy_regime";
  }
  return "aligned";
}

Method parse_method(std::string_view text) {
  if (text == "aligned") return Method::kAligned;
  if (text == "power_of_two") return Method::kPowerOfTwo;
  if (text == "easy_regime") return Method::kEasyRegime;
  throw ValidationError("unknown method '" + std::string(text) + "'");
}

SolveResult solve(const Instance& instance, const Rational& epsilon,
                  const SolverConfig& config) {
  validate_epsilon(epsilon);
  validate(instance);

  SolveResult result;
  result.epsilon = epsilon;

  const BaselineResult baseline = compute_baseline(instance);
  result.lower_bound = baseline.lower_bound;
  result.pow2_cost = baseline.pow2_cost;
  result.easy_cost = baseline.easy.certified_cost;
  result.opt_estimate = baseline.opt_estimate;

  Candidate best;
  best.method = Method::kPowerOfTwo;
  best.cost = baseline.pow2_cost;
  best.policy = baseline.pow2_policy;
  best.report = evaluate_exact(instance, baseline.pow2_policy, config.exponent_cap);
  if (config.exact_compare) {
    best.exact = exact_total_cost(instance, baseline.pow2_policy, config.exponent_cap);
  }
  {
    Candidate easy;
    easy.method = Method::kEasyRegime;
    easy.cost = baseline.easy.certified_cost;
    easy.report.joint = 0.0;
    easy.report.total = easy.cost;
    easy.report.j_method = JMethod::kCertifiedUpperBound;
    for (std::size_t i = 0; i < instance.commodities.size(); ++i) {
      const Commodity& c = instance.commodities[i];
      easy.report.per_commodity.push_back(
          overloaded_cost(instance, c.id, baseline.easy.intervals[i]));
    }
    if (preferred(easy, best, config.exact_compare)) best = std::move(easy);
  }
  result.candidates_evaluated = 2;

  const std::vector<double> tmins = enumerate_tmin(
      instance.joint_cost, baseline.opt_estimate, epsilon, instance.size());
  result.tmin_candidates = tmins.size();
  if (config.tmin_index && *config.tmin_index >= tmins.size()) {
    throw ConfigError("tmin_index " + std::to_string(*config.tmin_index) +
                      " out of range; there are " +
                      std::to_string(tmins.size()) + " candidates");
  }

  const SegmentLadder probe(epsilon, tmins.front());
  result.num_segments = probe.size();
  result.theoretical_psi = theoretical_psi(epsilon, probe.size());
  const BigInt psi_big = psi_value(epsilon, probe.size(), config.psi_cap);
  if (psi_big > static_cast<long>(kMaxEnumerablePsi)) {
    throw ConfigError("psi " + psi_big.get_str() +
                      " is too large to enumerate; set psi_cap");
  }
  result.psi_eff = psi_big.get_si();

  std::optional<Candidate> best_aligned;
  const std::size_t batch_size = kBatchPerThread * std::max(1u, config.threads);
  for (std::size_t t = 0; t < tmins.size() && config.guess_budget > 0; ++t) {
    if (config.tmin_index && *config.tmin_index != t) continue;
    const SegmentLadder ladder(epsilon, tmins[t]);

    std::vector<AlignmentGuess> batch;
    auto flush = [&] {
      std::vector<GuessOutcome> outcomes(batch.size());
      parallel_for(batch.size(), config.threads, [&](std::size_t i) {
        outcomes[i] = evaluate_guess(instance, ladder, batch[i],
                                     result.psi_eff, config);
      });
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        GuessOutcome& o = outcomes[i];
        if (!o.feasible) {
          ++result.guesses_pruned;
          continue;
        }
        ++result.candidates_evaluated;
        result.collisions += o.reps.collisions.size();
        if (config.observer) {
          config.observer({&batch[i], &o.reps, &*o.candidate.policy,
                           &o.candidate.report});
        }
        if (!best_aligned || preferred(o.candidate, *best_aligned, config.exact_compare)) {
          best_aligned = o.candidate;
        }
      }
      batch.clear();
    };

    const GuessStreamStats stats = enumerate_guesses(
        ladder, result.psi_eff, config.guess_budget,
        [&](const AlignmentGuess& g) {
          batch.push_back(g);
          if (batch.size() >= batch_size) flush();
          return true;
        },
        t);
    flush();
    result.guesses_enumerated += stats.yielded;
    result.budget_exhausted = result.budget_exhausted || stats.budget_exhausted;
  }

  if (best_aligned) {
    result.best_aligned_cost = best_aligned->cost;
    if (preferred(*best_aligned, best, config.exact_compare)) best = *best_aligned;
  }

  result.best_method = best.method;
  result.best_cost = best.cost;
  result.best_policy = best.policy;
  result.best_report = best.report;
  result.best_guess = best.guess;
  if (best.method == Method::kEasyRegime) {
    result.easy_intervals = baseline.easy.intervals;
  }
  return result;
}

Certificate certify(const SolveResult& result) {
  Certificate c;
  c.best_cost = result.best_cost;
  c.lower_bound = result.lower_bound;
  c.ratio = result.best_cost / result.lower_bound;
  c.budget_exhausted = result.budget_exhausted;
  c.psi_eff = result.psi_eff;
  c.theoretical_psi = result.theoretical_psi;
  return c;
}

}  // namespace jrp
