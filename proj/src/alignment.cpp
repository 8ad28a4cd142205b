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

#include "jrp/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include "jrp/errors.hpp"

namespace jrp {

namespace {

Rational growth_power(const Rational& growth, int exponent) {
  if (exponent >= 0) return rational_power(growth, static_cast<unsigned>(exponent));
  return Rational(1) / rational_power(growth, static_cast<unsigned>(-exponent));
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

// Depth-first walk over forests and their labelings for one active set.
class ForestWalker {
 public:
  ForestWalker(const SegmentLadder& ladder, std::vector<int> active,
               std::int64_t psi,
               const std::function<bool(std::vector<AlignmentEdge>)>& emit)
      : active_(std::move(active)), emit_(emit) {
    for (std::size_t i = 0; i < active_.size(); ++i) {
      for (std::size_t j = i + 1; j < active_.size(); ++j) {
        auto labels = admissible_labels(ladder, active_[i], active_[j], psi);
        if (labels.empty()) continue;
        edges_.push_back({i, j, std::move(labels)});
      }
    }
  }

  // Returns false once the consumer asked to stop.
  bool run() {
    DisjointSets sets(active_.size());
    return walk(0, sets);
  }

 private:
  struct CandidateEdge {
    std::size_t a;
    std::size_t b;
    std::vector<std::pair<std::int64_t, std::int64_t>> labels;
  };

  bool walk(std::size_t next, DisjointSets& sets) {
    if (!emit_labelings()) return false;
    for (std::size_t e = next; e < edges_.size(); ++e) {
      if (sets.find(edges_[e].a) == sets.find(edges_[e].b)) continue;
      DisjointSets extended = sets;
      extended.unite(edges_[e].a, edges_[e].b);
      chosen_.push_back(e);
      const bool keep_going = walk(e + 1, extended);
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  bool emit_labelings() {
    std::vector<std::size_t> odometer(chosen_.size(), 0);
    while (true) {
      std::vector<AlignmentEdge> forest;
      forest.reserve(chosen_.size());
      for (std::size_t k = 0; k < chosen_.size(); ++k) {
        const CandidateEdge& e = edges_[chosen_[k]];
        const auto& [alpha_low, alpha_high] = e.labels[odometer[k]];
        forest.push_back({active_[e.a], active_[e.b], alpha_low, alpha_high});
      }
      if (!emit_(std::move(forest))) return false;
      if (chosen_.empty()) return true;
      // Last edge turns fastest.
      std::size_t k = chosen_.size();
      bool carry = true;
      while (k > 0 && carry) {
        --k;
        if (++odometer[k] < edges_[chosen_[k]].labels.size()) {
          carry = false;
        } else {
          odometer[k] = 0;
        }
      }
      if (carry) return true;
    }
  }

  std::vector<int> active_;
  const std::function<bool(std::vector<AlignmentEdge>)>& emit_;
  std::vector<CandidateEdge> edges_;
  std::vector<std::size_t> chosen_;
};

// A value that would align a loose component with a fixed representative.
struct ForbiddenPoint {
  double approx;
  std::size_t pair;  // index into the (loose vertex, fixed vertex) pairs
  std::int64_t a;
  std::int64_t b;
};

struct AlignmentPair {
  Rational beta;   // loose vertex coefficient
  Rational fixed;  // fixed representative
};

Rational exact_point(const ForbiddenPoint& p,
                     const std::vector<AlignmentPair>& pairs) {
  // beta * v / fixed == a / b.
  return Rational(BigInt(p.a), BigInt(p.b)) * pairs[p.pair].fixed /
         pairs[p.pair].beta;
}

bool misaligned_with_all(const Rational& source_value,
                         const std::vector<AlignmentPair>& pairs,
                         std::int64_t psi) {
  for (const AlignmentPair& p : pairs) {
    if (psi_aligned(p.beta * source_value, p.fixed, psi)) return false;
  }
  return true;
}

Rational pick_loose_value(const FeasibleRange& range,
                          const std::vector<AlignmentPair>& pairs,
                          std::int64_t psi) {
  const double lo_d = range.low.to_double();
  const double hi_d = range.high.to_double();
  const double slack = 1e-12;

  std::vector<ForbiddenPoint> points;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double scale = pairs[k].fixed.to_double() / pairs[k].beta.to_double();
    const double ratio_lo = lo_d / scale;
    const double ratio_hi = hi_d / scale;
    for (std::int64_t b = 1; b <= psi; ++b) {
      const auto a_min = std::max<std::int64_t>(
          1, static_cast<std::int64_t>(std::ceil(ratio_lo * static_cast<double>(b))) - 1);
      const auto a_max = std::min<std::int64_t>(
          psi, static_cast<std::int64_t>(std::floor(ratio_hi * static_cast<double>(b))) + 1);
      for (std::int64_t a = a_min; a <= a_max; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const double v = scale * static_cast<double>(a) / static_cast<double>(b);
        if (v < lo_d * (1 - slack) || v > hi_d * (1 + slack)) continue;
        points.push_back({v, k, a, b});
      }
    }
  }
  std::sort(points.begin(), points.end(),
            [](const ForbiddenPoint& x, const ForbiddenPoint& y) {
              return x.approx < y.approx;
            });

  // Gap g spans boundary g to boundary g+1, where boundary 0 is r-, the
  // points follow, and the last boundary is r+.
  struct Gap {
    double width;
    std::size_t index;
  };
  std::vector<Gap> gaps;
  gaps.reserve(points.size() + 1);
  auto boundary = [&](std::size_t i) {
    if (i == 0) return lo_d;
    if (i == points.size() + 1) return hi_d;
    return std::clamp(points[i - 1].approx, lo_d, hi_d);
  };
  for (std::size_t g = 0; g <= points.size(); ++g) {
    gaps.push_back({boundary(g + 1) - boundary(g), g});
  }
  std::stable_sort(gaps.begin(), gaps.end(), [](const Gap& x, const Gap& y) {
    return x.width > y.width;
  });

  auto exact_boundary = [&](std::size_t i) {
    if (i == 0) return range.low;
    if (i == points.size() + 1) return range.high;
    return std::clamp(exact_point(points[i - 1], pairs), range.low, range.high);
  };
  for (const Gap& gap : gaps) {
    const Rational left = exact_boundary(gap.index);
    const Rational right = exact_boundary(gap.index + 1);
    if (!(left < right)) continue;
    const Rational mid = (left + right) / Rational(2);
    if (misaligned_with_all(mid, pairs, psi)) return mid;
  }
  throw InternalError("no misaligned value found in a non-degenerate range");
}

}  // namespace

void validate_epsilon(const Rational& epsilon) {
  if (epsilon.sign() <= 0 || !(epsilon < Rational(BigInt(1), BigInt(2)))) {
    throw ConfigError("epsilon must lie in (0, 1/2), got " + epsilon.str());
  }
}

std::vector<double> enumerate_tmin(double joint_ordering_cost,
                                   double opt_estimate, const Rational& epsilon,
                                   std::size_t num_commodities) {
  validate_epsilon(epsilon);
  if (!(joint_ordering_cost > 0.0) || !(opt_estimate > 0.0)) {
    throw DomainError("enumerate_tmin requires positive K0 and estimate");
  }
  if (num_commodities == 0) throw DomainError("enumerate_tmin requires n >= 1");
  const double start = joint_ordering_cost / opt_estimate;
  const Rational step = Rational(1) + epsilon / Rational(2);
  const Rational limit = Rational(static_cast<long>(num_commodities)) / epsilon;
  std::vector<double> out;
  for (Rational power(1); power < limit; power *= step) {
    out.push_back(start * power.to_double());
  }
  return out;
}

SegmentLadder::SegmentLadder(Rational epsilon, double tmin)
    : epsilon_(std::move(epsilon)), tmin_(tmin) {
  validate_epsilon(epsilon_);
  if (!(std::isfinite(tmin_) && tmin_ > 0.0)) {
    throw DomainError("segment ladder needs a positive tmin");
  }
  const Rational growth = Rational(1) + epsilon_;
  const Rational cover = Rational(1) / epsilon_;
  bounds_.push_back(Rational(1));
  while (bounds_.back() < cover) bounds_.push_back(bounds_.back() * growth);
}

SegmentLadder build_segments(const Rational& epsilon, double tmin) {
  return SegmentLadder(epsilon, tmin);
}

BigInt theoretical_psi(const Rational& epsilon, int num_segments) {
  validate_epsilon(epsilon);
  if (num_segments < 1) throw DomainError("psi needs at least one segment");
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(num_segments));
  const BigInt l = num_segments;
  const Rational psi = Rational(BigInt(2 * l * l * two_pow)) / epsilon;
  return psi.ceil();
}

BigInt psi_value(const Rational& epsilon, int num_segments,
                 std::optional<std::int64_t> psi_cap) {
  BigInt psi = theoretical_psi(epsilon, num_segments);
  if (psi_cap) {
    if (*psi_cap < 1) throw ConfigError("psi_cap must be at least 1");
    const BigInt cap = static_cast<long>(*psi_cap);
    if (cap < psi) psi = cap;
  }
  return psi;
}

std::string AlignmentGuess::id() const {
  std::ostringstream os;
  os << "t" << tmin_index << "#" << ordinal << " A{";
  for (std::size_t i = 0; i < active.size(); ++i) {
    os << (i ? "," : "") << active[i];
  }
  os << "}";
  for (const AlignmentEdge& e : forest) {
    os << " " << e.low << "-" << e.high << ":" << e.alpha_low << "/"
       << e.alpha_high;
  }
  return os.str();
}

std::vector<std::pair<std::int64_t, std::int64_t>> admissible_labels(
    const SegmentLadder& ladder, int low, int high, std::int64_t psi) {
  if (low >= high || low < 1 || high > ladder.size()) {
    throw DomainError("admissible_labels needs 1 <= low < high <= L");
  }
  const Rational growth = Rational(1) + ladder.epsilon();
  const Rational lo = growth_power(growth, low - high - 1);
  const Rational hi = growth_power(growth, low - high + 1);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t alpha_low = 1; alpha_low <= psi; ++alpha_low) {
    const Rational scale(alpha_low);
    const BigInt first = std::max(BigInt(1), (lo * scale).ceil());
    const BigInt last = std::min(BigInt(static_cast<long>(psi)), (hi * scale).floor());
    for (BigInt v = first; v <= last; ++v) {
      const std::int64_t alpha_high = v.get_si();
      if (std::gcd(alpha_low, alpha_high) == 1) {
        out.emplace_back(alpha_low, alpha_high);
      }
    }
  }
  return out;
}

GuessStreamStats enumerate_guesses(
    const SegmentLadder& ladder, std::int64_t psi_eff, std::uint64_t budget,
    const std::function<bool(const AlignmentGuess&)>& sink,
    std::size_t tmin_index) {
  if (budget == 0) throw DomainError("guess budget must be positive");
  if (psi_eff < 1) throw DomainError("psi must be at least 1");
  const int segments = ladder.size();
  if (segments > 30) {
    throw BudgetError("guess enumeration over more than 30 segments");
  }

  GuessStreamStats stats;
  std::vector<int> active;
  const std::function<bool(std::vector<AlignmentEdge>)> emit =
      [&](std::vector<AlignmentEdge> forest) {
        if (stats.yielded == budget) {
          stats.budget_exhausted = true;
          return false;
        }
        AlignmentGuess guess{tmin_index, stats.yielded, active, std::move(forest)};
        ++stats.yielded;
        return sink(guess);
      };

  const std::uint64_t masks = std::uint64_t{1} << segments;
  for (std::uint64_t mask = 1; mask < masks; mask += 2) {
    active.clear();
    for (int s = 0; s < segments; ++s) {
      if (mask & (std::uint64_t{1} << s)) active.push_back(s + 1);
    }
    ForestWalker walker(ladder, active, psi_eff, emit);
    if (!walker.run()) break;
  }
  return stats;
}

std::vector<AlignmentGuess> collect_guesses(const SegmentLadder& ladder,
                                            std::int64_t psi_eff,
                                            std::uint64_t budget,
                                            GuessStreamStats* stats) {
  std::vector<AlignmentGuess> out;
  const GuessStreamStats s = enumerate_guesses(
      ladder, psi_eff, budget, [&](const AlignmentGuess& g) {
        out.push_back(g);
        return true;
      });
  if (stats) *stats = s;
  return out;
}

std::vector<std::vector<int>> forest_components(const AlignmentGuess& guess) {
  const std::vector<int>& active = guess.active;
  auto index_of = [&](int segment) {
    const auto it = std::lower_bound(active.begin(), active.end(), segment);
    if (it == active.end() || *it != segment) {
      throw InternalError("forest edge touches an inactive segment");
    }
    return static_cast<std::size_t>(it - active.begin());
  };
  DisjointSets sets(active.size());
  for (const AlignmentEdge& e : guess.forest) {
    if (!sets.unite(index_of(e.low), index_of(e.high))) {
      throw InternalError("guess forest contains a cycle");
    }
  }
  std::map<std::size_t, std::vector<int>> by_root;
  for (std::size_t i = 0; i < active.size(); ++i) {
    by_root[sets.find(i)].push_back(active[i]);
  }
  // Roots are the smallest member index, so map order is source order.
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

std::map<int, Rational> propagate_betas(const AlignmentGuess& guess,
                                        std::span<const int> component,
                                        int source) {
  auto in_component = [&](int v) {
    return std::find(component.begin(), component.end(), v) != component.end();
  };
  if (!in_component(source)) {
    throw InternalError("source is not a member of its component");
  }
  std::map<int, Rational> betas;
  betas.emplace(source, Rational(1));
  std::queue<int> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const AlignmentEdge& e : guess.forest) {
      if (!in_component(e.low) || !in_component(e.high)) continue;
      // alpha_low * R_low == alpha_high * R_high.
      if (e.low == u && !betas.contains(e.high)) {
        betas.emplace(e.high, betas.at(u) * Rational(BigInt(e.alpha_low),
                                                     BigInt(e.alpha_high)));
        frontier.push(e.high);
      } else if (e.high == u && !betas.contains(e.low)) {
        betas.emplace(e.low, betas.at(u) * Rational(BigInt(e.alpha_high),
                                                    BigInt(e.alpha_low)));
        frontier.push(e.low);
      }
    }
  }
  if (betas.size() != component.size()) {
    throw InternalError("component is not connected in the guess forest");
  }
  return betas;
}

std::optional<FeasibleRange> feasibility_interval(
    const std::map<int, Rational>& betas, const SegmentLadder& ladder) {
  if (betas.empty()) throw InternalError("feasibility_interval of no segments");
  std::optional<Rational> low;
  std::optional<Rational> high;
  for (const auto& [segment, beta] : betas) {
    const Rational l = ladder.lower(segment) / beta;
    const Rational h = ladder.upper(segment) / beta;
    if (!low || *low < l) low = l;
    if (!high || h < *high) high = h;
  }
  if (*high < *low) return std::nullopt;
  return FeasibleRange{*low, *high};
}

std::optional<std::vector<ComponentSolution>> solve_components(
    const AlignmentGuess& guess, const SegmentLadder& ladder,
    std::int64_t psi_eff) {
  std::vector<ComponentSolution> out;
  for (std::vector<int>& vertices : forest_components(guess)) {
    const int source = vertices.front();
    std::map<int, Rational> betas = propagate_betas(guess, vertices, source);
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(psi_eff),
                  static_cast<unsigned long>(vertices.size()));
    for (const auto& [segment, beta] : betas) {
      if (beta.numerator() > bound || beta.denominator() > bound) {
        throw InternalError("beta coefficient exceeds psi^|C| for segment " +
                            std::to_string(segment));
      }
    }
    auto range = feasibility_interval(betas, ladder);
    if (!range) return std::nullopt;
    out.push_back({std::move(vertices), source, std::move(betas),
                   std::move(*range)});
  }
  return out;
}

bool psi_aligned(const Rational& a, const Rational& b, std::int64_t psi) {
  const Rational ratio = a / b;
  const BigInt cap = static_cast<long>(psi);
  return ratio.numerator() <= cap && ratio.denominator() <= cap;
}

RepresentativeSet choose_representatives(
    std::span<const ComponentSolution> components, std::int64_t psi_eff) {
  RepresentativeSet out;
  out.psi_eff = psi_eff;

  std::vector<const ComponentSolution*> order;
  for (const ComponentSolution& c : components) {
    if (c.tight()) order.push_back(&c);
  }
  for (const ComponentSolution& c : components) {
    if (!c.tight()) order.push_back(&c);
  }

  std::vector<std::pair<int, Rational>> fixed;
  for (const ComponentSolution* c : order) {
    Rational source_value;
    if (c->tight()) {
      source_value = c->range.low;
      for (const auto& [segment, beta] : c->betas) {
        for (const auto& [other, value] : fixed) {
          if (psi_aligned(beta * source_value, value, psi_eff)) {
            out.collisions.push_back(
                {std::min(segment, other), std::max(segment, other)});
          }
        }
      }
    } else {
      std::vector<AlignmentPair> pairs;
      for (const auto& [segment, beta] : c->betas) {
        for (const auto& [other, value] : fixed) pairs.push_back({beta, value});
      }
      source_value = pick_loose_value(c->range, pairs, psi_eff);
    }
    for (const auto& [segment, beta] : c->betas) {
      const Rational value = beta * source_value;
      out.values.emplace(segment, value);
      fixed.emplace_back(segment, value);
    }
  }
  for (const ComponentSolution& c : components) out.components.push_back(c.vertices);
  return out;
}

}  // namespace jrp
