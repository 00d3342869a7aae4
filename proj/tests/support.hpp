#pragma once

// Shared fixtures and reference enumerators for the test suites. The
// enumerators here are deliberately independent of the solver's code
// paths: they recompute everything by brute force so the fast
// implementations can be checked against them.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "ukp/eps_params.hpp"
#include "ukp/gluing.hpp"
#include "ukp/instance.hpp"
#include "ukp/oracle.hpp"
#include "ukp/preprocess.hpp"
#include "ukp/solver.hpp"

namespace ukp::testing {

/// The three-item example instance used across the suites:
/// (1/2, 2/5), (3/10, 7/20), (3/50, 1/20).
inline Instance example_instance() {
  return Instance({
      Item{Rational(1, 2), Rational(2, 5), 0},
      Item{Rational(3, 10), Rational(7, 20), 1},
      Item{Rational(3, 50), Rational(1, 20), 2},
  });
}

/// Everything up to (but not including) the dynamic program.
struct Pipeline {
  GreedyBound greedy;
  EpsParams params;
  Partition partition;
  ReducedLargeSet reduced;
  GluedLevels glued;
};

inline Pipeline run_pipeline(const Instance& instance, const Rational& eps_input) {
  GreedyBound greedy = greedy_p0(instance);
  EpsParams params = normalize_epsilon(eps_input, greedy.p0);
  Partition partition = partition_items(instance, params);
  ReducedLargeSet reduced = reduce_large(partition.large, params);
  GluedLevels glued = build_glued_sets(reduced, params);
  if (partition.small_best) {
    if (auto aeffc = build_aeffc(*partition.small_best, params)) {
      glued.install_aeffc(std::move(*aeffc));
    }
  }
  return Pipeline{std::move(greedy), std::move(params), std::move(partition),
                  std::move(reduced), std::move(glued)};
}

/// Exact optimum of the unbounded problem over `items` at capacity v,
/// via the pseudo-polynomial table on a grid refined enough for v.
inline Rational opt_at(std::span<const Item> items, const Rational& v) {
  if (items.empty()) return Rational(0);
  Integer denom(1);
  for (const Item& item : items) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), denom.get_mpz_t(), item.size.den().get_mpz_t());
    denom = out;
  }
  {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), denom.get_mpz_t(), v.den().get_mpz_t());
    denom = out;
  }
  GridInstance grid;
  grid.denom = denom.get_si();
  grid.cap_units = (v * denom).floor_div(Rational(1)).get_si();
  grid.items.assign(items.begin(), items.end());
  const Rational unit(Integer(1), denom);
  for (const Item& item : items) {
    grid.size_units.push_back(item.size.floor_div(unit).get_si());
  }
  ExactDpTable table(std::move(grid));
  return table.opt();
}

/// A profit/size pair of an exact structured tuple.
struct RefTuple {
  Rational profit;
  Rational size;
};

/// Brute-force construction of the exact structured tuple set for level k:
/// all selections of at most one glued item per level k..kappa+1 (the
/// bundled small item counts as level kappa+1) of total size at most 1
/// that include at least one item from levels >= kappa-2, plus the (0,0)
/// tuple. Each distinct profit keeps its smallest size.
inline std::vector<RefTuple> exact_structured_tuples(const GluedLevels& glued,
                                                     const EpsParams& params, int k) {
  std::vector<std::vector<const GluedItem*>> levels;
  for (int j = k; j <= params.kappa; ++j) {
    std::vector<const GluedItem*> level;
    for (const auto& slot : glued.level(j)) level.push_back(&glued.item(slot.ref));
    levels.push_back(std::move(level));
  }
  if (glued.aeffc() != nullptr) {
    levels.push_back({glued.aeffc()});
  }

  std::vector<RefTuple> out{{Rational(0), Rational(0)}};
  const Rational capacity(1);
  struct Frame {
    Rational profit;
    Rational size;
    bool high;
  };
  std::vector<Frame> partial{{Rational(0), Rational(0), false}};
  for (std::size_t depth = 0; depth < levels.size(); ++depth) {
    std::vector<Frame> next;
    for (const Frame& frame : partial) {
      next.push_back(frame);
      for (const GluedItem* item : levels[depth]) {
        Rational size = frame.size + item->size;
        if (size > capacity) continue;
        next.push_back(
            {frame.profit + item->profit, std::move(size), frame.high || item->level >= params.kappa - 2});
      }
    }
    partial = std::move(next);
  }
  for (const Frame& frame : partial) {
    if (frame.high) out.push_back({frame.profit, frame.size});
  }
  std::sort(out.begin(), out.end(), [](const RefTuple& a, const RefTuple& b) {
    if (a.profit != b.profit) return a.profit < b.profit;
    return a.size < b.size;
  });
  // Per profit keep only the smallest size (equal-profit larger tuples are
  // dominated anyway and would confuse the sweep in pareto_filter).
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RefTuple& a, const RefTuple& b) { return a.profit == b.profit; }),
            out.end());
  return out;
}

/// Removes dominated reference tuples (profit <= and size >= another's).
inline std::vector<RefTuple> pareto_filter(std::vector<RefTuple> tuples) {
  // Sorted by profit ascending (ties by size): sweep right-to-left.
  std::vector<RefTuple> kept;
  std::optional<Rational> min_size;
  for (auto it = tuples.rbegin(); it != tuples.rend(); ++it) {
    if (!min_size || it->size < *min_size) {
      kept.push_back(*it);
      min_size = it->size;
    }
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

}  // namespace ukp::testing
