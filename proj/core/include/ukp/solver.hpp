#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ukp/approx_dp.hpp"
#include "ukp/eps_params.hpp"
#include "ukp/gluing.hpp"
#include "ukp/instance.hpp"
#include "ukp/preprocess.hpp"

namespace ukp {

/// Which branch of the complete algorithm produced the answer.
enum class SolveMode {
  kTwoP0Item,       // an input item of profit exactly 2 p0
  kTwoGluedCopies,  // two copies of the profit-p0 glued item
  kDpCombined,      // best DP tuple plus greedy small-item completion
  kGreedyFallback,  // the plain greedy fill beat the DP combination
};

std::string_view to_string(SolveMode mode);

struct SolveStats {
  std::uint64_t tuples_created = 0;
  std::uint64_t glue_ops = 0;
  std::uint64_t reduction_slots = 0;
  std::uint64_t dominance_removals = 0;
};

struct SolveResult {
  Rational profit;
  SolutionMultiset solution;
  SolveStats stats;
  SolveMode mode = SolveMode::kDpCombined;
};

/// Full pipeline: greedy bound, partition, reduction, gluing, approximate
/// DP, best tuple + small-item completion, backtracking and ungluing.
/// Returns a certificate of profit >= (1 - eps) OPT with eps the
/// normalized accuracy.
SolveResult solve(const Instance& instance, const Rational& eps_input);

/// Greedy completion value of a tuple: how many copies of the small item
/// fit beside it and the resulting total profit. copies is 0 when no
/// small item exists.
struct CombineResult {
  Rational profit;
  Integer copies;
};
CombineResult combine_with_small(const Rational& entry_profit, const Rational& entry_size,
                                 const std::optional<Item>& a_eff);
inline CombineResult combine_with_small(const TupleEntry& entry,
                                        const std::optional<Item>& a_eff) {
  return combine_with_small(entry.profit, entry.size, a_eff);
}

/// Walks a final-level tuple's backtracking chain (at most one glued item
/// per level) and expands every glued item into original items. Totals
/// reproduce the tuple exactly.
SolutionMultiset backtrack_solution(std::uint32_t entry_ref, const DpResult& dp,
                                    const GluedLevels& glued);

/// The profit-2p0 input item shortcut; a singleton optimal solution.
std::optional<SolutionMultiset> try_two_p0_item(const Partition& partition,
                                                const EpsParams& params);

/// The two-copies shortcut: when slot (kappa, 0) holds an item of profit
/// exactly p0 and size at most 1/2, two unglued copies are optimal.
std::optional<SolutionMultiset> try_two_glued_copies(const GluedLevels& glued,
                                                     const EpsParams& params);

}  // namespace ukp
