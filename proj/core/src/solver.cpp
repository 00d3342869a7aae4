#include "ukp/solver.hpp"

#include "ukp/errors.hpp"

namespace ukp {

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::kTwoP0Item:
      return "two-p0-item";
    case SolveMode::kTwoGluedCopies:
      return "two-glued-copies";
    case SolveMode::kDpCombined:
      return "dp-combined";
    case SolveMode::kGreedyFallback:
      return "greedy-fallback";
  }
  return "unknown";
}

CombineResult combine_with_small(const Rational& entry_profit, const Rational& entry_size,
                                 const std::optional<Item>& a_eff) {
  CombineResult out;
  out.copies = 0;
  out.profit = entry_profit;
  if (a_eff) {
    out.copies = (Rational(1) - entry_size).floor_div(a_eff->size);
    if (sgn(out.copies) > 0) {
      out.profit += a_eff->profit * out.copies;
    } else {
      out.copies = 0;
    }
  }
  return out;
}

SolutionMultiset backtrack_solution(std::uint32_t entry_ref, const DpResult& dp,
                                    const GluedLevels& glued) {
  SolutionMultiset out;
  std::uint32_t cur = entry_ref;
  int last_level = -1;
  while (dp.arena[cur].back != TupleEntry::Back::kOrigin) {
    const TupleEntry& entry = dp.arena[cur];
    if (entry.level <= last_level) {
      throw SolverError("backtracking chain levels not strictly increasing");
    }
    last_level = entry.level;
    out.merge(glued.unglue(entry.item));
    if (entry.back == TupleEntry::Back::kSingle) break;
    cur = entry.parent;
  }
  if (out.total_profit() != dp.arena[entry_ref].profit ||
      out.total_size() != dp.arena[entry_ref].size) {
    throw SolverError("unglued certificate does not reproduce the tuple totals");
  }
  return out;
}

std::optional<SolutionMultiset> try_two_p0_item(const Partition& partition,
                                                const EpsParams& params) {
  if (!partition.two_p0_item) return std::nullopt;
  if (partition.two_p0_item->profit != params.two_p0) {
    throw SolverError("partition carries a mislabeled 2 p0 item");
  }
  SolutionMultiset out;
  out.add_one(*partition.two_p0_item);
  return out;
}

std::optional<SolutionMultiset> try_two_glued_copies(const GluedLevels& glued,
                                                     const EpsParams& params) {
  const auto top = glued.find_ref(params.kappa, 0);
  if (!top) return std::nullopt;
  const GluedItem& item = glued.item(*top);
  if (item.profit != params.p0 || item.size > Rational(1, 2)) return std::nullopt;
  SolutionMultiset out;
  out.merge(glued.unglue(*top));
  out.merge(glued.unglue(*top));
  return out;
}

SolveResult solve(const Instance& instance, const Rational& eps_input) {
  const GreedyBound greedy = greedy_p0(instance);
  const EpsParams params = normalize_epsilon(eps_input, greedy.p0);
  const Partition partition = partition_items(instance, params);

  SolveResult result;

  if (auto shortcut = try_two_p0_item(partition, params)) {
    result.profit = shortcut->total_profit();
    result.solution = std::move(*shortcut);
    result.mode = SolveMode::kTwoP0Item;
    return result;
  }

  const ReducedLargeSet reduced = reduce_large(partition.large, params);
  result.stats.reduction_slots = reduced.size();

  GlueBuildStats glue_stats;
  GluedLevels glued = build_glued_sets(reduced, params, &glue_stats);
  result.stats.glue_ops = glue_stats.glue_ops;
  if (partition.small_best) {
    if (auto aeffc = build_aeffc(*partition.small_best, params)) {
      glued.install_aeffc(std::move(*aeffc));
    }
  }

  if (auto shortcut = try_two_glued_copies(glued, params)) {
    result.profit = shortcut->total_profit();
    result.solution = std::move(*shortcut);
    result.mode = SolveMode::kTwoGluedCopies;
    return result;
  }

  const DpResult dp = run_dp(glued, params);
  result.stats.tuples_created = dp.tuples_created;
  result.stats.dominance_removals = dp.dominance_removals;

  // Best tuple under greedy small-item completion. Ties prefer the
  // smaller size, then the smaller bucket; the origin is scanned first.
  std::uint32_t best_ref = DpResult::kOriginRef;
  CombineResult best = combine_with_small(Rational(0), Rational(0), partition.small_best);
  for (const auto& bucket : dp.final_level().buckets) {
    const TupleEntry& entry = dp.arena[bucket.entry];
    CombineResult candidate = combine_with_small(entry, partition.small_best);
    if (candidate.profit > best.profit ||
        (candidate.profit == best.profit && entry.size < dp.arena[best_ref].size)) {
      best = std::move(candidate);
      best_ref = bucket.entry;
    }
  }

  if (greedy.p0 >= best.profit) {
    SolutionMultiset fallback;
    fallback.add(greedy.item, greedy.copies);
    result.profit = fallback.total_profit();
    result.solution = std::move(fallback);
    result.mode = SolveMode::kGreedyFallback;
    return result;
  }

  SolutionMultiset solution = backtrack_solution(best_ref, dp, glued);
  if (sgn(best.copies) > 0) {
    solution.add(*partition.small_best, best.copies);
  }
  if (solution.total_profit() != best.profit) {
    throw SolverError("certificate profit disagrees with the combined value");
  }
  result.profit = best.profit;
  result.solution = std::move(solution);
  result.mode = SolveMode::kDpCombined;
  return result;
}

}  // namespace ukp
