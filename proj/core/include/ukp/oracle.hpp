#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ukp/eps_params.hpp"
#include "ukp/gluing.hpp"
#include "ukp/instance.hpp"

namespace ukp {

inline constexpr std::int64_t kDefaultOracleBudget = 1'000'000;   // DP cells
inline constexpr std::int64_t kDefaultBruteBudget = 10'000'000;   // copy vectors
inline constexpr std::int64_t kDefaultStructBudget = 1'000'000;   // selections

/// An instance whose sizes all lie on a 1/denom grid; capacity expressed
/// in the same units. Profits stay rational, so the DP below is exact.
struct GridInstance {
  std::int64_t denom = 1;
  std::int64_t cap_units = 0;
  std::vector<Item> items;
  std::vector<std::int64_t> size_units;  // parallel to items, in 1..denom
};

/// Converts an instance to grid form with denom = lcm of the size
/// denominators. Throws OracleBudgetError when denom * n exceeds the
/// budget (the DP would be too large anyway).
GridInstance to_grid(const Instance& instance,
                     std::int64_t budget_cells = kDefaultOracleBudget);
GridInstance to_grid(std::span<const Item> items,
                     std::int64_t budget_cells = kDefaultOracleBudget);

struct OracleSolution {
  Rational opt;
  SolutionMultiset witness;
};

/// Classical pseudo-polynomial table over capacity units:
/// best[w] = max(best[w-1], max_j best[w - u_j] + p_j). Exposes the whole
/// profile so quality checks can read the optimum of any sub-capacity.
class ExactDpTable {
 public:
  explicit ExactDpTable(GridInstance grid,
                        std::int64_t budget_cells = kDefaultOracleBudget);

  const Rational& best(std::int64_t units) const {
    return best_[static_cast<std::size_t>(units)];
  }
  const Rational& opt() const { return best_[best_.size() - 1]; }
  SolutionMultiset witness(std::int64_t units) const;
  const GridInstance& grid() const { return grid_; }

 private:
  GridInstance grid_;
  std::vector<Rational> best_;
  std::vector<std::int32_t> choice_;  // item picked at w, -1 = carry from w-1
};

/// Optimum and witness at full capacity.
OracleSolution exact_dp(const GridInstance& grid,
                        std::int64_t budget_cells = kDefaultOracleBudget);

/// Exhaustive search over copy vectors with at most max_copies per item,
/// pruned by remaining capacity. Budget-checked on (max_copies+1)^n.
Rational brute_force(std::span<const Item> items, std::int64_t max_copies,
                     std::int64_t budget = kDefaultBruteBudget);
Rational brute_force(const Instance& instance, std::int64_t max_copies,
                     std::int64_t budget = kDefaultBruteBudget);

/// Exhaustive optimum over structured solutions with a lower bound: at
/// most one item per glued level 0..kappa, the bundled small item at most
/// once, at least one pick from levels kappa-2..kappa+1, total size <= v.
/// Returns 0 when no such selection exists.
Rational structured_enum(const GluedLevels& glued, const std::optional<GluedItem>& aeffc,
                         const Rational& v, const EpsParams& params,
                         std::int64_t budget = kDefaultStructBudget);

}  // namespace ukp
