#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ukp/eps_params.hpp"
#include "ukp/instance.hpp"

namespace ukp {

/// Greedy 2-approximation: the most efficient item packed as often as it
/// fits. p0 >= OPT/2.
struct GreedyBound {
  Item item;
  Integer copies;
  Rational p0;
};

GreedyBound greedy_p0(const Instance& instance);

/// Items split by the profit threshold t. small_best is the most efficient
/// small item when any exists; two_p0_item is set when some item's profit
/// equals 2 p0 exactly (that item alone is an optimal solution).
struct Partition {
  std::vector<Item> large;
  std::optional<Item> small_best;
  std::optional<Item> two_p0_item;
};

Partition partition_items(const Instance& instance, const EpsParams& params);

/// Result of the one-pass reduction: for each profit sub-interval (k, gamma)
/// the smallest-size item whose profit falls there. Stored sparsely per
/// level, sorted by gamma.
class ReducedLargeSet {
 public:
  struct Slot {
    std::int64_t gamma;
    Item item;
  };

  explicit ReducedLargeSet(int kappa) : levels_(static_cast<std::size_t>(kappa) + 1) {}

  std::span<const Slot> level(int k) const { return levels_[static_cast<std::size_t>(k)]; }
  int level_count() const { return static_cast<int>(levels_.size()); }
  std::size_t size() const { return count_; }

  const Item* find(int k, std::int64_t gamma) const;
  std::vector<Item> all_items() const;

 private:
  friend ReducedLargeSet reduce_large(std::span<const Item>, const EpsParams&);
  std::vector<std::vector<Slot>> levels_;  // sorted by gamma
  std::size_t count_ = 0;
};

/// One pass over the large items, keeping per sub-interval the smallest
/// item seen (first occurrence wins ties).
ReducedLargeSet reduce_large(std::span<const Item> large, const EpsParams& params);

}  // namespace ukp
