#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ukp/rational.hpp"

namespace ukp {

/// One knapsack item. Profit and size both lie in (0, 1]; the index is the
/// item's ordinal in the input list (indices survive filtering, so they can
/// be non-contiguous after the loader drops oversized items).
struct Item {
  Rational profit;
  Rational size;
  std::size_t index = 0;

  Rational efficiency() const { return profit / size; }
};

/// An unbounded-knapsack instance with the capacity normalized to 1.
/// Construction validates the per-item invariants and rejects empty input.
class Instance {
 public:
  explicit Instance(std::vector<Item> items);

  std::span<const Item> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const Item& at(std::size_t position) const { return items_[position]; }

 private:
  std::vector<Item> items_;
};

/// A solution certificate: multiplicity per original item index, with the
/// totals cached. Totals are maintained exactly and can be re-derived from
/// the counts for verification.
class SolutionMultiset {
 public:
  SolutionMultiset() = default;

  /// Adds `count` copies of the item (count must be positive).
  void add(const Item& item, const Integer& count);
  void add_one(const Item& item) { add(item, Integer(1)); }
  /// Folds another multiset in; totals stay exact.
  void merge(const SolutionMultiset& other);

  const std::map<std::size_t, Integer>& counts() const { return counts_; }
  const Rational& total_profit() const { return total_profit_; }
  const Rational& total_size() const { return total_size_; }
  bool empty() const { return counts_.empty(); }

  /// Recomputes both totals from the counts against the instance and
  /// checks them against the cached values and the capacity.
  bool consistent_with(const Instance& instance) const;

 private:
  std::map<std::size_t, Integer> counts_;
  Rational total_profit_;
  Rational total_size_;
};

}  // namespace ukp
