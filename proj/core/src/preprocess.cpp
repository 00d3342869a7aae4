#include "ukp/preprocess.hpp"

#include <algorithm>
#include <unordered_map>

#include "ukp/errors.hpp"

namespace ukp {

GreedyBound greedy_p0(const Instance& instance) {
  auto items = instance.items();
  const Item* best = &items[0];
  for (const Item& item : items.subspan(1)) {
    // Cross-multiplied comparison; ties keep the earlier item.
    if (item.profit * best->size > best->profit * item.size) {
      best = &item;
    }
  }
  GreedyBound bound;
  bound.item = *best;
  bound.copies = Rational(1).floor_div(best->size);
  bound.p0 = best->profit * bound.copies;
  return bound;
}

Partition partition_items(const Instance& instance, const EpsParams& params) {
  Partition partition;
  const Item* best_small = nullptr;
  for (const Item& item : instance.items()) {
    if (!partition.two_p0_item && item.profit == params.two_p0) {
      partition.two_p0_item = item;
    }
    if (item.profit >= params.t) {
      partition.large.push_back(item);
    } else if (best_small == nullptr ||
               item.profit * best_small->size > best_small->profit * item.size) {
      best_small = &item;
    }
  }
  if (best_small != nullptr) {
    partition.small_best = *best_small;
  }
  return partition;
}

const Item* ReducedLargeSet::find(int k, std::int64_t gamma) const {
  const auto& slots = levels_[static_cast<std::size_t>(k)];
  auto it = std::lower_bound(slots.begin(), slots.end(), gamma,
                             [](const Slot& s, std::int64_t g) { return s.gamma < g; });
  if (it == slots.end() || it->gamma != gamma) return nullptr;
  return &it->item;
}

std::vector<Item> ReducedLargeSet::all_items() const {
  std::vector<Item> out;
  out.reserve(count_);
  for (const auto& level : levels_) {
    for (const Slot& slot : level) out.push_back(slot.item);
  }
  return out;
}

ReducedLargeSet reduce_large(std::span<const Item> large, const EpsParams& params) {
  ReducedLargeSet reduced(params.kappa);
  std::vector<std::unordered_map<std::int64_t, Item>> slots(
      static_cast<std::size_t>(params.kappa) + 1);
  for (const Item& item : large) {
    const IntervalIndex where = interval_index(item.profit, params);
    auto& level = slots[static_cast<std::size_t>(where.k)];
    auto [it, inserted] = level.try_emplace(where.gamma, item);
    if (!inserted && item.size < it->second.size) {
      it->second = item;
    }
  }
  for (std::size_t k = 0; k < slots.size(); ++k) {
    auto& level = reduced.levels_[k];
    level.reserve(slots[k].size());
    for (auto& [gamma, item] : slots[k]) {
      level.push_back({gamma, std::move(item)});
    }
    std::sort(level.begin(), level.end(),
              [](const ReducedLargeSet::Slot& a, const ReducedLargeSet::Slot& b) {
                return a.gamma < b.gamma;
              });
    reduced.count_ += level.size();
  }
  return reduced;
}

}  // namespace ukp
