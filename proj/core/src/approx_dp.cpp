#include "ukp/approx_dp.hpp"

#include <algorithm>

#include "ukp/errors.hpp"

namespace ukp {

std::size_t remove_dominated(std::vector<TupleLevel::Bucket>& buckets,
                             std::span<const TupleEntry> arena) {
  if (buckets.empty()) return 0;
  // Buckets ascend in profit, so an entry survives iff its size is
  // strictly smaller than every kept entry to its right.
  std::size_t kept = 0;
  std::vector<TupleLevel::Bucket> out;
  out.reserve(buckets.size());
  const Rational* min_size = nullptr;
  for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {
    const Rational& size = arena[it->entry].size;
    if (min_size == nullptr || size < *min_size) {
      out.push_back(*it);
      min_size = &arena[it->entry].size;
      ++kept;
    }
  }
  std::reverse(out.begin(), out.end());
  const std::size_t removed = buckets.size() - kept;
  buckets = std::move(out);
  return removed;
}

namespace {

/// Dense bucket view of the level under construction.
class LevelScratch {
 public:
  explicit LevelScratch(std::int64_t bucket_count)
      : refs_(static_cast<std::size_t>(bucket_count), kEmpty) {}

  std::uint32_t get(std::int64_t xi) const { return refs_[static_cast<std::size_t>(xi)]; }

  void put(std::int64_t xi, std::uint32_t entry) {
    auto& slot = refs_[static_cast<std::size_t>(xi)];
    if (slot == kEmpty) occupied_.push_back(xi);
    slot = entry;
  }

  /// Sorted (xi, entry) snapshot, then clears for the next level.
  std::vector<TupleLevel::Bucket> drain() {
    std::sort(occupied_.begin(), occupied_.end());
    std::vector<TupleLevel::Bucket> out;
    out.reserve(occupied_.size());
    for (std::int64_t xi : occupied_) {
      out.push_back({xi, refs_[static_cast<std::size_t>(xi)]});
      refs_[static_cast<std::size_t>(xi)] = kEmpty;
    }
    occupied_.clear();
    return out;
  }

  static constexpr std::uint32_t kEmpty = 0xffffffffu;

 private:
  std::vector<std::uint32_t> refs_;
  std::vector<std::int64_t> occupied_;
};

}  // namespace

DpResult run_dp(const GluedLevels& glued, const EpsParams& params) {
  DpResult result;
  const int kappa = params.kappa;
  result.levels.resize(static_cast<std::size_t>(kappa) + 3);

  TupleEntry origin;
  origin.level = kappa + 2;
  result.arena.push_back(origin);  // ref 0, shared by every level

  const Rational capacity(1);
  LevelScratch scratch(params.xi0 + 2);

  std::vector<TupleLevel::Bucket> previous;  // finalized buckets of level k+1
  for (int k = kappa + 1; k >= 0; --k) {
    // Carry every surviving tuple down one level.
    for (const auto& bucket : previous) {
      scratch.put(bucket.xi, bucket.entry);
    }

    // Items of this level: the glued slots for k <= kappa, the bundled
    // small item for k == kappa+1.
    std::vector<std::uint32_t> items;
    if (k <= kappa) {
      for (const auto& slot : glued.level(k)) items.push_back(slot.ref);
    } else if (glued.aeffc_ref()) {
      items.push_back(*glued.aeffc_ref());
    }

    const bool singles_allowed = k >= kappa - 2;
    for (const std::uint32_t item_ref : items) {
      const Rational item_profit = glued.item(item_ref).profit;
      const Rational item_size = glued.item(item_ref).size;

      // Extend every non-origin tuple of the level above. Parent sizes
      // ascend along the buckets, so the first capacity miss ends the run.
      for (const auto& parent_bucket : previous) {
        const TupleEntry& parent = result.arena[parent_bucket.entry];
        Rational size = parent.size + item_size;
        if (size > capacity) break;
        Rational profit = parent.profit + item_profit;
        const std::int64_t xi = xi_index(profit, params);
        const std::uint32_t incumbent = scratch.get(xi);
        if (incumbent != LevelScratch::kEmpty &&
            size >= result.arena[incumbent].size) {
          continue;
        }
        TupleEntry entry;
        entry.profit = std::move(profit);
        entry.size = std::move(size);
        entry.level = k;
        entry.back = TupleEntry::Back::kExtend;
        entry.parent = parent_bucket.entry;
        entry.item = item_ref;
        result.arena.push_back(std::move(entry));
        ++result.tuples_created;
        scratch.put(xi, static_cast<std::uint32_t>(result.arena.size() - 1));
      }

      if (singles_allowed && item_size <= capacity) {
        const std::int64_t xi = xi_index(item_profit, params);
        const std::uint32_t incumbent = scratch.get(xi);
        if (incumbent == LevelScratch::kEmpty ||
            item_size < result.arena[incumbent].size) {
          TupleEntry entry;
          entry.profit = item_profit;
          entry.size = item_size;
          entry.level = k;
          entry.back = TupleEntry::Back::kSingle;
          entry.item = item_ref;
          result.arena.push_back(std::move(entry));
          ++result.tuples_created;
          scratch.put(xi, static_cast<std::uint32_t>(result.arena.size() - 1));
        }
      }
    }

    auto buckets = scratch.drain();
    result.dominance_removals += remove_dominated(buckets, result.arena);
    result.levels[static_cast<std::size_t>(k)].buckets = buckets;
    previous = std::move(buckets);
  }
  return result;
}

}  // namespace ukp
