#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ukp/eps_params.hpp"
#include "ukp/gluing.hpp"

namespace ukp {

/// One DP tuple (profit, size, level) plus its backtracking record. An
/// entry either is the all-levels origin (0,0), extends a parent tuple of
/// a higher level by one glued item, or is a bare singleton of a glued
/// item (allowed for levels >= kappa-2 only). Entries are immutable once
/// created; replaced bucket incumbents simply stop being referenced.
struct TupleEntry {
  enum class Back : std::uint8_t { kOrigin, kExtend, kSingle };

  Rational profit;
  Rational size;
  int level = 0;  // level the entry was created at
  Back back = Back::kOrigin;
  std::uint32_t parent = 0;  // kExtend: arena ref of the parent entry
  std::uint32_t item = 0;    // kExtend/kSingle: glued arena ref
};

/// Finalized tuple set of one DP level: per profit bucket at most one
/// entry, sorted by bucket index, dominance-free; the origin tuple is
/// carried separately.
struct TupleLevel {
  struct Bucket {
    std::int64_t xi;
    std::uint32_t entry;
  };

  std::vector<Bucket> buckets;  // ascending xi
  std::size_t occupied() const { return buckets.size(); }
};

/// In-place dominance removal over a bucket-sorted level: a single
/// right-to-left sweep keeps an entry only when its size is strictly
/// below the minimum seen so far. Returns the number of removals.
std::size_t remove_dominated(std::vector<TupleLevel::Bucket>& buckets,
                             std::span<const TupleEntry> arena);

struct DpResult {
  std::vector<TupleEntry> arena;   // arena[0] is the shared origin
  std::vector<TupleLevel> levels;  // indexed by k = 0..kappa+2
  std::uint64_t tuples_created = 0;
  std::uint64_t dominance_removals = 0;

  const TupleLevel& level(int k) const { return levels[static_cast<std::size_t>(k)]; }
  const TupleLevel& final_level() const { return levels[0]; }
  static constexpr std::uint32_t kOriginRef = 0;
};

/// Runs the level-by-level approximate dynamic program over the glued
/// sets (level kappa+1 holds the bundled small item when present). Every
/// surviving tuple is carried down one level; each level-k item extends
/// every non-origin tuple of level k+1 under the capacity guard, and for
/// k >= kappa-2 additionally enters as a singleton. A challenger takes a
/// bucket only when strictly smaller in size.
DpResult run_dp(const GluedLevels& glued, const EpsParams& params);

}  // namespace ukp
