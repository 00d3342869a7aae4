#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ukp/eps_params.hpp"
#include "ukp/instance.hpp"
#include "ukp/preprocess.hpp"

namespace ukp {

/// Provenance of a glued item: a single reduced-set item, a pair of
/// previously built glued items (arena references), or a bundle of copies
/// of the most efficient small item.
struct LeafSource {
  Item base;
};
struct PairSource {
  std::uint32_t left;
  std::uint32_t right;
};
struct BundleSource {
  Item base;
  Integer copies;
};
using Provenance = std::variant<LeafSource, PairSource, BundleSource>;

/// An item of the glued set: exact profit/size sums over its provenance
/// leaves, tagged with the dyadic profit level it belongs to.
struct GluedItem {
  Rational profit;
  Rational size;
  int level = 0;
  Provenance provenance;
};

/// The glued level structure: for k = 0..kappa the per-sub-interval
/// smallest glued item, plus (once installed) the bundled small item at
/// level kappa+1. All items live in one arena so pair provenance can be
/// walked without recomputation; finished levels are immutable.
class GluedLevels {
 public:
  struct Slot {
    std::int64_t gamma;
    std::uint32_t ref;
  };

  explicit GluedLevels(int kappa) : levels_(static_cast<std::size_t>(kappa) + 1) {}

  int kappa() const { return static_cast<int>(levels_.size()) - 1; }
  std::span<const Slot> level(int k) const { return levels_[static_cast<std::size_t>(k)]; }
  const GluedItem& item(std::uint32_t ref) const { return arena_[ref]; }
  std::size_t arena_size() const { return arena_.size(); }

  const std::optional<std::uint32_t>& aeffc_ref() const { return aeffc_; }
  const GluedItem* aeffc() const { return aeffc_ ? &arena_[*aeffc_] : nullptr; }

  /// Adds an item to the arena without placing it in a level (pair
  /// provenance targets, test setup).
  std::uint32_t add_item(GluedItem item);
  /// Places an arena item into slot (k, gamma), replacing any incumbent.
  void place(int k, std::int64_t gamma, std::uint32_t ref);
  std::uint32_t install_aeffc(GluedItem aeffc);

  /// Expands an item back into original-item multiplicities. Totals equal
  /// the item's profit and size exactly.
  SolutionMultiset unglue(std::uint32_t ref) const;

  /// Per-slot lookup; nullptr when the slot is empty.
  const GluedItem* find(int k, std::int64_t gamma) const;
  std::optional<std::uint32_t> find_ref(int k, std::int64_t gamma) const;

 private:
  std::vector<GluedItem> arena_;
  std::vector<std::vector<Slot>> levels_;  // sorted by gamma
  std::optional<std::uint32_t> aeffc_;
};

/// Combines two items of the same level when their total size fits the
/// knapsack; the result sits one level up. left/right are the operands'
/// arena references, recorded as provenance.
std::optional<GluedItem> glue(const GluedItem& a, const GluedItem& b, std::uint32_t left,
                              std::uint32_t right);

struct GlueBuildStats {
  std::uint64_t glue_ops = 0;  // feasible pair merges constructed
};

/// Iterative pairwise gluing of the reduced large set into levels
/// 0..kappa. When candidate_sink is non-null every candidate considered
/// for a slot is also appended there (slot-minimality checks).
GluedLevels build_glued_sets(const ReducedLargeSet& reduced, const EpsParams& params,
                             GlueBuildStats* stats = nullptr,
                             std::vector<GluedItem>* candidate_sink = nullptr);

/// Bundles ceil((p0/4) / profit) copies of the most efficient small item
/// into one level-(kappa+1) item, when they fit the knapsack together.
std::optional<GluedItem> build_aeffc(const Item& a_eff, const EpsParams& params);

}  // namespace ukp
