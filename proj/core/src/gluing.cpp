#include "ukp/gluing.hpp"

#include <algorithm>

#include "ukp/errors.hpp"

namespace ukp {

std::uint32_t GluedLevels::add_item(GluedItem item) {
  arena_.push_back(std::move(item));
  return static_cast<std::uint32_t>(arena_.size() - 1);
}

void GluedLevels::place(int k, std::int64_t gamma, std::uint32_t ref) {
  auto& level = levels_[static_cast<std::size_t>(k)];
  auto it = std::lower_bound(level.begin(), level.end(), gamma,
                             [](const Slot& s, std::int64_t g) { return s.gamma < g; });
  if (it != level.end() && it->gamma == gamma) {
    it->ref = ref;
  } else {
    level.insert(it, Slot{gamma, ref});
  }
}

std::uint32_t GluedLevels::install_aeffc(GluedItem aeffc) {
  aeffc_ = add_item(std::move(aeffc));
  return *aeffc_;
}

const GluedItem* GluedLevels::find(int k, std::int64_t gamma) const {
  auto ref = find_ref(k, gamma);
  return ref ? &arena_[*ref] : nullptr;
}

std::optional<std::uint32_t> GluedLevels::find_ref(int k, std::int64_t gamma) const {
  const auto& level = levels_[static_cast<std::size_t>(k)];
  auto it = std::lower_bound(level.begin(), level.end(), gamma,
                             [](const Slot& s, std::int64_t g) { return s.gamma < g; });
  if (it == level.end() || it->gamma != gamma) return std::nullopt;
  return it->ref;
}

SolutionMultiset GluedLevels::unglue(std::uint32_t ref) const {
  SolutionMultiset out;
  std::vector<std::uint32_t> stack{ref};
  while (!stack.empty()) {
    const std::uint32_t cur = stack.back();
    stack.pop_back();
    const GluedItem& node = arena_[cur];
    if (const auto* leaf = std::get_if<LeafSource>(&node.provenance)) {
      out.add_one(leaf->base);
    } else if (const auto* pair = std::get_if<PairSource>(&node.provenance)) {
      stack.push_back(pair->left);
      stack.push_back(pair->right);
    } else {
      const auto& bundle = std::get<BundleSource>(node.provenance);
      out.add(bundle.base, bundle.copies);
    }
  }
  return out;
}

std::optional<GluedItem> glue(const GluedItem& a, const GluedItem& b, std::uint32_t left,
                              std::uint32_t right) {
  Rational size = a.size + b.size;
  if (size > Rational(1)) return std::nullopt;
  GluedItem out;
  out.profit = a.profit + b.profit;
  out.size = std::move(size);
  out.level = std::max(a.level, b.level) + 1;
  out.provenance = PairSource{left, right};
  return out;
}

GluedLevels build_glued_sets(const ReducedLargeSet& reduced, const EpsParams& params,
                             GlueBuildStats* stats, std::vector<GluedItem>* candidate_sink) {
  GluedLevels levels(params.kappa);

  // Seed every level with its reduced-set original as the incumbent.
  for (int k = 0; k <= params.kappa; ++k) {
    for (const auto& slot : reduced.level(k)) {
      GluedItem seed;
      seed.profit = slot.item.profit;
      seed.size = slot.item.size;
      seed.level = k;
      seed.provenance = LeafSource{slot.item};
      levels.place(k, slot.gamma, levels.add_item(std::move(seed)));
    }
  }

  for (int k = 0; k + 1 <= params.kappa; ++k) {
    // level(k) is final here; winners land one level up only.
    const auto slots = levels.level(k);
    const std::size_t width = slots.size();
    for (std::size_t i = 0; i < width; ++i) {
      for (std::size_t j = i; j < width; ++j) {
        const GluedItem& a = levels.item(slots[i].ref);
        const GluedItem& b = levels.item(slots[j].ref);
        auto candidate = glue(a, b, slots[i].ref, slots[j].ref);
        if (!candidate) continue;
        if (stats != nullptr) ++stats->glue_ops;
        if (candidate_sink != nullptr) candidate_sink->push_back(*candidate);
        const IntervalIndex where = interval_index(candidate->profit, params);
        if (where.k != k + 1) {
          throw SolverError("glued profit escaped its level");
        }
        const GluedItem* incumbent = levels.find(where.k, where.gamma);
        if (incumbent == nullptr || candidate->size < incumbent->size) {
          levels.place(where.k, where.gamma, levels.add_item(std::move(*candidate)));
        }
      }
    }
  }
  return levels;
}

std::optional<GluedItem> build_aeffc(const Item& a_eff, const EpsParams& params) {
  const Rational quarter = params.p0 / Rational(4);
  const Integer copies = quarter.ceil_div(a_eff.profit);
  Rational size = a_eff.size * copies;
  if (size > Rational(1)) return std::nullopt;
  GluedItem out;
  out.profit = a_eff.profit * copies;
  out.size = std::move(size);
  out.level = params.kappa + 1;
  out.provenance = BundleSource{a_eff, copies};
  return out;
}

}  // namespace ukp
