#include "ukp/oracle.hpp"

#include <algorithm>

#include "ukp/errors.hpp"

namespace ukp {

GridInstance to_grid(const Instance& instance, std::int64_t budget_cells) {
  return to_grid(instance.items(), budget_cells);
}

GridInstance to_grid(std::span<const Item> items, std::int64_t budget_cells) {
  Integer denom(1);
  for (const Item& item : items) {
    mpz_class lcm_out;
    mpz_lcm(lcm_out.get_mpz_t(), denom.get_mpz_t(), item.size.den().get_mpz_t());
    denom = lcm_out;
    if (!denom.fits_slong_p() ||
        denom.get_si() > budget_cells) {
      throw OracleBudgetError("size grid " + denom.get_str() + " exceeds the oracle budget");
    }
  }
  GridInstance grid;
  grid.denom = denom.get_si();
  grid.cap_units = grid.denom;
  if (grid.denom * static_cast<std::int64_t>(items.size()) > budget_cells) {
    throw OracleBudgetError("oracle table of " +
                            std::to_string(grid.denom * static_cast<std::int64_t>(items.size())) +
                            " cells exceeds the budget");
  }
  grid.items.assign(items.begin(), items.end());
  grid.size_units.reserve(items.size());
  const Rational unit(Integer(1), denom);
  for (const Item& item : items) {
    const Integer units = item.size.floor_div(unit);
    grid.size_units.push_back(units.get_si());
  }
  return grid;
}

ExactDpTable::ExactDpTable(GridInstance grid, std::int64_t budget_cells)
    : grid_(std::move(grid)) {
  const auto n = static_cast<std::int64_t>(grid_.items.size());
  if (grid_.cap_units < 0 || grid_.cap_units * std::max<std::int64_t>(n, 1) > budget_cells) {
    throw OracleBudgetError("oracle table exceeds the configured budget");
  }
  best_.assign(static_cast<std::size_t>(grid_.cap_units) + 1, Rational(0));
  choice_.assign(best_.size(), -1);
  for (std::int64_t w = 1; w <= grid_.cap_units; ++w) {
    Rational best = best_[static_cast<std::size_t>(w - 1)];
    std::int32_t pick = -1;
    for (std::size_t j = 0; j < grid_.items.size(); ++j) {
      const std::int64_t u = grid_.size_units[j];
      if (u > w) continue;
      Rational value = best_[static_cast<std::size_t>(w - u)] + grid_.items[j].profit;
      if (value > best) {
        best = std::move(value);
        pick = static_cast<std::int32_t>(j);
      }
    }
    best_[static_cast<std::size_t>(w)] = std::move(best);
    choice_[static_cast<std::size_t>(w)] = pick;
  }
}

SolutionMultiset ExactDpTable::witness(std::int64_t units) const {
  SolutionMultiset out;
  std::int64_t w = units;
  while (w > 0) {
    const std::int32_t pick = choice_[static_cast<std::size_t>(w)];
    if (pick < 0) {
      --w;
      continue;
    }
    out.add_one(grid_.items[static_cast<std::size_t>(pick)]);
    w -= grid_.size_units[static_cast<std::size_t>(pick)];
  }
  return out;
}

OracleSolution exact_dp(const GridInstance& grid, std::int64_t budget_cells) {
  ExactDpTable table(grid, budget_cells);
  OracleSolution out;
  out.opt = table.opt();
  out.witness = table.witness(grid.cap_units);
  return out;
}

namespace {

void brute_force_rec(std::span<const Item> items, std::size_t j, std::int64_t max_copies,
                     const Rational& room, const Rational& profit, Rational& best) {
  if (j == items.size()) {
    if (profit > best) best = profit;
    return;
  }
  const Item& item = items[j];
  Rational taken_profit = profit;
  Rational taken_room = room;
  std::int64_t copies = 0;
  while (true) {
    brute_force_rec(items, j + 1, max_copies, taken_room, taken_profit, best);
    if (copies == max_copies || item.size > taken_room) break;
    taken_room -= item.size;
    taken_profit += item.profit;
    ++copies;
  }
}

}  // namespace

Rational brute_force(std::span<const Item> items, std::int64_t max_copies, std::int64_t budget) {
  if (max_copies < 0) throw InvalidParameterError("max_copies must be nonnegative");
  double space = 1.0;
  for (std::size_t j = 0; j < items.size(); ++j) {
    space *= static_cast<double>(max_copies + 1);
    if (space > static_cast<double>(budget)) {
      throw OracleBudgetError("brute-force search space exceeds the budget");
    }
  }
  Rational best(0);
  brute_force_rec(items, 0, max_copies, Rational(1), Rational(0), best);
  return best;
}

Rational brute_force(const Instance& instance, std::int64_t max_copies, std::int64_t budget) {
  return brute_force(instance.items(), max_copies, budget);
}

namespace {

struct StructuredPick {
  Rational profit;
  Rational size;
  bool high;  // counts toward the lower-bound requirement
};

void structured_rec(const std::vector<std::vector<StructuredPick>>& choices, std::size_t level,
                    const Rational& v, const Rational& size, const Rational& profit, bool has_high,
                    bool any_pick, Rational& best, bool& found) {
  if (level == choices.size()) {
    if (any_pick && has_high) {
      if (!found || profit > best) {
        best = profit;
        found = true;
      }
    }
    return;
  }
  structured_rec(choices, level + 1, v, size, profit, has_high, any_pick, best, found);
  for (const StructuredPick& pick : choices[level]) {
    Rational next_size = size + pick.size;
    if (next_size > v) continue;
    structured_rec(choices, level + 1, v, next_size, profit + pick.profit,
                   has_high || pick.high, true, best, found);
  }
}

}  // namespace

Rational structured_enum(const GluedLevels& glued, const std::optional<GluedItem>& aeffc,
                         const Rational& v, const EpsParams& params, std::int64_t budget) {
  std::vector<std::vector<StructuredPick>> choices;
  double space = 2.0;
  for (int k = 0; k <= params.kappa; ++k) {
    std::vector<StructuredPick> level;
    for (const auto& slot : glued.level(k)) {
      const GluedItem& item = glued.item(slot.ref);
      level.push_back({item.profit, item.size, k >= params.kappa - 2});
    }
    space *= static_cast<double>(level.size() + 1);
    if (space > static_cast<double>(budget)) {
      throw OracleBudgetError("structured enumeration exceeds the budget");
    }
    choices.push_back(std::move(level));
  }
  if (aeffc) {
    choices.push_back({{aeffc->profit, aeffc->size, true}});
  }
  Rational best(0);
  bool found = false;
  structured_rec(choices, 0, v, Rational(0), Rational(0), false, false, best, found);
  return found ? best : Rational(0);
}

}  // namespace ukp
