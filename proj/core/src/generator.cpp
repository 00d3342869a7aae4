#include "ukp/generator.hpp"

#include <algorithm>

#include "ukp/errors.hpp"

namespace ukp {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidParameterError("next_below needs a positive bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t value;
  do {
    value = next();
  } while (value >= limit);
  return value % bound;
}

std::int64_t SplitMix64::next_in(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::string_view to_string(GenProfile profile) {
  switch (profile) {
    case GenProfile::kUniform:
      return "uniform";
    case GenProfile::kCorrelated:
      return "correlated";
    case GenProfile::kSmallHeavy:
      return "small-heavy";
  }
  return "unknown";
}

std::optional<GenProfile> profile_from_string(std::string_view name) {
  if (name == "uniform") return GenProfile::kUniform;
  if (name == "correlated") return GenProfile::kCorrelated;
  if (name == "small-heavy") return GenProfile::kSmallHeavy;
  return std::nullopt;
}

Instance generate_instance(std::size_t n, std::int64_t grid, std::uint64_t seed,
                           GenProfile profile) {
  if (n < 1) throw InvalidParameterError("generator needs n >= 1");
  if (grid < 2) throw InvalidParameterError("generator needs a grid of at least 2");

  SplitMix64 rng(seed);
  std::vector<Item> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t size_units = rng.next_in(1, grid);
    const Rational size(size_units, grid);
    Rational profit;
    switch (profile) {
      case GenProfile::kUniform:
        profit = Rational(rng.next_in(1, grid), grid);
        break;
      case GenProfile::kCorrelated: {
        const std::int64_t delta = rng.next_in(-10, 10);
        profit = size * Rational(100 + delta, 100);
        profit = std::min(profit, Rational(1));
        break;
      }
      case GenProfile::kSmallHeavy: {
        if (rng.next_below(5) < 4) {
          profit = Rational(rng.next_in(1, std::max<std::int64_t>(1, grid / 16)), grid);
        } else {
          profit = Rational(rng.next_in(1, grid), grid);
        }
        break;
      }
    }
    items.push_back(Item{std::move(profit), size, i});
  }
  return Instance(std::move(items));
}

}  // namespace ukp
