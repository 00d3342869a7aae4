#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ukp/instance.hpp"

namespace ukp {

/// SplitMix64 (Steele, Lea & Flood's mix function): tiny, fully specified
/// and stable across platforms, so generated instances are reproducible
/// bit-for-bit from (n, grid, seed, profile) alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) via rejection sampling (no modulo bias).
  std::uint64_t next_below(std::uint64_t bound);
  /// Uniform in [lo, hi] inclusive.
  std::int64_t next_in(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

enum class GenProfile { kUniform, kCorrelated, kSmallHeavy };

std::string_view to_string(GenProfile profile);
std::optional<GenProfile> profile_from_string(std::string_view name);

/// Deterministic instance generation on the 1/grid size lattice.
///   uniform:     profit and size both uniform on {1/grid, ..., grid/grid}
///   correlated:  profit = size * (1 + d/100) for d in [-10, 10], capped at 1
///   small-heavy: 80% of items get profits in the bottom 1/16 of the grid
Instance generate_instance(std::size_t n, std::int64_t grid, std::uint64_t seed,
                           GenProfile profile);

}  // namespace ukp
