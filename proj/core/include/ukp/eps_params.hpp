#pragma once

#include <cstdint>
#include <vector>

#include "ukp/rational.hpp"

namespace ukp {

/// Largest supported kappa. Beyond this the index spaces (gamma_max and
/// xi0 grow like 2^kappa * kappa) no longer fit a desk-scale machine.
inline constexpr int kMaxKappa = 16;

/// Normalized accuracy parameter and the profit-interval geometry derived
/// from it. eps is rounded down to the next 2^(1-kappa) <= 1/4, the
/// threshold t separates large from small profits, and k_const is the base
/// sub-interval width; level k uses intervals [2^k t, 2^(k+1) t) split into
/// gamma_max cells of width 2^k k_const each. xi indexes a second, coarser
/// partition of [p0/4, 2 p0] used by the tuple buckets.
struct EpsParams {
  Rational eps_input;
  Rational eps;      // 2^(1-kappa)
  int kappa = 0;     // >= 3
  Rational p0;
  Rational t;        // eps * p0 / 2
  Rational k_const;  // eps * t / (4 (kappa+1))
  std::int64_t gamma_max = 0;  // 2^(kappa+1) (kappa+1)
  std::int64_t xi0 = 0;        // 7 (kappa+1) 2^(kappa+1) - 1

  Rational two_p0;
  Rational xi_base;   // 2^(kappa-2) t == p0/4
  Rational xi_width;  // 2^(kappa-2) k_const

  /// 2^k t for k in 0..kappa+1.
  const Rational& level_base(int k) const { return level_base_[static_cast<std::size_t>(k)]; }
  /// 2^k k_const for k in 0..kappa+1.
  const Rational& level_width(int k) const { return level_width_[static_cast<std::size_t>(k)]; }

  /// The per-stage loss factor 1 - eps/(4(kappa+1)) from the quality bounds.
  Rational loss_factor() const;

  std::vector<Rational> level_base_;
  std::vector<Rational> level_width_;
};

/// Sub-interval address of a large profit: p lies in
/// [2^k t + gamma 2^k k_const, 2^k t + (gamma+1) 2^k k_const).
struct IntervalIndex {
  int k = 0;
  std::int64_t gamma = 0;

  friend bool operator==(const IntervalIndex&, const IntervalIndex&) = default;
};

/// Builds EpsParams for the requested accuracy and greedy bound p0.
/// eps_input above 1/4 is clamped to 1/4; below 2^(1-kMaxKappa) it is
/// rejected as out of the supported range.
EpsParams normalize_epsilon(const Rational& eps_input, const Rational& p0);

/// Locates t <= p < 2 p0 in its sub-interval. The level is found by a
/// doubling comparison loop (at most kappa+1 steps), gamma by exact floor
/// division.
IntervalIndex interval_index(const Rational& p, const EpsParams& params);

/// Bucket index of p in the partition of [p0/4, 2 p0] into xi0+1 cells of
/// width 2^(kappa-2) k_const plus the singleton {2 p0} at xi0+1.
std::int64_t xi_index(const Rational& p, const EpsParams& params);

}  // namespace ukp
