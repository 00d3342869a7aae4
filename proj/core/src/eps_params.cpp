#include "ukp/eps_params.hpp"

#include "ukp/errors.hpp"

namespace ukp {

Rational EpsParams::loss_factor() const {
  return Rational(1) - eps / Rational(4 * (kappa + 1));
}

EpsParams normalize_epsilon(const Rational& eps_input, const Rational& p0) {
  if (eps_input.is_zero() || eps_input >= Rational(1)) {
    throw InvalidParameterError("epsilon must lie in (0, 1), got " + eps_input.str());
  }
  if (p0.is_zero()) {
    throw InvalidParameterError("p0 must be positive");
  }

  // Largest 2^(1-kappa) <= min(eps_input, 1/4); kappa starts at 3.
  int kappa = 3;
  Rational eps = Rational(1, 4);
  while (eps > eps_input) {
    ++kappa;
    if (kappa > kMaxKappa) {
      throw InvalidParameterError("epsilon below supported range (needs kappa <= " +
                                  std::to_string(kMaxKappa) + ")");
    }
    eps = Rational::pow2(1 - kappa);
  }

  EpsParams params;
  params.eps_input = eps_input;
  params.eps = eps;
  params.kappa = kappa;
  params.p0 = p0;
  params.t = eps * p0 / Rational(2);
  params.k_const = eps * params.t / Rational(4 * (kappa + 1));
  params.gamma_max = (std::int64_t{1} << (kappa + 1)) * (kappa + 1);
  params.xi0 = 7 * (kappa + 1) * (std::int64_t{1} << (kappa + 1)) - 1;
  params.two_p0 = p0.times_pow2(1);
  params.xi_base = params.t.times_pow2(kappa - 2);
  params.xi_width = params.k_const.times_pow2(kappa - 2);

  params.level_base_.reserve(static_cast<std::size_t>(kappa) + 2);
  params.level_width_.reserve(static_cast<std::size_t>(kappa) + 2);
  for (int k = 0; k <= kappa + 1; ++k) {
    params.level_base_.push_back(params.t.times_pow2(k));
    params.level_width_.push_back(params.k_const.times_pow2(k));
  }
  return params;
}

IntervalIndex interval_index(const Rational& p, const EpsParams& params) {
  if (p < params.t || p >= params.two_p0) {
    throw OutOfRangeError("profit " + p.str() + " outside [t, 2 p0)");
  }
  int k = 0;
  while (k < params.kappa && p >= params.level_base(k + 1)) {
    ++k;
  }
  const Integer gamma = (p - params.level_base(k)).floor_div(params.level_width(k));
  return IntervalIndex{k, static_cast<std::int64_t>(gamma.get_si())};
}

std::int64_t xi_index(const Rational& p, const EpsParams& params) {
  if (p < params.xi_base || p > params.two_p0) {
    throw OutOfRangeError("profit " + p.str() + " outside [p0/4, 2 p0]");
  }
  if (p == params.two_p0) {
    return params.xi0 + 1;
  }
  const Integer xi = (p - params.xi_base).floor_div(params.xi_width);
  return static_cast<std::int64_t>(xi.get_si());
}

}  // namespace ukp
