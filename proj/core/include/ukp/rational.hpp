#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ukp {

/// Arbitrary-precision integer used for multiplicities and floor divisions.
using Integer = mpz_class;

/// Exact nonnegative rational scalar.
///
/// Every profit, size, threshold and bound in the solver is held in this
/// form; no code path ever rounds. Values are kept canonical (reduced,
/// positive denominator) after every construction and operation. The GMP
/// rational type does the arithmetic; this wrapper pins down the
/// nonnegativity invariant and the few derived operations the solver needs.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long value);  // NOLINT(google-explicit-constructor) scalar literals read naturally
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  /// Parses "a/b", an integer "a", or a decimal "a.b" (read exactly as
  /// a/10^k). Returns nullopt on malformed text or a negative value.
  static std::optional<Rational> parse(std::string_view text);

  /// Canonical "num/den" form, denominator always present ("6/5", "2/1").
  std::string str() const;
  /// Human form: bare integer when the denominator is 1, else "num/den".
  std::string pretty() const;

  const Integer num() const { return v_.get_num(); }
  const Integer den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }

  /// ⌊*this / d⌋ as an integer; d must be positive.
  Integer floor_div(const Rational& d) const;
  /// ⌈*this / d⌉ as an integer; d must be positive.
  Integer ceil_div(const Rational& d) const;

  /// *this · 2^k for k ≥ 0.
  Rational times_pow2(int k) const;

  static Rational from_integer(const Integer& n);
  /// 2^(1-kappa) for kappa ≥ 1, i.e. the normalized epsilon shape.
  static Rational pow2(int exponent);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);

  friend Rational operator*(const Rational& a, const Integer& n);
  friend Rational operator*(const Integer& n, const Rational& a) { return a * n; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  /// Loses precision by design; only metering and display code may use it.
  double to_double() const { return v_.get_d(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // canonical, >= 0
};

}  // namespace ukp
