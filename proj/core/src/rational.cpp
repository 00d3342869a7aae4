#include "ukp/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "ukp/errors.hpp"

namespace ukp {

namespace {

void require_nonnegative(const mpq_class& v) {
  if (sgn(v) < 0) {
    throw std::domain_error("Rational must stay nonnegative, got " + v.get_str());
  }
}

}  // namespace

Rational::Rational(long value) : v_(value) { require_nonnegative(v_); }

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw std::domain_error("Rational denominator must be nonzero");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
  require_nonnegative(v_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) return std::nullopt;
    Integer d(std::string(den), 10);
    if (sgn(d) == 0) return std::nullopt;
    return Rational(Integer(std::string(num), 10), d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits_only(whole) || !digits_only(frac)) return std::nullopt;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num = Integer(std::string(whole), 10) * scale + Integer(std::string(frac), 10);
    return Rational(num, scale);
  }
  if (!digits_only(text)) return std::nullopt;
  return Rational(Integer(std::string(text), 10), Integer(1));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return str();
}

Integer Rational::floor_div(const Rational& d) const {
  if (sgn(d.v_) <= 0) throw std::domain_error("floor_div by nonpositive value");
  mpq_class q = v_ / d.v_;
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer Rational::ceil_div(const Rational& d) const {
  if (sgn(d.v_) <= 0) throw std::domain_error("ceil_div by nonpositive value");
  mpq_class q = v_ / d.v_;
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational Rational::times_pow2(int k) const {
  if (k < 0) throw std::domain_error("times_pow2 expects k >= 0");
  mpq_class out;
  mpq_mul_2exp(out.get_mpq_t(), v_.get_mpq_t(), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational Rational::from_integer(const Integer& n) { return Rational(n, Integer(1)); }

Rational Rational::pow2(int exponent) {
  mpq_class out(1);
  if (exponent >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(exponent));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(-exponent));
  }
  return Rational(out);
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }

Rational operator-(const Rational& a, const Rational& b) {
  mpq_class out = a.v_ - b.v_;
  require_nonnegative(out);
  return Rational(std::move(out));
}

Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (sgn(b.v_) == 0) throw std::domain_error("Rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  require_nonnegative(v_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational operator*(const Rational& a, const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("Rational multiplier must be nonnegative");
  return Rational(mpq_class(a.v_ * mpq_class(n)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ukp
