#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace polybern {

using Integer = mpz_class;

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator. All arithmetic is exact; division by zero throws.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long value) : v_(value) {}          // NOLINT(runtime/explicit)
  Rational(const Integer& value) : v_(value) {}  // NOLINT(runtime/explicit)
  /// Accepts unevaluated gmpxx integer expressions (a*b, -a, ...) directly.
  template <class U>
  Rational(const __gmp_expr<mpz_t, U>& value) : v_(Integer(value)) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Requires is_integer().
  Integer to_integer() const {
    if (!is_integer())
      throw std::domain_error("Rational: " + str() + " is not an integer");
    return v_.get_num();
  }

  /// "p/q" with the sign on the numerator, or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  /// Parses "p" or "p/q" (optional leading '-'); result is canonicalized.
  static Rational parse(const std::string& text);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
}

}  // namespace polybern
