#pragma once

#include <polybern/rational.hpp>

#include <map>
#include <vector>

namespace polybern {

/// Sparse multivariate power series over Rational with a hard total-degree
/// cap: terms whose exponents sum past the cap are dropped by every
/// operation. Exponent vectors have fixed arity.
class MultiSeries {
 public:
  MultiSeries(int arity, int cap);

  static MultiSeries constant(const Rational& c, int arity, int cap);
  /// sum_j coeffs[j] * var_j.
  static MultiSeries linear_form(const std::vector<Rational>& coeffs, int cap);
  /// exp(sum_j coeffs[j] * var_j) up to the cap.
  static MultiSeries exp_linear_form(const std::vector<Rational>& coeffs, int cap);

  int arity() const { return arity_; }
  int cap() const { return cap_; }

  /// Zero for absent terms; exponents.size() must equal arity().
  Rational coeff(const std::vector<int>& exponents) const;
  void set_coeff(const std::vector<int>& exponents, Rational c);

  /// Stored (nonzero) terms, ordered lexicographically by exponent vector.
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  /// Multiplicative inverse; the constant term must be 1.
  MultiSeries inverse() const;

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

 private:
  int arity_;
  int cap_;
  std::map<std::vector<int>, Rational> terms_;
};

/// The full generating function of the negative-index multi-poly-Bernoulli
/// family in variables (x_1, ..., x_r, t): the product over j = 1..r of
/// 1/(e^{-x_j - ... - x_r} + e^{-t} - 1), expanded to the total-degree cap.
/// The coefficient of x_1^{a_1}...x_r^{a_r} t^n is
/// B_n^{(-a_1,...,-a_r)} / (a_1! ... a_r! n!).
MultiSeries mpb_multivariate_series(long r, int cap);

}  // namespace polybern
