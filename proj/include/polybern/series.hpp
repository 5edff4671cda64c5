#pragma once

#include <polybern/index_vector.hpp>
#include <polybern/rational.hpp>

#include <vector>

namespace polybern {

/// Univariate formal power series over Rational truncated at a fixed order:
/// coefficients of t^0 .. t^N are kept, everything above is dropped.
/// Immutable value semantics; arithmetic truncates to the minimum order of
/// the operands.
class TruncatedSeries {
 public:
  /// Zero series of the given order (order >= 0).
  explicit TruncatedSeries(long order);
  /// Takes ownership of the coefficient list; order = size - 1.
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries constant(const Rational& c, long order);
  /// The series t.
  static TruncatedSeries identity(long order);

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& coeff(long i) const;
  void set_coeff(long i, Rational c);

  /// Smallest i with a nonzero coefficient, or order()+1 for the zero series.
  long valuation() const;

  /// n! * coeff(n): the value an exponential generating function stores at n.
  Rational egf_value(long n) const;

  TruncatedSeries truncated(long order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  /// Cauchy product at the common truncation order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

/// 1 - e^{-t} to the given order: constant term 0, valuation exactly 1.
TruncatedSeries u_series(long order);

/// e^{c t} to the given order.
TruncatedSeries exp_series(const Rational& c, long order);

/// f(g(t)) at the common truncation order; g must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplicative inverse; the constant term must be nonzero.
TruncatedSeries invert(const TruncatedSeries& f);

/// f / u^r for u of valuation exactly 1 and f of valuation >= r, as a series
/// of order order(f) - r. Requires r >= 1 and order(u) > order(f) - r.
TruncatedSeries divide_by_valuation_power(const TruncatedSeries& f,
                                          const TruncatedSeries& u, long r);

/// z-series of the multiple polylogarithm with the given upper indices: the
/// coefficient of z^M is the nested sum over 0 < m_1 < ... < m_{r-1} < M of
/// 1/(m_1^{k_1} ... m_{r-1}^{k_{r-1}} M^{k_r}), computed by one prefix-sum
/// sweep per index. Indices may be any integers.
TruncatedSeries multiple_polylog_series(const IndexVector& indices, long order);

/// Exponential generating series of B_n^{(k_1,...,k_r)} up to t^order:
/// the polylogarithm evaluated at 1 - e^{-t}, divided by (1 - e^{-t})^r.
TruncatedSeries mpb_generating_series(const IndexVector& indices, long order);

}  // namespace polybern
