#include <polybern/series.hpp>

#include <polybern/combinatorics.hpp>

#include <stdexcept>

namespace polybern {

TruncatedSeries::TruncatedSeries(long order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty())
    throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, long order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(long order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = Rational(1);
  return s;
}

const Rational& TruncatedSeries::coeff(long i) const {
  if (i < 0 || i > order())
    throw std::out_of_range("TruncatedSeries: coefficient index out of range");
  return coeffs_[static_cast<size_t>(i)];
}

void TruncatedSeries::set_coeff(long i, Rational c) {
  if (i < 0 || i > order())
    throw std::out_of_range("TruncatedSeries: coefficient index out of range");
  coeffs_[static_cast<size_t>(i)] = std::move(c);
}

long TruncatedSeries::valuation() const {
  for (long i = 0; i <= order(); ++i)
    if (!coeffs_[static_cast<size_t>(i)].is_zero()) return i;
  return order() + 1;
}

Rational TruncatedSeries::egf_value(long n) const {
  return Rational(factorial(n)) * coeff(n);
}

TruncatedSeries TruncatedSeries::truncated(long order) const {
  if (order > this->order())
    throw std::invalid_argument("TruncatedSeries: cannot extend truncation order");
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + order + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  long n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (long i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  long n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (long i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (long i = 0; i <= a.order(); ++i) r.coeffs_[i] = -a.coeffs_[i];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  long n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (long i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (long j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (long i = 0; i <= a.order(); ++i) r.coeffs_[i] = c * a.coeffs_[i];
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.coeffs_ == b.coeffs_;
}

TruncatedSeries u_series(long order) {
  TruncatedSeries s(order);
  // 1 - e^{-t}: coefficient of t^n is (-1)^{n+1}/n! for n >= 1.
  Rational c(1);
  for (long n = 1; n <= order; ++n) {
    c /= Rational(-n);
    s.set_coeff(n, -c);
  }
  return s;
}

TruncatedSeries exp_series(const Rational& c, long order) {
  TruncatedSeries s(order);
  Rational term(1);
  s.set_coeff(0, term);
  for (long n = 1; n <= order; ++n) {
    term = term * c / Rational(n);
    s.set_coeff(n, term);
  }
  return s;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (!g.coeff(0).is_zero())
    throw std::invalid_argument("compose: inner series must have zero constant term");
  long n = std::min(f.order(), g.order());
  TruncatedSeries gn = g.truncated(n);
  // Horner over truncated series; terms of f above n cannot reach degree <= n
  // since g has positive valuation.
  TruncatedSeries acc = TruncatedSeries::constant(f.coeff(n), n);
  for (long i = n - 1; i >= 0; --i) {
    acc = acc * gn;
    acc.set_coeff(0, acc.coeff(0) + f.coeff(i));
  }
  return acc;
}

TruncatedSeries invert(const TruncatedSeries& f) {
  if (f.coeff(0).is_zero())
    throw std::invalid_argument("invert: constant term must be nonzero");
  long n = f.order();
  TruncatedSeries r(n);
  Rational lead = Rational(1) / f.coeff(0);
  r.set_coeff(0, lead);
  for (long i = 1; i <= n; ++i) {
    Rational acc(0);
    for (long j = 1; j <= i; ++j) acc += f.coeff(j) * r.coeff(i - j);
    r.set_coeff(i, -lead * acc);
  }
  return r;
}

TruncatedSeries divide_by_valuation_power(const TruncatedSeries& f,
                                          const TruncatedSeries& u, long r) {
  if (r < 1) throw std::invalid_argument("divide_by_valuation_power: r must be >= 1");
  if (u.order() < 1 || !u.coeff(0).is_zero() || u.coeff(1).is_zero())
    throw std::invalid_argument(
        "divide_by_valuation_power: divisor must have valuation exactly 1");
  if (f.order() < r || f.valuation() < r)
    throw std::domain_error(
        "divide_by_valuation_power: dividend valuation below r, quotient is not a power series");
  long n = f.order() - r;
  if (u.order() - 1 < n)
    throw std::invalid_argument("divide_by_valuation_power: divisor order too small");

  std::vector<Rational> shifted_f;
  shifted_f.reserve(static_cast<size_t>(n) + 1);
  for (long i = r; i <= f.order(); ++i) shifted_f.push_back(f.coeff(i));

  std::vector<Rational> shifted_u;
  shifted_u.reserve(static_cast<size_t>(n) + 1);
  for (long i = 1; i <= 1 + n; ++i) shifted_u.push_back(u.coeff(i));

  TruncatedSeries unit_inv = invert(TruncatedSeries(std::move(shifted_u)));
  TruncatedSeries quotient(std::move(shifted_f));
  for (long j = 0; j < r; ++j) quotient = quotient * unit_inv;
  return quotient;
}

TruncatedSeries multiple_polylog_series(const IndexVector& indices, long order) {
  // Prefix-sum sweep: A_1(m) = m^{-k_1}, A_j(m) = m^{-k_j} sum_{m'<m} A_{j-1}(m').
  long r = indices.length();
  std::vector<Rational> a(static_cast<size_t>(order) + 1, Rational(0));
  for (long m = 1; m <= order; ++m) a[static_cast<size_t>(m)] = qpow(m, -indices[0]);
  for (long j = 1; j < r; ++j) {
    std::vector<Rational> next(static_cast<size_t>(order) + 1, Rational(0));
    Rational prefix(0);
    for (long m = 1; m <= order; ++m) {
      next[static_cast<size_t>(m)] = qpow(m, -indices[j]) * prefix;
      prefix += a[static_cast<size_t>(m)];
    }
    a.swap(next);
  }
  return TruncatedSeries(std::move(a));
}

TruncatedSeries mpb_generating_series(const IndexVector& indices, long order) {
  long r = indices.length();
  long inner = order + r;
  TruncatedSeries u = u_series(inner);
  TruncatedSeries li = multiple_polylog_series(indices, inner);
  TruncatedSeries numerator = compose(li, u);
  return divide_by_valuation_power(numerator, u, r);
}

}  // namespace polybern
