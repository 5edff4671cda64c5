#include <polybern/multi_series.hpp>

#include <polybern/combinatorics.hpp>

#include <numeric>
#include <stdexcept>

namespace polybern {

namespace {

int total_degree(const std::vector<int>& exponents) {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

}  // namespace

MultiSeries::MultiSeries(int arity, int cap) : arity_(arity), cap_(cap) {
  if (arity < 1) throw std::invalid_argument("MultiSeries: arity must be >= 1");
  if (cap < 0) throw std::invalid_argument("MultiSeries: negative cap");
}

MultiSeries MultiSeries::constant(const Rational& c, int arity, int cap) {
  MultiSeries s(arity, cap);
  if (!c.is_zero()) s.terms_[std::vector<int>(static_cast<size_t>(arity), 0)] = c;
  return s;
}

MultiSeries MultiSeries::linear_form(const std::vector<Rational>& coeffs, int cap) {
  MultiSeries s(static_cast<int>(coeffs.size()), cap);
  if (cap < 1) return s;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    std::vector<int> e(coeffs.size(), 0);
    e[j] = 1;
    s.terms_[std::move(e)] = coeffs[j];
  }
  return s;
}

MultiSeries MultiSeries::exp_linear_form(const std::vector<Rational>& coeffs, int cap) {
  MultiSeries acc = constant(Rational(1), static_cast<int>(coeffs.size()), cap);
  MultiSeries line = linear_form(coeffs, cap);
  MultiSeries power = constant(Rational(1), static_cast<int>(coeffs.size()), cap);
  for (int i = 1; i <= cap; ++i) {
    power = power * line;
    if (power.terms_.empty()) break;
    MultiSeries term(power.arity_, power.cap_);
    for (const auto& [e, c] : power.terms_)
      term.terms_[e] = c / Rational(factorial(i));
    acc = acc + term;
  }
  return acc;
}

Rational MultiSeries::coeff(const std::vector<int>& exponents) const {
  if (static_cast<int>(exponents.size()) != arity_)
    throw std::invalid_argument("MultiSeries: exponent arity mismatch");
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::set_coeff(const std::vector<int>& exponents, Rational c) {
  if (static_cast<int>(exponents.size()) != arity_)
    throw std::invalid_argument("MultiSeries: exponent arity mismatch");
  if (total_degree(exponents) > cap_) return;
  if (c.is_zero())
    terms_.erase(exponents);
  else
    terms_[exponents] = std::move(c);
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  if (a.arity_ != b.arity_ || a.cap_ != b.cap_)
    throw std::invalid_argument("MultiSeries: shape mismatch");
  MultiSeries r = a;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = r.terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
  if (a.arity_ != b.arity_ || a.cap_ != b.cap_)
    throw std::invalid_argument("MultiSeries: shape mismatch");
  MultiSeries r = a;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = r.terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  if (a.arity_ != b.arity_ || a.cap_ != b.cap_)
    throw std::invalid_argument("MultiSeries: shape mismatch");
  MultiSeries r(a.arity_, a.cap_);
  std::vector<int> e(static_cast<size_t>(a.arity_));
  for (const auto& [ea, ca] : a.terms_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > a.cap_) continue;
      for (size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultiSeries MultiSeries::inverse() const {
  std::vector<int> origin(static_cast<size_t>(arity_), 0);
  if (coeff(origin) != Rational(1))
    throw std::invalid_argument("MultiSeries: inverse requires constant term 1");
  // 1/(1 - g) = sum g^i for g = 1 - this (valuation >= 1, so g^i dies at cap).
  MultiSeries g = constant(Rational(1), arity_, cap_) - *this;
  MultiSeries acc = constant(Rational(1), arity_, cap_);
  MultiSeries power = constant(Rational(1), arity_, cap_);
  for (int i = 1; i <= cap_; ++i) {
    power = power * g;
    if (power.terms_.empty()) break;
    acc = acc + power;
  }
  return acc;
}

MultiSeries mpb_multivariate_series(long r, int cap) {
  if (r < 1) throw std::invalid_argument("mpb_multivariate_series: r must be >= 1");
  int arity = static_cast<int>(r) + 1;
  std::vector<int> origin(static_cast<size_t>(arity), 0);
  MultiSeries product = MultiSeries::constant(Rational(1), arity, cap);
  for (long j = 1; j <= r; ++j) {
    // e^{-x_j - ... - x_r} + e^{-t} - 1
    std::vector<Rational> tail(static_cast<size_t>(arity), Rational(0));
    for (long v = j; v <= r; ++v) tail[static_cast<size_t>(v - 1)] = Rational(-1);
    std::vector<Rational> time_var(static_cast<size_t>(arity), Rational(0));
    time_var.back() = Rational(-1);
    MultiSeries factor = MultiSeries::exp_linear_form(tail, cap) +
                         MultiSeries::exp_linear_form(time_var, cap) -
                         MultiSeries::constant(Rational(1), arity, cap);
    if (factor.coeff(origin) != Rational(1))
      throw std::logic_error("mpb_multivariate_series: factor constant term is not 1");
    product = product * factor;
  }
  return product.inverse();
}

}  // namespace polybern
