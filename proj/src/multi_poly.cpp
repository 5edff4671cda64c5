#include <polybern/multi_poly.hpp>

#include <polybern/combinatorics.hpp>
#include <polybern/fault_injection.hpp>
#include <polybern/poly_bernoulli.hpp>
#include <polybern/series.hpp>

#include "internal.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace polybern {

namespace {

std::mutex alpha_mutex;
std::map<std::vector<long>, AlphaVector>& alpha_cache() {
  static std::map<std::vector<long>, AlphaVector> cache;
  return cache;
}

std::mutex mpb_mutex;
std::map<std::pair<std::vector<long>, long>, MpbValue>& mpb_cache() {
  static std::map<std::pair<std::vector<long>, long>, MpbValue> cache;
  return cache;
}

AlphaVector compute_alpha(const std::vector<long>& mags) {
  long weight = std::accumulate(mags.begin(), mags.end(), 0L);
  // alpha[0] is the all-zero indicator; alpha[1..weight] the coefficients.
  std::vector<Integer> alpha(static_cast<size_t>(weight) + 1, Integer(0));
  bool all_zero_prefix = (mags[0] == 0);
  alpha[0] = all_zero_prefix ? 1 : 0;
  for (long l = 1; l <= mags[0]; ++l) {
    Integer v = factorial(l) * stirling2(mags[0], l);
    if ((l + mags[0]) % 2 != 0) v = -v;
    alpha[static_cast<size_t>(l)] = std::move(v);
  }

  long filled = mags[0];  // weight of the processed prefix
  for (size_t j = 1; j < mags.size(); ++j) {
    long length = static_cast<long>(j) + 1;  // prefix length after the append
    for (long step = 0; step < mags[j]; ++step) {
      ++filled;
      for (long l = filled; l >= 1; --l) {
        alpha[static_cast<size_t>(l)] =
            (l + length - 1) * alpha[static_cast<size_t>(l - 1)] -
            l * alpha[static_cast<size_t>(l)];
      }
      all_zero_prefix = false;
      alpha[0] = 0;
    }
  }

  AlphaVector result;
  result.magnitudes = mags;
  result.weight = weight;
  result.coefficients.assign(alpha.begin() + 1, alpha.end());
  return result;
}

void apply_alpha_fault(AlphaVector& av) {
  const auto& f = detail::alpha_fault();
  if (!f || f->magnitudes != av.magnitudes) return;
  if (f->l >= 1 && f->l <= av.weight)
    av.coefficients[static_cast<size_t>(f->l - 1)] += f->delta;
}

}  // namespace

Integer PowerExpansion::evaluate(long n) const {
  Integer acc = 0;
  for (const auto& [l, c] : terms) acc += c * ipow(base_offset + l, n);
  return acc;
}

Integer PowerExpansion::coefficient_sum() const {
  Integer acc = 0;
  for (const auto& [l, c] : terms) acc += c;
  return acc;
}

std::string PowerExpansion::str() const {
  std::string out;
  for (const auto& [l, c] : terms) {
    if (c == 0) continue;
    bool negative = c < 0;
    Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += std::to_string(base_offset + l) + "^n";
  }
  return out.empty() ? "0" : out;
}

AlphaVector alpha_coefficients(const IndexVector& magnitudes) {
  if (!magnitudes.all_nonnegative())
    throw std::invalid_argument("alpha_coefficients: magnitudes must be nonnegative");
  if (magnitudes.all_zero())
    throw std::invalid_argument(
        "alpha_coefficients: the all-zero vector has no power expansion");
  const std::vector<long>& mags = magnitudes.entries();
  {
    std::lock_guard<std::mutex> lock(alpha_mutex);
    auto it = alpha_cache().find(mags);
    if (it != alpha_cache().end()) {
      AlphaVector copy = it->second;
      apply_alpha_fault(copy);
      return copy;
    }
  }
  AlphaVector computed = compute_alpha(mags);
  std::lock_guard<std::mutex> lock(alpha_mutex);
  AlphaVector copy = alpha_cache().emplace(mags, std::move(computed)).first->second;
  apply_alpha_fault(copy);
  return copy;
}

PowerExpansion to_power_expansion(const AlphaVector& av) {
  PowerExpansion pe;
  pe.base_offset = static_cast<long>(av.magnitudes.size());
  for (long l = 1; l <= av.weight; ++l)
    pe.terms.emplace_back(l, av.alpha(l));
  return pe;
}

Integer mpb_from_alpha(long n, const IndexVector& magnitudes) {
  if (n < 0) throw std::domain_error("mpb_from_alpha: negative n");
  return to_power_expansion(alpha_coefficients(magnitudes)).evaluate(n);
}

Integer mpb_recurrence(long n, const IndexVector& indices) {
  if (n < 0) throw std::domain_error("mpb_recurrence: negative n");
  if (!indices.all_nonpositive())
    throw std::invalid_argument(
        "mpb_recurrence: defined only for nonpositive index vectors");
  std::vector<long> mags = indices.magnitudes();

  // Each unit decrement of a later entry consumes one extra row slot.
  long extra = 0;
  for (size_t j = 1; j < mags.size(); ++j) extra += mags[j];
  long top = n + extra;

  std::vector<Integer> row(static_cast<size_t>(top) + 1);
  for (long i = 0; i <= top; ++i)
    row[static_cast<size_t>(i)] = pb_closed_negative(i, mags[0]);

  for (size_t j = 1; j < mags.size(); ++j) {
    long r = static_cast<long>(j) + 1;  // vector length after the append
    std::vector<Integer> appended(row.size());
    for (size_t i = 0; i < row.size(); ++i) {
      Integer acc = 0;
      for (size_t s = 0; s <= i; ++s)
        acc += binomial(static_cast<long>(i), static_cast<long>(s)) * row[s];
      appended[i] = std::move(acc);
    }
    row = std::move(appended);

    for (long step = 0; step < mags[j]; ++step) {
      std::vector<Integer> next(row.size() - 1);
      for (size_t i = 0; i + 1 < row.size(); ++i) {
        Integer acc = 0;
        for (size_t s = 0; s <= i; ++s)
          acc += binomial(static_cast<long>(i), static_cast<long>(s)) * row[s + 1];
        next[i] = acc + r * row[i] - row[i + 1];
      }
      row = std::move(next);
    }
  }
  return row[static_cast<size_t>(n)];
}

const char* mpb_route_name(MpbRoute route) {
  switch (route) {
    case MpbRoute::AllZero: return "all-zero";
    case MpbRoute::Alpha: return "alpha";
    case MpbRoute::Series: return "series";
  }
  return "unknown";
}

MpbValue mpb_with_route(long n, const IndexVector& indices) {
  if (n < 0) throw std::domain_error("mpb: negative n");
  std::pair<std::vector<long>, long> key{indices.entries(), n};
  {
    std::lock_guard<std::mutex> lock(mpb_mutex);
    auto it = mpb_cache().find(key);
    if (it != mpb_cache().end()) return it->second;
  }
  MpbValue result{Rational(0), MpbRoute::Series};
  if (indices.all_zero()) {
    result = {Rational(ipow(indices.length(), n)), MpbRoute::AllZero};
  } else if (indices.all_nonpositive()) {
    result = {Rational(mpb_from_alpha(n, indices.negated())), MpbRoute::Alpha};
  } else {
    result = {mpb_generating_series(indices, n + 2).egf_value(n), MpbRoute::Series};
  }
  std::lock_guard<std::mutex> lock(mpb_mutex);
  return mpb_cache().emplace(std::move(key), std::move(result)).first->second;
}

Rational mpb(long n, const IndexVector& indices) {
  return mpb_with_route(n, indices).value;
}

Integer mpb_single_minus_one(long n, long r, long i) {
  if (i < 1 || i > r)
    throw std::invalid_argument("mpb_single_minus_one: position out of range");
  if (n < 0) throw std::domain_error("mpb_single_minus_one: negative n");
  return Integer(i) * ipow(r + 1, n);
}

PowerExpansion single_entry_expansion(long m, long r, long i) {
  if (m < 1) throw std::invalid_argument("single_entry_expansion: m must be >= 1");
  if (i < 1 || i > r)
    throw std::invalid_argument("single_entry_expansion: position out of range");
  PowerExpansion pe;
  pe.base_offset = r;
  for (long l = 1; l <= m; ++l) {
    Integer c = rising_factorial(i, l) * stirling2(m, l);
    if ((l + m) % 2 != 0) c = -c;
    pe.terms.emplace_back(l, std::move(c));
  }
  return pe;
}

Rational mpb_from_pb_combination(long m, long r, long i, long n) {
  if (m < 1) throw std::invalid_argument("mpb_from_pb_combination: m must be >= 1");
  if (i < 1 || i > r)
    throw std::invalid_argument("mpb_from_pb_combination: position out of range");
  if (n < 0) throw std::domain_error("mpb_from_pb_combination: negative n");
  Rational acc(0);
  for (long l = 1; l <= m; ++l) {
    Rational inner(0);
    for (long k = 1; k <= r + l - 1; ++k)
      inner += Rational(stirling1_unsigned(r + l - 1, k)) * pb(n, -k);
    Integer num = rising_factorial(i, l) * stirling2(m, l);
    if ((l + m) % 2 != 0) num = -num;
    acc += Rational(num, factorial(r + l - 1)) * inner;
  }
  if (!acc.is_integer())
    throw std::logic_error("mpb_from_pb_combination: non-integer result " + acc.str());
  return acc;
}

namespace detail {

void reset_multi_poly_caches() {
  {
    std::lock_guard<std::mutex> lock(alpha_mutex);
    alpha_cache().clear();
  }
  std::lock_guard<std::mutex> lock(mpb_mutex);
  mpb_cache().clear();
}

}  // namespace detail

}  // namespace polybern
