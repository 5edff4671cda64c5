#include <polybern/poly_bernoulli.hpp>

#include <polybern/combinatorics.hpp>
#include <polybern/fault_injection.hpp>
#include <polybern/index_vector.hpp>
#include <polybern/series.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace polybern {

namespace {

std::mutex pb_mutex;
std::map<std::pair<long, long>, Rational>& pb_cache() {
  static std::map<std::pair<long, long>, Rational> cache;
  return cache;
}

}  // namespace

Integer pb_closed_negative(long n, long k) {
  if (n < 0 || k < 0) throw std::domain_error("pb_closed_negative: negative argument");
  Integer acc = 0;
  for (long j = 0; j <= std::min(n, k); ++j) {
    Integer f = factorial(j);
    acc += f * f * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1);
  }
  return acc;
}

Integer pb_power_sum(long n, long k) {
  if (n < 0) throw std::domain_error("pb_power_sum: negative n");
  if (k < 1) throw std::domain_error("pb_power_sum: k must be >= 1");
  Integer acc = 0;
  for (long l = 1; l <= k; ++l) {
    Integer term = factorial(l) * stirling2(k, l) * ipow(l + 1, n);
    if ((l + k) % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

Rational pb_series(long n, long k) {
  if (n < 0) throw std::domain_error("pb_series: negative n");
  return mpb_generating_series(IndexVector({k}), n + 2).egf_value(n);
}

Rational pb(long n, long k) {
  if (n < 0) throw std::domain_error("pb: negative n");
  {
    std::lock_guard<std::mutex> lock(pb_mutex);
    auto it = pb_cache().find({n, k});
    if (it != pb_cache().end()) return it->second;
  }
  Rational value = (k < 0) ? Rational(pb_closed_negative(n, -k)) : pb_series(n, k);
  std::lock_guard<std::mutex> lock(pb_mutex);
  return pb_cache().emplace(std::make_pair(n, k), std::move(value)).first->second;
}

namespace detail {

void reset_poly_bernoulli_cache() {
  std::lock_guard<std::mutex> lock(pb_mutex);
  pb_cache().clear();
}

}  // namespace detail

}  // namespace polybern
