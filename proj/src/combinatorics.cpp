#include <polybern/combinatorics.hpp>
#include <polybern/fault_injection.hpp>

#include "internal.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace polybern {

namespace {

// Triangular table grown row by row under a lock. get() is value-identical
// regardless of call order or thread count.
class TriangularTable {
 public:
  using RecurrenceFn = Integer (*)(long n, long m, const Integer& up_left,
                                   const Integer& up);

  explicit TriangularTable(RecurrenceFn fn) : fn_(fn) { reset(); }

  Integer get(long n, long m) {
    if (m > n || m < 0) return 0;
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(rows_.size()) <= n) {
      long i = static_cast<long>(rows_.size());
      std::vector<Integer> row(static_cast<size_t>(i) + 1);
      for (long j = 0; j <= i; ++j) {
        const Integer& up_left = (j >= 1) ? rows_[i - 1][j - 1] : zero_;
        const Integer& up = (j <= i - 1) ? rows_[i - 1][j] : zero_;
        row[static_cast<size_t>(j)] = fn_(i, j, up_left, up);
      }
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(m)];
  }

  void reset() {
    std::lock_guard<std::mutex> lock(mu_);
    rows_.assign(1, {Integer(1)});  // row 0: [1]
  }

 private:
  RecurrenceFn fn_;
  std::mutex mu_;
  std::vector<std::vector<Integer>> rows_;
  const Integer zero_ = 0;
};

Integer stirling2_step(long /*n*/, long m, const Integer& up_left, const Integer& up) {
  if (m == 0) return 0;  // {n, 0} = 0 for n > 0
  return up_left + m * up;
}

Integer stirling1_step(long n, long /*m*/, const Integer& up_left, const Integer& up) {
  return up_left + (n - 1) * up;
}

TriangularTable& stirling2_table() {
  static TriangularTable table(&stirling2_step);
  return table;
}

TriangularTable& stirling1_table() {
  static TriangularTable table(&stirling1_step);
  return table;
}

}  // namespace

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long m) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (m < 0 || m > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(m));
  return r;
}

Integer rising_factorial(long r, long l) {
  if (r < 0 || l < 0) throw std::domain_error("rising_factorial: negative argument");
  Integer acc = 1;
  for (long j = 0; j < l; ++j) acc *= Integer(r + j);
  return acc;
}

Integer stirling2(long n, long m) {
  if (n < 0 || m < 0) throw std::domain_error("stirling2: negative argument");
  Integer v = stirling2_table().get(n, m);
  if (const auto& f = detail::stirling2_fault(); f && f->n == n && f->m == m)
    v += f->delta;
  return v;
}

Integer stirling1_unsigned(long n, long m) {
  if (n < 0 || m < 0) throw std::domain_error("stirling1_unsigned: negative argument");
  return stirling1_table().get(n, m);
}

Integer stirling2_extended(long n, long m) {
  if (n >= 0 && m >= 0) return stirling2(n, m);
  if (n <= 0 && m <= 0) return stirling1_unsigned(-m, -n);
  return 0;
}

Integer stirling1_extended(long n, long m) { return stirling2_extended(-m, -n); }

Integer ipow(const Integer& base, long exp) {
  if (exp < 0) throw std::domain_error("ipow: negative exponent");
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

Integer ipow(long base, long exp) { return ipow(Integer(base), exp); }

Rational qpow(long base, long exp) {
  if (exp >= 0) return Rational(ipow(base, exp));
  return Rational(Integer(1), ipow(base, -exp));
}

namespace detail {

std::optional<Stirling2Fault>& stirling2_fault() {
  static std::optional<Stirling2Fault> f;
  return f;
}

std::optional<AlphaFault>& alpha_fault() {
  static std::optional<AlphaFault> f;
  return f;
}

void reset_kernel_caches() {
  stirling2_table().reset();
  stirling1_table().reset();
}

}  // namespace detail

namespace fault {

namespace {
void drop_derived_caches() {
  detail::reset_poly_bernoulli_cache();
  detail::reset_multi_poly_caches();
}
}  // namespace

void perturb_stirling2(long n, long m, long delta) {
  detail::stirling2_fault() = detail::Stirling2Fault{n, m, delta};
  drop_derived_caches();
}

void perturb_alpha(const std::vector<long>& magnitudes, long l, long delta) {
  detail::alpha_fault() = detail::AlphaFault{magnitudes, l, delta};
  drop_derived_caches();
}

void clear() {
  detail::stirling2_fault().reset();
  detail::alpha_fault().reset();
  drop_derived_caches();
}

}  // namespace fault

}  // namespace polybern
