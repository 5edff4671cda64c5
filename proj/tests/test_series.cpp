#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polybern/combinatorics.hpp>
#include <polybern/multi_series.hpp>
#include <polybern/series.hpp>

#include <functional>
#include <random>
#include <vector>

using namespace polybern;

namespace {

Rational q(long num, long den) { return Rational(Integer(num), Integer(den)); }

TruncatedSeries series_of(std::vector<Rational> coeffs) {
  return TruncatedSeries(std::move(coeffs));
}

// Brute-force multiple polylog coefficient: nested sum over
// 0 < m_1 < ... < m_r = M of the index-power product.
Rational polylog_coeff_brute(const std::vector<long>& ks, long M) {
  size_t r = ks.size();
  Rational total(0);
  // Enumerate chains ending at M.
  std::vector<long> chain(r);
  chain[r - 1] = M;
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == 0) {
      Rational prod(1);
      for (size_t j = 0; j < r; ++j) prod *= qpow(chain[j], -ks[j]);
      total += prod;
      return;
    }
    for (long v = pos; v < chain[pos]; ++v) {
      chain[pos - 1] = v;
      rec(pos - 1);
    }
  };
  if (M >= static_cast<long>(r) && M >= 1) rec(r - 1);
  return total;
}

TruncatedSeries random_series(std::mt19937& rng, long order) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  TruncatedSeries s(order);
  for (long i = 0; i <= order; ++i) s.set_coeff(i, q(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST_CASE("u series expansion") {
  TruncatedSeries u = u_series(3);
  CHECK(u == series_of({q(0, 1), q(1, 1), q(-1, 2), q(1, 6)}));
  CHECK(u_series(0) == series_of({q(0, 1)}));
  CHECK(u_series(4).coeff(4) == q(-1, 24));
  CHECK(u_series(8).valuation() == 1);
}

TEST_CASE("series multiplication") {
  TruncatedSeries u = u_series(4);
  CHECK(u * TruncatedSeries::constant(Rational(1), 4) == u);
  CHECK(u * u == series_of({q(0, 1), q(0, 1), q(1, 1), q(-1, 1), q(7, 12)}));
  TruncatedSeries zero(4);
  CHECK(u * zero == zero);
}

TEST_CASE("series composition") {
  TruncatedSeries u = u_series(5);
  CHECK(compose(TruncatedSeries::identity(5), u) == u);

  // z^2 composed with u agrees with direct multiplication.
  TruncatedSeries z2(4);
  z2.set_coeff(2, Rational(1));
  TruncatedSeries u4 = u_series(4);
  CHECK(compose(z2, u4) == u4 * u4);

  // sum_m m z^m at u(t) is e^{2t} - e^{t}: n![t^n] = 2^n - 1.
  TruncatedSeries li_minus_1 = multiple_polylog_series(IndexVector({-1}), 6);
  TruncatedSeries composed = compose(li_minus_1, u_series(6));
  for (long n = 1; n <= 6; ++n)
    CHECK(composed.egf_value(n) == Rational(ipow(2, n) - 1));
  CHECK(composed.coeff(0) == Rational(0));

  TruncatedSeries not_zero_at_0 = TruncatedSeries::constant(Rational(1), 4);
  CHECK_THROWS_AS(compose(u4, not_zero_at_0), std::invalid_argument);
}

TEST_CASE("series inversion") {
  TruncatedSeries one = TruncatedSeries::constant(Rational(1), 6);
  TruncatedSeries f = one + u_series(6);
  CHECK(invert(f) * f == one);
  CHECK_THROWS_AS(invert(u_series(4)), std::invalid_argument);
}

TEST_CASE("division by a valuation-1 power") {
  TruncatedSeries u = u_series(6);
  CHECK(divide_by_valuation_power(u, u, 1) ==
        TruncatedSeries::constant(Rational(1), 5));

  TruncatedSeries li_minus_1 = multiple_polylog_series(IndexVector({-1}), 8);
  TruncatedSeries f = compose(li_minus_1, u_series(8));
  TruncatedSeries g = divide_by_valuation_power(f, u_series(8), 1);
  for (long n = 0; n <= 7; ++n) CHECK(g.egf_value(n) == Rational(ipow(2, n)));

  CHECK_THROWS_AS(divide_by_valuation_power(u_series(6), u_series(6), 2),
                  std::domain_error);
}

TEST_CASE("multiple polylog coefficients") {
  CHECK(multiple_polylog_series(IndexVector({-1}), 5) ==
        series_of({q(0, 1), q(1, 1), q(2, 1), q(3, 1), q(4, 1), q(5, 1)}));
  CHECK(multiple_polylog_series(IndexVector({1}), 3) ==
        series_of({q(0, 1), q(1, 1), q(1, 2), q(1, 3)}));
  CHECK(multiple_polylog_series(IndexVector({0, -1}), 4) ==
        series_of({q(0, 1), q(0, 1), q(2, 1), q(6, 1), q(12, 1)}));
}

TEST_CASE("polylog sweep agrees with the nested-sum oracle") {
  std::vector<std::vector<long>> index_sets = {
      {2}, {0}, {-2}, {1, 1}, {0, -1}, {-1, 2}, {3, -2}, {1, 0, -1}, {-1, -1, -1},
      {2, 1, 0}};
  for (const auto& ks : index_sets) {
    TruncatedSeries s = multiple_polylog_series(IndexVector{std::vector<long>(ks)}, 9);
    for (long M = 0; M <= 9; ++M) CHECK(s.coeff(M) == polylog_coeff_brute(ks, M));
  }
}

TEST_CASE("polylog valuation law") {
  std::vector<std::vector<long>> index_sets = {
      {0}, {3}, {-3}, {0, 0}, {2, -2}, {1, 1, 1}, {0, -1, 2}, {1, 2, 3, 4},
      {0, 0, 0, -1}};
  for (const auto& ks : index_sets) {
    IndexVector iv{std::vector<long>(ks)};
    CHECK(multiple_polylog_series(iv, 12).valuation() >=
          static_cast<long>(ks.size()));
  }
}

TEST_CASE("generating series values") {
  CHECK(mpb_generating_series(IndexVector({-2}), 5).egf_value(5) == Rational(454));
  CHECK(mpb_generating_series(IndexVector({0, -1}), 3).egf_value(3) == Rational(54));
  CHECK(mpb_generating_series(IndexVector({1, 1}), 2).egf_value(2) == q(5, 12));
}

TEST_CASE("ring axioms at truncation order") {
  std::mt19937 rng(987654);
  for (int iter = 0; iter < 40; ++iter) {
    TruncatedSeries a = random_series(rng, 6);
    TruncatedSeries b = random_series(rng, 6);
    TruncatedSeries c = random_series(rng, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("multivariate series basics") {
  MultiSeries ms = mpb_multivariate_series(1, 4);
  CHECK(ms.coeff({2, 2}) == q(7, 2));
  CHECK(mpb_multivariate_series(1, 2).coeff({0, 0}) == Rational(1));
  CHECK(mpb_multivariate_series(2, 4).coeff({0, 1, 1}) == Rational(6));
}

TEST_CASE("multivariate inverse multiplies back to one") {
  MultiSeries f = MultiSeries::exp_linear_form({q(-1, 1), q(1, 2)}, 6);
  MultiSeries inv = f.inverse();
  MultiSeries product = f * inv;
  CHECK(product.coeff({0, 0}) == Rational(1));
  CHECK(product.terms().size() == 1);
  CHECK_THROWS_AS(MultiSeries::linear_form({q(1, 1)}, 3).inverse(),
                  std::invalid_argument);
}

TEST_CASE("bivariate generating function matches single values") {
  // 1/(e^{-x} + e^{-t} - 1): the (a, n) coefficient is B_n^{(-a)}/(a! n!).
  MultiSeries ms = mpb_multivariate_series(1, 12);
  TruncatedSeries row0 = mpb_generating_series(IndexVector({0}), 6);
  for (long a = 0; a <= 6; ++a) {
    TruncatedSeries gs = mpb_generating_series(IndexVector({-a}), 6);
    for (long n = 0; n <= 6; ++n) {
      Rational expected = gs.egf_value(n) / Rational(factorial(a) * factorial(n));
      CHECK(ms.coeff({static_cast<int>(a), static_cast<int>(n)}) == expected);
      // Symmetry of the two variables (single-index duality).
      CHECK(ms.coeff({static_cast<int>(a), static_cast<int>(n)}) ==
            ms.coeff({static_cast<int>(n), static_cast<int>(a)}));
    }
  }
  CHECK(row0.egf_value(0) == Rational(1));
}
