#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polybern/combinatorics.hpp>
#include <polybern/fault_injection.hpp>
#include <polybern/multi_poly.hpp>
#include <polybern/poly_bernoulli.hpp>
#include <polybern/series.hpp>

#include <thread>
#include <vector>

using namespace polybern;

namespace {

std::vector<long> coeffs_of(const AlphaVector& av) {
  std::vector<long> out;
  for (const auto& c : av.coefficients) out.push_back(c.get_si());
  return out;
}

std::vector<std::vector<long>> small_vectors(long r, long max_entry) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(r, 0);
  while (true) {
    out.push_back(cur);
    long pos = r - 1;
    while (pos >= 0 && cur[pos] == max_entry) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("alpha coefficients match the printed expansions") {
  CHECK(coeffs_of(alpha_coefficients(IndexVector({2}))) == std::vector<long>{-1, 2});
  CHECK(coeffs_of(alpha_coefficients(IndexVector({1, 1, 1}))) ==
        std::vector<long>{1, -10, 15});
  CHECK(coeffs_of(alpha_coefficients(IndexVector({2, 1}))) ==
        std::vector<long>{1, -7, 8});
  CHECK(coeffs_of(alpha_coefficients(IndexVector({1, 1}))) ==
        std::vector<long>{-1, 3});
  CHECK(coeffs_of(alpha_coefficients(IndexVector({0, 3, 0}))) ==
        std::vector<long>{2, -18, 24});
}

TEST_CASE("alpha rejects bad input") {
  CHECK_THROWS_AS(alpha_coefficients(IndexVector({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(alpha_coefficients(IndexVector({1, -1})), std::invalid_argument);
}

TEST_CASE("alpha seeding agrees with repeated raising from zero") {
  // Raising (0) k times must reach the same coefficients as the direct seed.
  for (long k = 1; k <= 6; ++k) {
    AlphaVector direct = alpha_coefficients(IndexVector({k}));
    std::vector<Integer> alpha(k + 1, Integer(0));
    alpha[0] = 1;
    for (long step = 1; step <= k; ++step) {
      for (long l = step; l >= 1; --l)
        alpha[l] = l * alpha[l - 1] - l * alpha[l];
      alpha[0] = 0;
    }
    for (long l = 1; l <= k; ++l) CHECK(direct.alpha(l) == alpha[l]);
  }
}

TEST_CASE("power expansion evaluation and rendering") {
  PowerExpansion pe = to_power_expansion(alpha_coefficients(IndexVector({2, 1})));
  CHECK(pe.str() == "3^n - 7*4^n + 8*5^n");
  CHECK(pe.evaluate(0) == pe.coefficient_sum());
  CHECK(pe.evaluate(2) == 9 - 7 * 16 + 8 * 25);
  PowerExpansion single = to_power_expansion(alpha_coefficients(IndexVector({0, 1})));
  CHECK(single.str() == "2*3^n");
}

TEST_CASE("alpha evaluation values") {
  CHECK(mpb_from_alpha(3, IndexVector({1, 1})) == 165);
  CHECK(mpb_from_alpha(2, IndexVector({0, 1})) == 18);
  for (long k1 = 0; k1 <= 2; ++k1)
    for (long k2 = 0; k2 <= 2; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      AlphaVector av = alpha_coefficients(IndexVector({k1, k2}));
      Integer sum = 0;
      for (const auto& c : av.coefficients) sum += c;
      CHECK(mpb_from_alpha(0, IndexVector({k1, k2})) == sum);
    }
}

TEST_CASE("recurrence route values") {
  CHECK(mpb_recurrence(3, IndexVector({0, -1})) == 54);
  CHECK(mpb_recurrence(2, IndexVector({-1, 0})) == 9);
  CHECK(mpb_recurrence(4, IndexVector({-1, -1})) == 687);
  CHECK(mpb_recurrence(5, IndexVector({-2})) == 454);
  CHECK_THROWS_AS(mpb_recurrence(2, IndexVector({1, 0})), std::invalid_argument);
}

TEST_CASE("dispatcher values and routes") {
  CHECK(mpb(5, IndexVector({0, 0})) == Rational(32));
  CHECK(mpb(7, IndexVector({-1, -1})) == Rational(46965));
  CHECK(mpb(3, IndexVector({1, 0})) == Rational(3));
  CHECK(mpb_with_route(5, IndexVector({0, 0})).route == MpbRoute::AllZero);
  CHECK(mpb_with_route(4, IndexVector({0, -2})).route == MpbRoute::Alpha);
  CHECK(mpb_with_route(2, IndexVector({1, -1})).route == MpbRoute::Series);
  CHECK(mpb_route_name(MpbRoute::Alpha) == std::string("alpha"));
}

TEST_CASE("three routes agree on nonpositive vectors") {
  for (long r = 1; r <= 3; ++r) {
    for (const auto& mags : small_vectors(r, 2)) {
      bool all_zero = true;
      for (long e : mags) all_zero &= (e == 0);
      if (all_zero) continue;
      std::vector<long> negated(mags);
      for (long& e : negated) e = -e;
      IndexVector iv{std::move(negated)};
      TruncatedSeries gs = mpb_generating_series(iv, 5);
      for (long n = 0; n <= 5; ++n) {
        Integer via_alpha = mpb_from_alpha(n, IndexVector{std::vector<long>(mags)});
        CHECK(via_alpha == mpb_recurrence(n, iv));
        CHECK(Rational(via_alpha) == gs.egf_value(n));
      }
    }
  }
}

TEST_CASE("single -1 entries collapse to a power") {
  CHECK(mpb_single_minus_one(0, 5, 4) == 4);
  for (long n = 0; n <= 6; ++n) {
    CHECK(mpb_single_minus_one(n, 3, 2) == 2 * ipow(4, n));
    CHECK(mpb_single_minus_one(n, 4, 1) == ipow(5, n));
  }
  for (long r = 1; r <= 5; ++r)
    for (long i = 1; i <= r; ++i)
      for (long n = 0; n <= 8; ++n)
        CHECK(Rational(mpb_single_minus_one(n, r, i)) ==
              mpb(n, IndexVector::single_entry(r, i, -1)));
  CHECK_THROWS_AS(mpb_single_minus_one(1, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(mpb_single_minus_one(1, 3, 0), std::invalid_argument);
}

TEST_CASE("trailing -1 is r times the leading -1 value") {
  for (long r = 1; r <= 5; ++r) {
    std::vector<long> trailing(r, 0), leading(r, 0);
    trailing.back() = -1;
    leading.front() = -1;
    for (long n = 0; n <= 8; ++n)
      CHECK(mpb(n, IndexVector{std::vector<long>(trailing)}) ==
            Rational(r) * mpb(n, IndexVector{std::vector<long>(leading)}));
  }
}

TEST_CASE("single-entry expansions") {
  PowerExpansion pe = single_entry_expansion(2, 3, 2);
  CHECK(pe.str() == "-2*4^n + 6*5^n");
  CHECK(single_entry_expansion(3, 1, 1).str() == "2^n - 6*3^n + 6*4^n");
  for (long r = 1; r <= 4; ++r)
    for (long i = 1; i <= r; ++i) {
      PowerExpansion one = single_entry_expansion(1, r, i);
      for (long n = 0; n <= 5; ++n)
        CHECK(one.evaluate(n) == mpb_single_minus_one(n, r, i));
    }
  for (long m = 1; m <= 3; ++m)
    for (long r = 1; r <= 3; ++r)
      for (long i = 1; i <= r; ++i)
        for (long n = 0; n <= 6; ++n)
          CHECK(Rational(single_entry_expansion(m, r, i).evaluate(n)) ==
                mpb(n, IndexVector::single_entry(r, i, -m)));
  CHECK_THROWS_AS(single_entry_expansion(2, 3, 4), std::invalid_argument);
}

TEST_CASE("single-index combinations reproduce multi values") {
  CHECK(mpb_from_pb_combination(1, 2, 1, 2) == Rational(9));
  CHECK(mpb_from_pb_combination(2, 1, 1, 5) == Rational(454));
  // Trailing -1 of length 3 decomposes over the first three single values.
  for (long n = 0; n <= 6; ++n) {
    Rational expected = pb(n, -1) + Rational(Integer(3), Integer(2)) * pb(n, -2) +
                        Rational(Integer(1), Integer(2)) * pb(n, -3);
    CHECK(mpb_from_pb_combination(1, 3, 3, n) == expected);
  }
  for (long m = 1; m <= 3; ++m)
    for (long r = 1; r <= 3; ++r)
      for (long i = 1; i <= r; ++i)
        for (long n = 0; n <= 6; ++n)
          CHECK(mpb_from_pb_combination(m, r, i, n) ==
                mpb(n, IndexVector::single_entry(r, i, -m)));
}

TEST_CASE("multi duality with leading zeros") {
  for (long r = 1; r <= 3; ++r)
    for (long n = 0; n <= 6; ++n)
      for (long k = 0; k <= 6; ++k) {
        std::vector<long> left(r, 0), right(r, 0);
        left.back() = -k;
        right.back() = -n;
        CHECK(mpb(n, IndexVector{std::move(left)}) ==
              mpb(k, IndexVector{std::move(right)}));
      }
}

TEST_CASE("memoized values are identical across threads") {
  detail::reset_multi_poly_caches();
  detail::reset_poly_bernoulli_cache();
  std::vector<std::vector<Rational>> results(6);
  {
    std::vector<std::thread> threads;
    for (int t = 0; t < 6; ++t)
      threads.emplace_back([&results, t] {
        for (long n = 0; n <= 6; ++n) {
          results[t].push_back(pb(n, -3));
          results[t].push_back(pb(n, 2));
          results[t].push_back(mpb(n, IndexVector({0, -2})));
          results[t].push_back(mpb(n, IndexVector({1, 1})));
        }
      });
    for (auto& thread : threads) thread.join();
  }
  for (int t = 1; t < 6; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("index vector helpers") {
  IndexVector iv({0, -1});
  CHECK(iv.str() == "(0,-1)");
  CHECK(iv.all_nonpositive());
  CHECK(!iv.all_zero());
  CHECK(iv.weight() == 1);
  CHECK(iv.negated() == IndexVector({0, 1}));
  CHECK(IndexVector::zeros(3).all_zero());
  CHECK(IndexVector::single_entry(3, 2, -5) == IndexVector({0, -5, 0}));
  CHECK_THROWS_AS(IndexVector(std::vector<long>{}), std::invalid_argument);
  CHECK(IndexVector({1, -1}).has_positive());
}
