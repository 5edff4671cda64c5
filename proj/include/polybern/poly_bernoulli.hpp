#pragma once

#include <polybern/rational.hpp>

namespace polybern {

/// B_n^{(-k)} by the closed double-Stirling-sum formula
///   sum_{j=0}^{min(n,k)} (j!)^2 {n+1, j+1} {k+1, j+1}.
/// Requires n, k >= 0; the result is a positive integer.
Integer pb_closed_negative(long n, long k);

/// B_n^{(-k)} as the signed power sum
///   sum_{l=1}^{k} (-1)^{l+k} l! {k, l} (l+1)^n.
/// Requires n >= 0 and k >= 1 (the k = 0 value is not in this formula's
/// domain; callers use the constant-1 convention elsewhere).
Integer pb_power_sum(long n, long k);

/// B_n^{(k)} read off the generating series Li_k(1-e^{-t})/(1-e^{-t});
/// works for every integer k. Requires n >= 0.
Rational pb_series(long n, long k);

/// B_n^{(k)}: closed formula for k < 0 (fast, integer), series route for
/// k >= 0. Memoized.
Rational pb(long n, long k);

}  // namespace polybern
