#pragma once

#include <polybern/rational.hpp>

namespace polybern {

/// n! for n >= 0; negative n throws.
Integer factorial(long n);

/// C(n, m) with the usual convention: 0 for m < 0 or m > n. n must be >= 0.
Integer binomial(long n, long m);

/// Rising factorial r(r+1)...(r+l-1), with (r)_0 = 1. Requires r, l >= 0.
Integer rising_factorial(long r, long l);

/// Stirling number of the second kind {n m}: partitions of an n-set into m
/// nonempty blocks. Memoized; requires n, m >= 0.
Integer stirling2(long n, long m);

/// Unsigned Stirling number of the first kind [n m]: permutations of n
/// letters with exactly m cycles. Memoized; requires n, m >= 0.
Integer stirling1_unsigned(long n, long m);

/// {n m} extended to all integer pairs: the usual table for n, m >= 0,
/// [-m -n] for n, m <= 0, and 0 when the signs are mixed.
Integer stirling2_extended(long n, long m);

/// [n m] extended to all integer pairs; equals stirling2_extended(-m, -n).
Integer stirling1_extended(long n, long m);

/// base^exp for exp >= 0.
Integer ipow(const Integer& base, long exp);
Integer ipow(long base, long exp);

/// base^exp for any integer exp (negative exponents give 1/base^|exp|).
Rational qpow(long base, long exp);

}  // namespace polybern
