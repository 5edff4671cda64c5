#pragma once

#include <polybern/index_vector.hpp>
#include <polybern/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace polybern {

/// Integer coefficients alpha_1..alpha_k expressing
/// B_n^{(-k_1,...,-k_r)} = sum_{l=1}^{k} alpha_l (l+r)^n for a magnitude
/// vector (k_1,...,k_r) of weight k = k_1 + ... + k_r.
struct AlphaVector {
  std::vector<long> magnitudes;
  long weight = 0;
  std::vector<Integer> coefficients;  // coefficients[l-1] = alpha_l

  const Integer& alpha(long l) const { return coefficients[static_cast<size_t>(l - 1)]; }
};

/// sum over stored l of coeff(l) * (l + base_offset)^n.
struct PowerExpansion {
  long base_offset = 0;
  std::vector<std::pair<long, Integer>> terms;  // (l, coefficient), l ascending

  Integer evaluate(long n) const;
  Integer coefficient_sum() const;
  /// "3^n - 7*4^n + 8*5^n" (zero coefficients skipped).
  std::string str() const;
};

/// The coefficients of the power expansion of B_n^{(-k_1,...,-k_r)},
/// built left to right: the first entry seeds alpha_l = (-1)^{l+k_1} l! {k_1, l},
/// appending a 0 copies the vector, and raising the last entry of a
/// length-j prefix maps alpha_l to (l+j-1) alpha_{l-1} - l alpha_l
/// (with alpha_0 = 1 exactly while the prefix is still all zeros).
/// Requires all entries >= 0 and at least one nonzero. Cached.
AlphaVector alpha_coefficients(const IndexVector& magnitudes);

/// The alpha coefficients as a ready-to-evaluate power expansion.
PowerExpansion to_power_expansion(const AlphaVector& av);

/// Evaluates the alpha expansion of the magnitude vector at n.
Integer mpb_from_alpha(long n, const IndexVector& magnitudes);

/// B_n^{(k_1,...,k_r)} for a vector with all entries <= 0, built
/// index-by-index from the single-index closed formula: appending a zero
/// entry takes the binomial transform
///   B_n^{(...,0)} = sum_i C(n,i) B_i^{(...)},
/// and lowering the last entry by one applies
///   B_n^{(...,-k-1)} = sum_m C(n,m) B_{m+1}^{(...,-k)} + r B_n^{(...,-k)} - B_{n+1}^{(...,-k)}.
/// Whole rows of intermediate values are computed as needed.
Integer mpb_recurrence(long n, const IndexVector& indices);

enum class MpbRoute { AllZero, Alpha, Series };
const char* mpb_route_name(MpbRoute route);

struct MpbValue {
  Rational value;
  MpbRoute route;
};

/// B_n^{(k_1,...,k_r)} for any integer index vector: r^n when all entries
/// are zero, the alpha expansion when all are nonpositive, and the series
/// oracle otherwise. Memoized; also reports which route produced the value.
MpbValue mpb_with_route(long n, const IndexVector& indices);
Rational mpb(long n, const IndexVector& indices);

/// Value of the vector of length r whose i-th entry is -1 and the rest 0:
/// i * (r+1)^n. Requires 1 <= i <= r.
Integer mpb_single_minus_one(long n, long r, long i);

/// Power expansion of the vector of length r with -m at position i:
/// sum_{l=1}^{m} (-1)^{l+m} (i)_l {m, l} (r+l)^n. Requires m >= 1, 1 <= i <= r.
PowerExpansion single_entry_expansion(long m, long r, long i);

/// The same value as a combination of single-index values:
/// sum_{l=1}^{m} (-1)^{l+m} (i)_l {m,l} / (r+l-1)!
///   * sum_{k=1}^{r+l-1} [r+l-1, k] B_n^{(-k)}.
/// The result is checked to be an integer before returning.
Rational mpb_from_pb_combination(long m, long r, long i, long n);

}  // namespace polybern
