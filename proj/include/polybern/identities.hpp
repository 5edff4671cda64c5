#pragma once

#include <polybern/rational.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polybern {

/// One entry per named identity the library can check. The string forms
/// (identity_name) are the stable external ids accepted by the CLI.
enum class IdentityId {
  ClosedFormulaS1,
  DualityS1,
  Lemma2_2,
  Lemma2_3,
  Cor2_4_1,
  Cor2_4_2,
  Cor2_4_3,
  Cor2_4_4,
  Thm2_5,
  Thm2_6_1,
  Thm2_6_2,
  Thm2_6_3,
  Thm3_1_1,
  Thm3_1_2,
  Thm3_1_3,
  Cor3_3,
  Thm3_5_1,
  Thm3_5_2,
  Thm3_5_3,
  Thm3_6,
  Cor3_7,
  Thm3_9,
  Thm3_10,
  Thm3_11,
  Thm3_12,
  Thm3_13_1,
  Thm3_13_2,
  Thm3_14,
  Thm3_18,
  Conj3_17,
};

/// All ids in registry (= report) order.
const std::vector<IdentityId>& all_identities();

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

/// True for claims the library checks but never assumes (conj-3.17).
bool is_conjecture(IdentityId id);

/// Parameter bounds for a verification sweep. sample_points feeds the
/// polynomial identity cor-2.4-4; cap bounds the multivariate check thm-2.5.
struct RangeSpec {
  long max_n = 8;
  long max_k = 6;
  long max_r = 4;
  long max_m = 3;
  long max_i = 4;
  int cap = 6;
  std::vector<std::pair<Rational, Rational>> sample_points = default_sample_points();

  static std::vector<std::pair<Rational, Rational>> default_sample_points();
  static RangeSpec desk_default() { return RangeSpec{}; }

  /// Throws std::invalid_argument listing every structurally invalid field.
  void validate() const;
};

struct Counterexample {
  /// Ordered (name, value) pairs naming the failing tuple.
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  IdentityId identity;
  RangeSpec range;
  long cases_checked = 0;
  bool passed = true;
  std::vector<Counterexample> counterexamples;  // empty iff passed
};

/// Exhaustively evaluates one identity over the range (exact comparison).
/// Throws std::invalid_argument for a range below the identity's minimal
/// domain; a failing case is reported, never thrown.
VerificationReport verify(IdentityId id, const RangeSpec& range);

/// Runs every registered identity, raising each bound to the identity's
/// minimal domain where needed. Deterministic registry order.
std::vector<VerificationReport> verify_all(const RangeSpec& range);

/// Coefficient triangle of the conjectured expansion, for a fixed r >= 1:
/// row j holds a_{j,0..j+1} with left edge a_{j,0} = r! {j+r+1, r}, right
/// edge a_{j,j+1} = r!, and interior a_{j,m} = a_{j-1,m-1} + r a_{j-1,m}.
struct ConjectureTriangle {
  long r = 1;
  std::vector<std::vector<Integer>> rows;  // rows[j].size() == j+2

  const Integer& at(long j, long m) const {
    return rows[static_cast<size_t>(j)][static_cast<size_t>(m)];
  }
};

ConjectureTriangle conjecture_triangle(long r, long max_row);

/// The k signed coefficients of the conjectured expansion of B_n^{(-k)} for
/// a given r < k: first the r coefficients (-1)^{k-l} l! {k,l} of the
/// all-zero terms, then the k-r coefficients (-1)^{k-m-r} a_{k-r-1,m}.
std::vector<Integer> conjecture_coefficients(long k, long r);

/// Sweeps the conjectured identity over 1 <= r <= max_r, r < k <= max_k,
/// 0 <= n <= max_n. A failure is a finding, not an error.
/// Requires max_k > max_r >= 1.
VerificationReport check_conjecture(long max_k, long max_r, long max_n);

}  // namespace polybern
