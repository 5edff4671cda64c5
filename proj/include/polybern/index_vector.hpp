#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polybern {

/// Ordered upper-index vector (k_1, ..., k_r) of a multi-poly-Bernoulli
/// number, r >= 1. Entries may be any integers.
class IndexVector {
 public:
  explicit IndexVector(std::vector<long> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
      throw std::invalid_argument("IndexVector: at least one entry required");
  }
  IndexVector(std::initializer_list<long> entries)
      : IndexVector(std::vector<long>(entries)) {}

  static IndexVector zeros(long r) {
    return IndexVector(std::vector<long>(static_cast<size_t>(r), 0));
  }
  /// Length r with `value` at 1-based position i and zeros elsewhere.
  static IndexVector single_entry(long r, long i, long value) {
    if (i < 1 || i > r)
      throw std::invalid_argument("IndexVector: position out of range");
    std::vector<long> e(static_cast<size_t>(r), 0);
    e[static_cast<size_t>(i - 1)] = value;
    return IndexVector(std::move(e));
  }

  long length() const { return static_cast<long>(entries_.size()); }
  const std::vector<long>& entries() const { return entries_; }
  long operator[](long j) const { return entries_[static_cast<size_t>(j)]; }

  bool all_zero() const {
    for (long e : entries_)
      if (e != 0) return false;
    return true;
  }
  bool all_nonpositive() const {
    for (long e : entries_)
      if (e > 0) return false;
    return true;
  }
  bool has_positive() const { return !all_nonpositive(); }
  bool all_nonnegative() const {
    for (long e : entries_)
      if (e < 0) return false;
    return true;
  }

  /// Entrywise absolute values; requires all entries of one sign profile.
  std::vector<long> magnitudes() const {
    std::vector<long> m;
    m.reserve(entries_.size());
    for (long e : entries_) m.push_back(e < 0 ? -e : e);
    return m;
  }

  /// Sum of |k_j|.
  long weight() const {
    long w = 0;
    for (long e : entries_) w += (e < 0 ? -e : e);
    return w;
  }

  IndexVector negated() const {
    std::vector<long> e(entries_);
    for (long& x : e) x = -x;
    return IndexVector(std::move(e));
  }

  /// "(0,-1)"
  std::string str() const {
    std::string s = "(";
    for (size_t j = 0; j < entries_.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(entries_[j]);
    }
    return s + ")";
  }

  friend bool operator==(const IndexVector& a, const IndexVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const IndexVector& a, const IndexVector& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<long> entries_;
};

}  // namespace polybern
