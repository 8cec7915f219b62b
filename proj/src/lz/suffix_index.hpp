#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "common.hpp"

namespace qstring {

/// Suffix array of t with a unique smallest sentinel appended; entry 0 is the
/// sentinel suffix (value t.size()). Values are 0-based positions.
std::vector<std::uint32_t> suffix_array_with_sentinel(const Text& t);

template <class T, class Better>
class SparseTable {
 public:
  SparseTable() = default;
  explicit SparseTable(const std::vector<T>& v) {
    const std::size_t n = v.size();
    table_.push_back(v);
    for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
      const auto& prev = table_.back();
      std::vector<T> cur(n - (std::size_t{1} << k) + 1);
      for (std::size_t i = 0; i < cur.size(); ++i) {
        T a = prev[i], b = prev[i + (std::size_t{1} << (k - 1))];
        cur[i] = Better{}(b, a) ? b : a;
      }
      table_.push_back(std::move(cur));
    }
  }
  /// Best value over [lo, hi], inclusive.
  T query(std::size_t lo, std::size_t hi) const {
    unsigned k = 63 - __builtin_clzll(hi - lo + 1);
    T a = table_[k][lo], b = table_[k][hi - (std::size_t{1} << k) + 1];
    return Better{}(b, a) ? b : a;
  }

 private:
  std::vector<std::vector<T>> table_;
};

/// Classical suffix array toolkit over a materialized text (0-based positions).
class SuffixIndex {
 public:
  explicit SuffixIndex(const Text& t);

  std::size_t size() const { return sa_.size(); }
  const std::vector<std::uint32_t>& sa() const { return sa_; }
  const std::vector<std::uint32_t>& isa() const { return isa_; }
  const std::vector<std::uint32_t>& lcp() const { return lcp_; }

  /// Longest common prefix of suffixes starting at i and j.
  std::size_t lce(std::size_t i, std::size_t j) const;
  /// Rows [lo, hi] of suffixes that begin with t[pos, pos+len).
  std::pair<std::size_t, std::size_t> interval(std::size_t pos, std::size_t len) const;
  std::size_t min_position(std::size_t lo, std::size_t hi) const;
  /// Largest suffix position strictly below `limit` among rows [lo, hi].
  std::optional<std::size_t> max_position_below(std::size_t lo, std::size_t hi, std::size_t limit) const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> sa_, isa_, lcp_;
  SparseTable<std::uint32_t, std::less<>> lcp_min_;
  SparseTable<std::uint32_t, std::less<>> sa_min_;
  std::vector<std::vector<std::uint32_t>> tree_;  // merge-sort tree over sa_
};

}  // namespace qstring
