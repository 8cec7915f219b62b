#pragma once

#include <algorithm>
#include <utility>

#include "lz/dynamic_lce.hpp"
#include "oracle/oracle.hpp"

namespace qstring {

/// Co-lexicographic comparison of the prefixes known[1..a] and known[1..b].
inline int compare_prefixes(const DynamicLce& known, std::size_t a, std::size_t b) {
  if (a == b) return 0;
  std::size_t m = known.lcs(a, b);
  if (m == std::min(a, b)) return a < b ? -1 : 1;
  return known.at(a - m) < known.at(b - m) ? -1 : 1;
}

/// A pattern made of known[a..a+L) followed by w[1..d], both already materialized.
struct SplicedPattern {
  const DynamicLce* known;
  std::size_t a = 1, left = 0;
  const Text* w = nullptr;
  const PrefixFingerprints* wh = nullptr;
  std::size_t d = 0;

  std::size_t length() const { return left + d; }
  symbol_t at(std::size_t i) const { return i <= left ? known->at(a + i - 1) : (*w)[i - left - 1]; }
  Fingerprint suffix(std::size_t m) const {
    if (m <= d) return wh->get(d - m + 1, m);
    Fingerprint head = known->fingerprint(a + left - (m - d), m - d);
    return d == 0 ? head : fp::concat(head, wh->get(1, d), d);
  }
};

enum class SuffixOrder { less, contains, greater };

/// Where prefix known[1..q] sits relative to the block of prefixes ending with p.
/// `skip` symbols at the right end are already known to match.
inline SuffixOrder classify(const DynamicLce& known, const SplicedPattern& p, std::size_t q, std::size_t skip,
                            std::size_t& matched) {
  const std::size_t cap = std::min(p.length(), q);
  std::size_t good = std::min(skip, cap);
  while (good < cap && good < skip + 4) {
    if (p.at(p.length() - good) != known.at(q - good)) break;
    ++good;
  }
  if (good == skip + 4 && good < cap) {
    std::size_t bad = cap + 1, step = 4;
    while (true) {
      std::size_t probe = std::min(good + step, cap);
      if (p.suffix(probe) == known.fingerprint(q - probe + 1, probe)) {
        good = probe;
        if (good == cap) break;
        step *= 2;
      } else {
        bad = probe;
        break;
      }
    }
    while (bad - good > 1 && good < cap) {
      std::size_t mid = good + (bad - good) / 2;
      if (p.suffix(mid) == known.fingerprint(q - mid + 1, mid))
        good = mid;
      else
        bad = mid;
    }
  }
  matched = good;
  if (good == p.length()) return SuffixOrder::contains;
  if (good == q) return SuffixOrder::less;
  return known.at(q - good) < p.at(p.length() - good) ? SuffixOrder::less : SuffixOrder::greater;
}

/// Sorted ranks [lo, hi) of entries (via `entry_at`) whose classification is `contains`,
/// found with two binary searches reusing matched lengths of the bracketing entries.
template <class Classify, class EntryAt>
std::pair<std::size_t, std::size_t> find_block(std::size_t count, EntryAt&& entry_at, Classify&& cls) {
  std::size_t lo = 0, hi = count, m_lo = 0, m_hi = 0;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2, m = 0;
    SuffixOrder o = cls(entry_at(mid), std::min(m_lo, m_hi), m);
    if (o == SuffixOrder::less) {
      lo = mid + 1;
      m_lo = m;
    } else {
      hi = mid;
      m_hi = m;
    }
  }
  std::size_t first = lo;
  hi = count;
  m_hi = 0;
  std::size_t m_first = m_lo;
  // Entries at ranks >= first are not `less`; look for the first `greater`.
  if (first < count) {
    std::size_t m = 0;
    SuffixOrder o = cls(entry_at(first), std::min(m_lo, m_hi), m);
    if (o != SuffixOrder::contains) return {first, first};
    m_first = m;
    lo = first + 1;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2, mm = 0;
      SuffixOrder oo = cls(entry_at(mid), std::min(m_first, m_hi), mm);
      if (oo == SuffixOrder::contains) {
        lo = mid + 1;
      } else {
        hi = mid;
        m_hi = mm;
      }
    }
    return {first, lo};
  }
  return {first, first};
}

/// Co-lexicographically sorted set of prefix end positions of a known text.
class PrefixPool {
 public:
  explicit PrefixPool(const DynamicLce& known) : known_(&known) {}

  std::size_t size() const { return entries_.size(); }
  std::size_t operator[](std::size_t r) const { return entries_[r]; }
  const std::vector<std::uint32_t>& entries() const { return entries_; }
  void clear() { entries_.clear(); }

  void insert(std::size_t q) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), q, [&](std::uint32_t e, std::size_t v) {
      return compare_prefixes(*known_, e, v) < 0;
    });
    if (it != entries_.end() && *it == q) throw InvariantError("prefix pool: duplicate insertion");
    it = entries_.insert(it, static_cast<std::uint32_t>(q));
    if (debug_lce_enabled()) {
      if (it != entries_.begin() && compare_prefixes(*known_, *(it - 1), q) >= 0)
        throw InvariantError("prefix pool: order violated");
      if (it + 1 != entries_.end() && compare_prefixes(*known_, q, *(it + 1)) >= 0)
        throw InvariantError("prefix pool: order violated");
    }
  }

  /// Ranks [lo, hi) of entries whose prefix ends with the pattern.
  std::pair<std::size_t, std::size_t> suffix_range(const SplicedPattern& p, std::size_t lo = 0,
                                                   std::size_t hi = SIZE_MAX) const {
    hi = std::min(hi, entries_.size());
    auto r = find_block(
        hi - lo, [&](std::size_t k) { return static_cast<std::size_t>(entries_[lo + k]); },
        [&](std::size_t q, std::size_t skip, std::size_t& m) { return classify(*known_, p, q, skip, m); });
    return {lo + r.first, lo + r.second};
  }

 private:
  const DynamicLce* known_;
  std::vector<std::uint32_t> entries_;
};

/// Classification of known[1..q] against an oracle fragment u of length L, both inside oracle x.
/// Reads are charged to the oracle's ledger.
inline SuffixOrder classify_oracle(const OracleText& x, const DynamicLce& known, std::size_t u_start, std::size_t L,
                                   std::size_t q, std::size_t skip, std::size_t& matched) {
  const std::size_t c = std::min(L, q);
  std::size_t m = 0;
  if (c > 0) m = oracle_lcs_from(x.sub(u_start + L - c, c), x.sub(q - c + 1, c), std::min(skip, c));
  matched = m;
  if (m == L) return SuffixOrder::contains;
  if (m == q) return SuffixOrder::less;
  symbol_t u = x.read(u_start + L - 1 - m);
  return known.at(q - m) < u ? SuffixOrder::less : SuffixOrder::greater;
}

}  // namespace qstring
