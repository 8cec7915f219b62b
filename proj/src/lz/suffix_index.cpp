#include "lz/suffix_index.hpp"

#include <algorithm>

namespace qstring {

std::vector<std::uint32_t> suffix_array_with_sentinel(const Text& t) {
  const std::size_t n = t.size() + 1;
  std::vector<symbol_t> alphabet(t.begin(), t.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

  std::vector<std::uint32_t> c(n), p(n), pn(n), cn(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    c[i] = static_cast<std::uint32_t>(std::lower_bound(alphabet.begin(), alphabet.end(), t[i]) - alphabet.begin()) + 1;
  c[n - 1] = 0;

  std::size_t classes = alphabet.size() + 1;
  std::vector<std::uint32_t> cnt(std::max(classes, n) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++cnt[c[i]];
  for (std::size_t i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
  for (std::size_t i = n; i-- > 0;) p[--cnt[c[i]]] = static_cast<std::uint32_t>(i);

  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; ++i) pn[i] = static_cast<std::uint32_t>((p[i] + n - h) % n);
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[c[pn[i]]];
    for (std::size_t i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
    for (std::size_t i = n; i-- > 0;) p[--cnt[c[pn[i]]]] = pn[i];
    cn[p[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      auto cur = std::make_pair(c[p[i]], c[(p[i] + h) % n]);
      auto prev = std::make_pair(c[p[i - 1]], c[(p[i - 1] + h) % n]);
      if (cur != prev) ++classes;
      cn[p[i]] = static_cast<std::uint32_t>(classes - 1);
    }
    c.swap(cn);
    if (classes == n) break;
  }
  return p;
}

SuffixIndex::SuffixIndex(const Text& t) : n_(t.size()) {
  auto full = suffix_array_with_sentinel(t);
  sa_.assign(full.begin() + 1, full.end());
  isa_.assign(n_, 0);
  for (std::size_t r = 0; r < n_; ++r) isa_[sa_[r]] = static_cast<std::uint32_t>(r);
  lcp_.assign(n_, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t r = isa_[i];
    if (r == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa_[r - 1];
    while (i + h < n_ && j + h < n_ && t[i + h] == t[j + h]) ++h;
    lcp_[r] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  if (n_ == 0) return;
  lcp_min_ = SparseTable<std::uint32_t, std::less<>>(lcp_);
  sa_min_ = SparseTable<std::uint32_t, std::less<>>(sa_);

  tree_.push_back(sa_);
  for (std::size_t w = 1; w < n_; w <<= 1) {
    const auto& prev = tree_.back();
    std::vector<std::uint32_t> cur(n_);
    for (std::size_t b = 0; b < n_; b += 2 * w) {
      std::size_t mid = std::min(b + w, n_), end = std::min(b + 2 * w, n_);
      std::merge(prev.begin() + b, prev.begin() + mid, prev.begin() + mid, prev.begin() + end, cur.begin() + b);
    }
    tree_.push_back(std::move(cur));
  }
}

std::size_t SuffixIndex::lce(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) return 0;
  if (i == j) return n_ - i;
  std::size_t a = isa_[i], b = isa_[j];
  if (a > b) std::swap(a, b);
  return lcp_min_.query(a + 1, b);
}

std::pair<std::size_t, std::size_t> SuffixIndex::interval(std::size_t pos, std::size_t len) const {
  std::size_t r = isa_[pos];
  std::size_t lo = r, hi = r;
  if (len == 0) return {0, n_ - 1};
  // lo: smallest row with min(lcp[lo+1..r]) >= len.
  std::size_t a = 0, b = r;
  while (a < b) {
    std::size_t mid = (a + b) / 2;
    if (lcp_min_.query(mid + 1, r) >= len)
      b = mid;
    else
      a = mid + 1;
  }
  lo = a;
  a = r, b = n_ - 1;
  while (a < b) {
    std::size_t mid = (a + b + 1) / 2;
    if (lcp_min_.query(r + 1, mid) >= len)
      a = mid;
    else
      b = mid - 1;
  }
  hi = a;
  return {lo, hi};
}

std::size_t SuffixIndex::min_position(std::size_t lo, std::size_t hi) const { return sa_min_.query(lo, hi); }

std::optional<std::size_t> SuffixIndex::max_position_below(std::size_t lo, std::size_t hi, std::size_t limit) const {
  std::optional<std::size_t> best;
  std::size_t end = hi + 1;
  while (lo < end) {
    std::size_t k = 0;
    while (k + 1 < tree_.size() && lo % (std::size_t{2} << k) == 0 && lo + (std::size_t{2} << k) <= end) ++k;
    std::size_t w = std::size_t{1} << k;
    const auto& level = tree_[k];
    auto first = level.begin() + lo, last = level.begin() + std::min(lo + w, n_);
    auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(std::min<std::size_t>(limit, UINT32_MAX)));
    if (it != first) {
      std::size_t v = *(it - 1);
      if (!best || v > *best) best = v;
    }
    lo += w;
  }
  return best;
}

}  // namespace qstring
