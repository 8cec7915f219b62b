#include "bwt/r_index.hpp"

#include <algorithm>

#include "lz/suffix_index.hpp"

namespace qstring {

std::optional<std::size_t> SampledSa::find(std::size_t row) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), std::make_pair(row, std::size_t{0}));
  if (it == rows.end() || it->first != row) return std::nullopt;
  return it->second;
}

std::size_t default_index_tau(std::size_t n, std::size_t r) {
  std::size_t want = ceil_sqrt((n + r - 1) / std::max<std::size_t>(r, 1));
  std::size_t tau = 1;
  while (tau < want) tau *= 2;
  return tau;
}

namespace {
SampledSa sample_rows(const std::vector<std::uint32_t>& sa0, const RlBwt& bwt, std::size_t tau) {
  const std::size_t n = sa0.size();
  SampledSa s;
  s.tau = tau;
  std::vector<bool> take(n + 1, false);
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t p = sa0[r - 1] + 1;
    if (p == n || (p - 1) % tau == 0) take[r] = true;
  }
  for (std::size_t t = 0; t < bwt.runs_count(); ++t) {
    take[bwt.run_start(t)] = true;
    take[bwt.run_start(t) + bwt.runs()[t].length - 1] = true;
  }
  for (std::size_t r = 1; r <= n; ++r)
    if (take[r]) s.rows.emplace_back(r, sa0[r - 1] + 1);
  return s;
}
}  // namespace

RIndex::RIndex(Text text, std::size_t tau) : text_(std::move(text)), lce_(text_) {
  const auto sa0 = suffix_array_with_sentinel(text_);
  bwt_ = rlbwt_from_suffix_array(text_, sa0);
  if (tau == 0) tau = default_index_tau(bwt_.size(), bwt_.runs_count());
  shortcut_ = LfShortcut(bwt_, tau);
  samples_ = sample_rows(sa0, bwt_, tau);
}

RIndex::RIndex(Text text, RlBwt bwt, LfShortcut shortcut, SampledSa samples)
    : text_(std::move(text)),
      bwt_(std::move(bwt)),
      shortcut_(std::move(shortcut)),
      samples_(std::move(samples)),
      lce_(text_) {
  if (bwt_.size() != text_.size() + 1 || shortcut_.rows() != bwt_.size() || samples_.tau != shortcut_.tau())
    throw ValidationError("index: components disagree on size or tau");
}

std::size_t RIndex::sa(std::size_t i) const {
  if (i < 1 || i > size()) throw RangeError("sa: row out of range");
  for (std::size_t steps = 0;; ++steps) {
    if (auto v = samples_.find(i)) return *v + steps;
    if (steps > samples_.tau) throw InvariantError("sa: no sample within tau steps");
    i = bwt_.lf(i);
  }
}

std::size_t RIndex::lce(std::size_t p, std::size_t q) const { return lce_.lce(p, q); }

bool RIndex::suffix_less(std::size_t p, std::size_t q) const {
  if (p == q) return false;
  const std::size_t l = lce(p, q);
  const std::size_t m = text_length();
  if (p + l > m) return true;
  if (q + l > m) return false;
  return text_[p + l - 1] < text_[q + l - 1];
}

std::size_t RIndex::isa(std::size_t p) const {
  if (p < 1 || p > size()) throw RangeError("isa: position out of range");
  std::size_t lo = 1, hi = size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (suffix_less(sa(mid), p))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

std::optional<std::pair<std::size_t, std::size_t>> RIndex::interval(const Text& pattern) const {
  if (pattern.empty()) throw PreconditionError("pattern must be non-empty");
  std::size_t sp = 1, ep = size();
  for (std::size_t k = pattern.size(); k-- > 0;) {
    const symbol_t c = pattern[k] + 1;
    if (!bwt_.contains(c)) return std::nullopt;
    sp = bwt_.smaller(c) + bwt_.rank(c, sp - 1) + 1;
    ep = bwt_.smaller(c) + bwt_.rank(c, ep);
    if (sp > ep) return std::nullopt;
  }
  return std::make_pair(sp, ep);
}

std::size_t RIndex::count(const Text& pattern) const {
  auto iv = interval(pattern);
  return iv ? iv->second - iv->first + 1 : 0;
}

std::vector<std::size_t> RIndex::locate(const Text& pattern) const {
  std::vector<std::size_t> out;
  if (auto iv = interval(pattern))
    for (std::size_t i = iv->first; i <= iv->second; ++i) out.push_back(sa(i));
  std::sort(out.begin(), out.end());
  return out;
}

Pullback RIndex::run_boundary_pullback(std::size_t s, std::size_t e) const {
  if (s < 1 || s > e || e > size()) throw RangeError("pullback: bad interval");
  if (bwt_.run_of(s) != bwt_.run_of(e) || bwt_.is_run_start(s)) return {0, s, e};
  // Rows [s-1..e] all read the same k symbols to their left iff their LF^k images stay
  // e-s+1 apart and share a k-symbol prefix. The largest such k is the first step at
  // which [s..e] meets a run start.
  const std::size_t pa = sa(s - 1), pe = sa(e);
  auto holds = [&](std::size_t k) {
    if (pa <= k || pe <= k) return false;
    return isa(pe - k) - isa(pa - k) == e - (s - 1) && lce(pa - k, pe - k) >= k;
  };
  std::size_t good = 0, bad = 1;
  while (holds(bad)) good = bad, bad *= 2;
  while (bad - good > 1) {
    std::size_t mid = good + (bad - good) / 2;
    (holds(mid) ? good : bad) = mid;
  }
  const std::size_t ps = sa(s);
  return {good, isa(ps - good), isa(pe - good)};
}

}  // namespace qstring
