#include "apps/applications.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

namespace qstring {

namespace {
enum class Side { s1, s2, other };

Side side_of(const PairLayout& l, std::size_t p) {
  if (p >= 1 && p <= l.len1) return Side::s1;
  if (p >= l.len1 + 2 && p <= l.len1 + 1 + l.len2) return Side::s2;
  return Side::other;
}

void check_layout(const RIndex& idx, const PairLayout& l) {
  if (idx.text_length() != l.len1 + l.len2 + 1) throw PreconditionError("pair layout does not match the index");
}

// Rows i with BWT[i] != BWT[i+1], in increasing order.
std::vector<std::size_t> boundary_rows(const RIndex& idx) {
  std::vector<std::size_t> rows;
  for (std::size_t t = 1; t < idx.bwt().runs_count(); ++t) rows.push_back(idx.bwt().run_start(t) - 1);
  return rows;
}
}  // namespace

MatchReport longest_common_substring(const RIndex& idx, const PairLayout& layout) {
  check_layout(idx, layout);
  std::size_t best = 0;
  std::vector<std::size_t> witnesses;  // s1 starts of longest candidates
  for (std::size_t i : boundary_rows(idx)) {
    std::size_t p = idx.sa(i), q = idx.sa(i + 1);
    Side a = side_of(layout, p), b = side_of(layout, q);
    if (a == Side::other || b == Side::other || a == b) continue;
    std::size_t len = idx.lce(p, q);
    if (len == 0 || len < best) continue;
    if (len > best) best = len, witnesses.clear();
    witnesses.push_back(a == Side::s1 ? p : q);
  }
  MatchReport out;
  out.kind = MatchReport::Kind::lcs;
  if (best == 0) return out;
  out.length = best;
  out.start1 = out.start2 = SIZE_MAX;
  const Text& t = idx.text();
  for (std::size_t w : witnesses) {
    Text pattern(t.begin() + static_cast<std::ptrdiff_t>(w - 1), t.begin() + static_cast<std::ptrdiff_t>(w - 1 + best));
    std::size_t first1 = SIZE_MAX, first2 = SIZE_MAX;
    for (std::size_t p : idx.locate(pattern)) {
      if (side_of(layout, p) == Side::s1) first1 = std::min(first1, p);
      if (side_of(layout, p) == Side::s2) first2 = std::min(first2, p - layout.len1 - 1);
    }
    if (std::make_pair(first1, first2) < std::make_pair(out.start1, out.start2)) out.start1 = first1, out.start2 = first2;
  }
  return out;
}

MatchReport longest_common_substring(const Text& s1, const Text& s2) {
  auto [t, layout] = concat_pair(s1, s2);
  return longest_common_substring(RIndex(std::move(t)), layout);
}

std::vector<MatchReport> maximal_unique_matches(const RIndex& idx, const PairLayout& layout) {
  check_layout(idx, layout);
  const std::size_t n = idx.size();
  std::vector<MatchReport> out;
  for (std::size_t i : boundary_rows(idx)) {
    std::size_t p = idx.sa(i), q = idx.sa(i + 1);
    Side a = side_of(layout, p), b = side_of(layout, q);
    if (a == Side::other || b == Side::other || a == b) continue;
    std::size_t len = idx.lce(p, q);
    std::size_t left = i > 1 ? idx.lce(idx.sa(i - 1), p) : 0;
    std::size_t right = i + 2 <= n ? idx.lce(q, idx.sa(i + 2)) : 0;
    if (len <= std::max(left, right)) continue;
    if (a == Side::s2) std::swap(p, q);
    out.push_back({MatchReport::Kind::mum, p, q - layout.len1 - 1, len});
  }
  std::sort(out.begin(), out.end(), [](const MatchReport& x, const MatchReport& y) {
    return std::tie(x.start1, x.start2) < std::tie(y.start1, y.start2);
  });
  return out;
}

std::vector<MatchReport> maximal_unique_matches(const Text& s1, const Text& s2) {
  auto [t, layout] = concat_pair(s1, s2);
  return maximal_unique_matches(RIndex(std::move(t)), layout);
}

std::vector<std::size_t> lyndon_factorization(const RIndex& idx, QueryLedger& ledger) {
  QueryLedger::Scope scope(ledger, "lyndon");
  const std::size_t m = idx.text_length();
  std::vector<std::size_t> starts;
  if (m == 0) return starts;
  std::size_t pos = 1, rank = idx.isa(1);
  starts.push_back(1);
  std::size_t searched = pos, width = 1;
  while (searched < m) {
    const std::size_t hi = std::min(m, pos + width);
    auto x = grover_find(ledger, searched + 1, hi, [&](std::size_t i) { return idx.isa(i) < rank; });
    if (x) {
      starts.push_back(*x);
      pos = searched = *x;
      rank = idx.isa(pos);
      width = 1;
    } else {
      searched = hi;
      width *= 2;
    }
  }
  return starts;
}

std::vector<std::size_t> lyndon_factorization(const RIndex& idx) {
  QueryLedger scratch(std::max<std::size_t>(idx.size(), 2));
  return lyndon_factorization(idx, scratch);
}

std::vector<QGram> qgram_frequencies(const RIndex& idx, std::size_t q) {
  const std::size_t m = idx.text_length(), n = idx.size();
  if (q < 1 || q > m) throw PreconditionError("qgrams: q must lie in [1..n]");
  std::vector<QGram> out;
  for (std::size_t i = 1; i <= n;) {
    const std::size_t p = idx.sa(i);
    if (p + q - 1 > m) {
      ++i;
      continue;
    }
    auto shares = [&](std::size_t j) { return idx.lce(p, idx.sa(j)) >= q; };
    std::size_t good = i, step = 1;
    while (good + step <= n && shares(good + step)) good += step, step *= 2;
    std::size_t bad = std::min(good + step, n + 1);
    while (bad - good > 1) {
      std::size_t mid = good + (bad - good) / 2;
      (shares(mid) ? good : bad) = mid;
    }
    out.push_back({p, good - i + 1});
    i = good + 1;
  }
  return out;
}

void write_matches_tsv(std::ostream& out, const std::vector<MatchReport>& m) {
  for (const auto& r : m) out << r.start1 << '\t' << r.start2 << '\t' << r.length << '\n';
}

void write_lyndon_tsv(std::ostream& out, const std::vector<std::size_t>& starts) {
  for (std::size_t k = 0; k < starts.size(); ++k) out << (k ? "\t" : "") << starts[k];
  out << '\n';
}

void write_qgrams_tsv(std::ostream& out, const std::vector<QGram>& g) {
  for (const auto& r : g) out << r.start << '\t' << r.frequency << '\n';
}

}  // namespace qstring
