#include "lz/lz_core.hpp"

#include <algorithm>
#include <unordered_set>

#include "lz/prefix_pool.hpp"

namespace qstring {

namespace {

// Longest previous factor (overlap allowed) for every 0-based position.
std::vector<std::uint32_t> longest_previous_factor(const SuffixIndex& idx) {
  const std::size_t n = idx.size();
  const auto& sa = idx.sa();
  std::vector<std::uint32_t> lpf(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::int64_t> psv(n, -1), nsv(n, -1);
  for (std::size_t r = 0; r < n; ++r) {
    while (!stack.empty() && sa[stack.back()] > sa[r]) {
      nsv[stack.back()] = static_cast<std::int64_t>(r);
      stack.pop_back();
    }
    psv[r] = stack.empty() ? -1 : static_cast<std::int64_t>(stack.back());
    stack.push_back(r);
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t best = 0;
    if (psv[r] >= 0) best = std::max(best, idx.lce(sa[r], sa[psv[r]]));
    if (nsv[r] >= 0) best = std::max(best, idx.lce(sa[r], sa[nsv[r]]));
    lpf[sa[r]] = static_cast<std::uint32_t>(best);
  }
  return lpf;
}

}  // namespace

Factorization lz77_greedy(const Text& text) {
  Factorization f;
  f.kind = FactorizationKind::lz77;
  f.text_len = text.size();
  if (text.empty()) return f;
  SuffixIndex idx(text);
  auto lpf = longest_previous_factor(idx);
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t len = lpf[i];
    if (len == 0) {
      f.phrases.push_back(Phrase::Literal(text[i]));
      ++i;
      continue;
    }
    auto [lo, hi] = idx.interval(i, len);
    std::size_t src = *idx.max_position_below(lo, hi, i);
    f.phrases.push_back(Phrase::Copy(src + 1, len));
    i += len;
  }
  return f;
}

Factorization lz_end_classical(const Text& text) {
  Factorization f;
  f.kind = FactorizationKind::lz_end;
  f.text_len = text.size();
  if (text.empty()) return f;
  DynamicLce full(text);
  SuffixIndex idx(text);
  auto lpf = longest_previous_factor(idx);
  PrefixPool pool(full);
  std::unordered_set<symbol_t> seen;
  std::size_t s = 1;
  while (s <= text.size()) {
    symbol_t c = text[s - 1];
    std::size_t len = 1;
    if (!seen.count(c)) {
      f.phrases.push_back(Phrase::Literal(c));
      seen.insert(c);
    } else {
      std::size_t best = 0, best_end = 0;
      for (std::size_t l = 1; l <= lpf[s - 1]; ++l) {
        SplicedPattern p{&full, s, l};
        auto [lo, hi] = pool.suffix_range(p);
        if (lo == hi) continue;
        best = l;
        best_end = *std::min_element(pool.entries().begin() + lo, pool.entries().begin() + hi);
      }
      f.phrases.push_back(Phrase::Copy(best_end - best + 1, best));
      len = best;
    }
    s += len;
    pool.insert(s - 1);
  }
  return f;
}

Factorization non_overlapping_lz77_oracle(const OracleText& o) {
  QueryLedger::Scope scope(o.ledger(), "nolz77");
  Factorization f;
  f.kind = FactorizationKind::non_overlapping;
  f.text_len = o.length();
  const std::size_t n = o.length();
  DynamicLce known;
  PrefixPool pool(known);
  std::unordered_set<symbol_t> seen;
  std::size_t s = 1;
  while (s <= n) {
    symbol_t c = o.read(s);
    if (!seen.count(c)) {
      seen.insert(c);
      f.phrases.push_back(Phrase::Literal(c));
      known.push_back(c);
      pool.insert(s);
      ++s;
      continue;
    }
    auto block_for = [&](std::size_t L) {
      return find_block(
          pool.size(), [&](std::size_t r) { return pool[r]; },
          [&](std::size_t q, std::size_t skip, std::size_t& m) {
            return classify_oracle(o, known, s, L, q, skip, m);
          });
    };
    // Length L is feasible iff X[s..s+L) occurs inside X[1..s).
    const std::size_t cap = std::min(n - s + 1, s - 1);
    std::size_t good = 1, bad = cap + 1;
    auto good_block = block_for(1);
    for (std::size_t step = 1; good < cap;) {
      std::size_t L = std::min(good + step, cap);
      auto b = block_for(L);
      if (b.first == b.second) {
        bad = L;
        break;
      }
      good = L;
      good_block = b;
      step *= 2;
    }
    while (bad - good > 1) {
      std::size_t L = good + (bad - good) / 2;
      auto b = block_for(L);
      if (b.first == b.second) {
        bad = L;
      } else {
        good = L;
        good_block = b;
      }
    }
    std::size_t q = *std::min_element(pool.entries().begin() + good_block.first,
                                      pool.entries().begin() + good_block.second);
    f.phrases.push_back(Phrase::Copy(q - good + 1, good));
    known.append_copy(q - good + 1, good);
    for (std::size_t k = 0; k < good; ++k) pool.insert(s + k);
    s += good;
  }
  return f;
}

std::size_t OccurrenceIndex::leftmost_occurrence(std::size_t start, std::size_t len) const {
  if (start < 1 || start - 1 + len > idx_.size() || len == 0) throw RangeError("leftmost_occurrence: bad fragment");
  auto [lo, hi] = idx_.interval(start - 1, len);
  return idx_.min_position(lo, hi) + 1;
}

std::size_t OccurrenceIndex::rightmost_occurrence_before(std::size_t start, std::size_t len, std::size_t limit) const {
  auto [lo, hi] = idx_.interval(start - 1, len);
  auto p = idx_.max_position_below(lo, hi, limit - 1);
  if (!p) throw RangeError("rightmost_occurrence_before: no occurrence");
  return *p + 1;
}

Factorization convert_to_lz77(const Factorization& f) {
  Text text = decompress(f);
  Factorization out;
  out.kind = FactorizationKind::lz77;
  out.text_len = text.size();
  if (text.empty()) return out;
  OccurrenceIndex occ(text);
  const std::size_t n = text.size();
  std::size_t s = 1;
  while (s <= n) {
    if (occ.leftmost_occurrence(s, 1) == s) {
      out.phrases.push_back(Phrase::Literal(text[s - 1]));
      ++s;
      continue;
    }
    const std::size_t cap = n - s + 1;
    std::size_t good = 1, bad = cap + 1;
    for (std::size_t step = 1; good < cap;) {
      std::size_t L = std::min(good + step, cap);
      if (occ.leftmost_occurrence(s, L) < s) {
        good = L;
        step *= 2;
      } else {
        bad = L;
        break;
      }
    }
    while (bad - good > 1) {
      std::size_t L = good + (bad - good) / 2;
      if (occ.leftmost_occurrence(s, L) < s)
        good = L;
      else
        bad = L;
    }
    out.phrases.push_back(Phrase::Copy(occ.rightmost_occurrence_before(s, good, s), good));
    s += good;
  }
  return out;
}

Rational substring_complexity(const Text& text) {
  Rational best{0, 1};
  const std::size_t n = text.size();
  if (n == 0) return best;
  SuffixIndex idx(text);
  std::vector<std::int64_t> diff(n + 2, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t len = n - idx.sa()[r];
    std::size_t l = r == 0 ? 0 : idx.lcp()[r];
    diff[l + 1] += 1;
    diff[len + 1] -= 1;
  }
  std::int64_t d = 0;
  for (std::size_t q = 1; q <= n; ++q) {
    d += diff[q];
    auto dq = static_cast<std::uint64_t>(d);
    if (dq * best.den > best.num * q) best = Rational{dq, q};
  }
  return best;
}

}  // namespace qstring
