#include "lz/lz_end_tau.hpp"

#include <algorithm>
#include <memory>
#include <cstdio>

namespace qstring {

std::size_t kth_of_merged_ranges(const PrefixPool& pool, const DynamicLce& known,
                                 const std::vector<MergedRange>& ranges, std::size_t x) {
  std::size_t total = 0;
  for (const auto& r : ranges) total += r.hi - r.lo;
  if (x < 1 || x > total) throw RangeError("kth_of_merged_ranges: rank out of bounds");

  const std::size_t m = ranges.size();
  thread_local std::vector<std::size_t> lo, hi, below, upto;
  thread_local std::vector<std::pair<std::size_t, std::size_t>> medians;  // (value, weight)
  lo.resize(m), hi.resize(m), below.resize(m), upto.resize(m);
  for (std::size_t r = 0; r < m; ++r) lo[r] = ranges[r].lo, hi[r] = ranges[r].hi;
  auto value = [&](std::size_t r, std::size_t k) { return pool[k] - ranges[r].offset; };
  auto less = [&](std::size_t a, std::size_t b) { return compare_prefixes(known, a, b) < 0; };

  while (true) {
    std::size_t active = 0, last = 0;
    total = 0;
    for (std::size_t r = 0; r < m; ++r)
      if (lo[r] < hi[r]) ++active, last = r, total += hi[r] - lo[r];
    if (active == 1) return value(last, lo[last] + x - 1);

    medians.clear();
    for (std::size_t r = 0; r < m; ++r)
      if (lo[r] < hi[r]) medians.emplace_back(value(r, lo[r] + (hi[r] - lo[r] - 1) / 2), hi[r] - lo[r]);
    std::sort(medians.begin(), medians.end(), [&](const auto& a, const auto& b) { return less(a.first, b.first); });
    std::size_t acc = 0, pivot = medians.back().first;
    for (const auto& [v, w] : medians) {
      acc += w;
      if (2 * acc >= total) {
        pivot = v;
        break;
      }
    }

    std::size_t n_below = 0, n_upto = 0;
    for (std::size_t r = 0; r < m; ++r) {
      below[r] = upto[r] = 0;
      if (lo[r] >= hi[r]) continue;
      std::size_t a = lo[r], b = hi[r];
      while (a < b) {
        std::size_t mid = (a + b) / 2;
        if (less(value(r, mid), pivot)) a = mid + 1; else b = mid;
      }
      below[r] = a - lo[r];
      b = hi[r];
      while (a < b) {
        std::size_t mid = (a + b) / 2;
        if (!less(pivot, value(r, mid))) a = mid + 1; else b = mid;
      }
      upto[r] = a - lo[r];
      n_below += below[r];
      n_upto += upto[r];
    }
    if (x <= n_below) {
      for (std::size_t r = 0; r < m; ++r) hi[r] = lo[r] + below[r];
    } else if (x <= n_upto) {
      return pivot;
    } else {
      x -= n_upto;
      for (std::size_t r = 0; r < m; ++r) lo[r] += upto[r];
    }
  }
}

LzEndTauFactorizer::LzEndTauFactorizer(const OracleText& o, std::size_t tau) : o_(o), pool_(known_) { reset(o, tau); }

void LzEndTauFactorizer::reset(const OracleText& o, std::size_t tau) {
  if (tau == 0) throw PreconditionError("tau must be positive");
  o_ = o;
  tau_ = tau;
  s_ = 1;
  known_.clear();
  known_.reserve(o.length());
  pool_.clear();
  cache_.assign(o.length() + 1, -1);
  seen_.clear();
  phrases_.clear();
  pending_.reset();
}

symbol_t LzEndTauFactorizer::sym(std::size_t i) {
  if (cache_[i] < 0) cache_[i] = o_.read(i);
  return static_cast<symbol_t>(cache_[i]);
}

LzEndTauFactorizer::TauFar LzEndTauFactorizer::tau_far_holds(std::size_t j) {
  const std::size_t s = s_;
  if (j < s || j > o_.length()) throw RangeError("tau_far_holds: j out of range");
  const std::size_t b = j > s + tau_ ? j - tau_ : s;

  Text& w = window_;
  PrefixFingerprints& wh = window_hashes_;
  w.clear();
  wh.clear();
  for (std::size_t i = b; i <= j; ++i) {
    w.push_back(sym(i));
    wh.push_back(w.back());
  }

  // Per-h pool ranges of prefixes ending with X[b..h].
  auto& range = ranges_;
  range.resize(j - b + 1);
  for (std::size_t h = b; h <= j; ++h) {
    SplicedPattern p{&known_, 1, 0, &w, &wh, h - b + 1};
    range[h - b] = pool_.suffix_range(p);
  }

  TauFar out;
  if (b == s) {
    for (std::size_t h = j + 1; h-- > b;) {
      if (range[h - b].first < range[h - b].second) {
        out.holds = true;
        out.h = h;
        out.sources = range[h - b];
        return out;
      }
    }
    return out;
  }

  auto& merged = merged_;
  merged.clear();
  std::size_t total = 0;
  for (std::size_t h = b; h <= j; ++h) {
    auto [lo, hi] = range[h - b];
    if (lo < hi) {
      merged.push_back({lo, hi, h - b + 1});
      total += hi - lo;
    }
  }
  if (merged.empty()) return out;

  const std::size_t L = b - s;
  auto entry_at = [&](std::size_t rank) { return kth_of_merged_ranges(pool_, known_, merged, rank + 1); };
  auto block = find_block(total, entry_at, [&](std::size_t e, std::size_t skip, std::size_t& m) {
    return classify_oracle(o_, known_, s, L, e, skip, m);
  });
  if (block.first == block.second) return out;

  // X[s..b) now equals a known fragment ending at p.
  const std::size_t p = entry_at(block.first);
  for (std::size_t h = j + 1; h-- > b;) {
    auto [lo, hi] = range[h - b];
    if (lo == hi) continue;
    SplicedPattern full{&known_, p - L + 1, L, &w, &wh, h - b + 1};
    auto src = pool_.suffix_range(full, lo, hi);
    if (src.first < src.second) {
      out.holds = true;
      out.h = h;
      out.sources = src;
      return out;
    }
  }
  throw InvariantError("tau_far_holds: located block has no witness");
}

Phrase LzEndTauFactorizer::next_factor() {
  if (done()) throw PreconditionError("next_factor: text exhausted");
  if (pending_) throw InvariantError("next_factor: previous phrase not inserted");
  const std::size_t s = s_, n = o_.length();
  symbol_t c = sym(s);
  if (!std::binary_search(seen_.begin(), seen_.end(), c)) {
    pending_ = Phrase::Literal(c);
    return *pending_;
  }

  std::size_t good = std::min(n, s + tau_);
  std::optional<TauFar> good_res;
  std::size_t bad = n + 1;
  for (std::size_t step = 1; good < n;) {
    std::size_t j = std::min(good + step, n);
    TauFar r = tau_far_holds(j);
    if (!r.holds) {
      bad = j;
      break;
    }
    good = j;
    good_res = r;
    step *= 2;
  }
  while (bad - good > 1) {
    std::size_t j = good + (bad - good) / 2;
    TauFar r = tau_far_holds(j);
    if (r.holds) {
      good = j;
      good_res = r;
    } else {
      bad = j;
    }
  }
  if (!good_res) good_res = tau_far_holds(good);
  if (!good_res->holds) throw InvariantError("next_factor: no potential factor for a repeated symbol");

  const std::size_t len = *good_res->h - s + 1;
  const auto& e = pool_.entries();
  std::size_t q = *std::min_element(e.begin() + good_res->sources.first, e.begin() + good_res->sources.second);
  pending_ = Phrase::Copy(q - len + 1, len);
  return *pending_;
}

void LzEndTauFactorizer::insert_prefixes(const Phrase& p) {
  if (!pending_ || !(*pending_ == p)) throw InvariantError("insert_prefixes: phrase was not just emitted");
  pending_.reset();
  const std::size_t s = s_;
  if (p.literal) {
    known_.push_back(p.symbol);
    seen_.insert(std::lower_bound(seen_.begin(), seen_.end(), p.symbol), p.symbol);
  } else {
    known_.append_copy(p.src, p.len);
  }
  const std::size_t e = s + p.length() - 1;
  for (std::size_t q = s; q <= e; ++q) {
    if (q < e && q % tau_ != 1 % tau_) continue;
    pool_.insert(q);
  }
  phrases_.push_back(p);
  s_ = e + 1;
}

Phrase LzEndTauFactorizer::step() {
  Phrase p = next_factor();
  insert_prefixes(p);
  return p;
}

Factorization LzEndTauFactorizer::result() const {
  Factorization f;
  f.kind = FactorizationKind::lz_end_tau;
  f.tau = tau_;
  f.text_len = o_.length();
  f.phrases = phrases_;
  return f;
}

namespace {
std::size_t tau_for(std::size_t n, std::size_t z_guess) {
  std::size_t t = 1;
  while (t * t * z_guess < n) ++t;
  return t;
}
}  // namespace

namespace {
LzEndTauFactorizer& reusable_factorizer(const OracleText& o, std::size_t tau) {
  thread_local std::unique_ptr<LzEndTauFactorizer> fz;
  if (fz)
    fz->reset(o, tau);
  else
    fz = std::make_unique<LzEndTauFactorizer>(o, tau);
  return *fz;
}
}  // namespace

std::optional<Factorization> lz_end_tau_build(const OracleText& o, const LzEndTauOptions& opt) {
  QueryLedger::Scope scope(o.ledger(), "lzend_tau");
  const std::size_t n = o.length();
  if (opt.tau != 0) {
    LzEndTauFactorizer& fz = reusable_factorizer(o, opt.tau);
    while (!fz.done()) {
      if (fz.phrase_count() >= opt.max_phrases) return std::nullopt;
      fz.step();
    }
    return fz.result();
  }
  if (n == 0) {
    Factorization f;
    f.kind = FactorizationKind::lz_end_tau;
    f.tau = 1;
    return f;
  }
  for (std::size_t z_guess = 1, round = 1;; z_guess *= 2, ++round) {
    char name[32];
    std::snprintf(name, sizeof name, "round%zu", round);
    QueryLedger::Scope round_scope(o.ledger(), name);
    LzEndTauFactorizer& fz = reusable_factorizer(o, tau_for(n, z_guess));
    const std::size_t cap = std::min(z_guess, opt.max_phrases);
    while (!fz.done() && fz.phrase_count() < cap) fz.step();
    if (fz.done()) return fz.result();
    if (cap == opt.max_phrases) return std::nullopt;
  }
}

Factorization lz_end_tau_build(const OracleText& o) { return *lz_end_tau_build(o, LzEndTauOptions{}); }

Factorization lz_end_tau_build(const OracleText& o, std::size_t tau) {
  return *lz_end_tau_build(o, LzEndTauOptions{tau, SIZE_MAX});
}

}  // namespace qstring
