#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace qstring::testkit {

namespace {
bool same(const Text& t, std::size_t a, std::size_t b, std::size_t len) {
  for (std::size_t k = 0; k < len; ++k)
    if (t[a + k] != t[b + k]) return false;
  return true;
}
bool fresh(const Text& t, std::size_t i) { return std::find(t.begin(), t.begin() + i, t[i]) == t.begin() + i; }
}  // namespace

Factorization naive_lz77(const Text& t) {
  Factorization f;
  f.kind = FactorizationKind::lz77;
  f.text_len = t.size();
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t best = 0, src = 0;
    for (std::size_t p = 0; p < i; ++p) {
      std::size_t l = 0;
      while (i + l < t.size() && t[p + l] == t[i + l]) ++l;
      if (l >= best && l > 0) best = l, src = p;
    }
    if (best == 0) {
      f.phrases.push_back(Phrase::Literal(t[i]));
      ++i;
    } else {
      f.phrases.push_back(Phrase::Copy(src + 1, best));
      i += best;
    }
  }
  return f;
}

Factorization naive_non_overlapping(const Text& t) {
  Factorization f;
  f.kind = FactorizationKind::non_overlapping;
  f.text_len = t.size();
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t best = 0, src = 0;
    for (std::size_t len = std::min(i, t.size() - i); len >= 1 && best == 0; --len)
      for (std::size_t p = 0; p + len <= i; ++p)
        if (same(t, p, i, len)) {
          best = len, src = p;
          break;
        }
    if (best == 0) {
      f.phrases.push_back(Phrase::Literal(t[i]));
      ++i;
    } else {
      f.phrases.push_back(Phrase::Copy(src + 1, best));
      i += best;
    }
  }
  return f;
}

Factorization naive_lz_end_tau(const Text& t, std::size_t tau) {
  Factorization f;
  f.kind = tau == 0 ? FactorizationKind::lz_end : FactorizationKind::lz_end_tau;
  f.tau = tau;
  f.text_len = t.size();
  const std::size_t n = t.size();
  std::vector<bool> is_end(n + 1, false);
  std::size_t s = 1;
  while (s <= n) {
    std::size_t len = 1;
    if (fresh(t, s - 1)) {
      f.phrases.push_back(Phrase::Literal(t[s - 1]));
    } else {
      bool found = false;
      for (len = n - s + 1; len >= 1 && !found; --len) {
        for (std::size_t q = len; q < s; ++q) {
          bool eligible = is_end[q] || (tau > 0 && q % tau == 1 % tau);
          if (eligible && same(t, q - len, s - 1, len)) {
            f.phrases.push_back(Phrase::Copy(q - len + 1, len));
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
    s += len;
    is_end[s - 1] = true;
  }
  return f;
}

std::optional<std::size_t> naive_tau_far(const Text& t, std::size_t tau, const std::vector<std::size_t>& ends,
                                         std::size_t s, std::size_t j) {
  std::vector<bool> is_end(t.size() + 1, false);
  for (auto e : ends) is_end[e] = true;
  std::size_t lo = j > s + tau ? j - tau : s;
  for (std::size_t h = j + 1; h-- > lo;) {
    std::size_t len = h - s + 1;
    for (std::size_t q = len; q < s; ++q) {
      bool eligible = is_end[q] || (tau > 0 && q % tau == 1 % tau);
      if (eligible && same(t, q - len, s - 1, len)) return h;
    }
  }
  return std::nullopt;
}

std::size_t naive_leftmost_occurrence(const Text& t, std::size_t start, std::size_t len) {
  for (std::size_t p = 0; p + len <= t.size(); ++p)
    if (same(t, p, start - 1, len)) return p + 1;
  return 0;
}

std::pair<std::size_t, std::size_t> naive_substring_complexity(const Text& t) {
  std::pair<std::size_t, std::size_t> best{0, 1};
  for (std::size_t q = 1; q <= t.size(); ++q) {
    std::set<Text> grams;
    for (std::size_t i = 0; i + q <= t.size(); ++i) grams.insert(Text(t.begin() + i, t.begin() + i + q));
    if (grams.size() * best.second > best.first * q) best = {grams.size(), q};
  }
  return best;
}

Text naive_decompress(const Factorization& f) {
  Text out;
  for (const auto& p : f.phrases) {
    if (p.literal)
      out.push_back(p.symbol);
    else
      for (std::size_t k = 0; k < p.len; ++k) out.push_back(out.at(p.src - 1 + k));
  }
  return out;
}

std::size_t min_lz77_like_size(const Text& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> dp(n + 1, SIZE_MAX);
  dp[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (dp[i] == SIZE_MAX) continue;
    for (std::size_t l = 1; i + l <= n; ++l) {
      bool ok = l == 1;
      for (std::size_t p = 0; p < i && !ok; ++p) ok = same(t, p, i, l);
      if (ok) dp[i + l] = std::min(dp[i + l], dp[i] + 1);
    }
  }
  return dp[n];
}

std::size_t dp_edit_distance(const Text& x, const Text& y) {
  std::vector<std::size_t> prev(y.size() + 1), cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x[i - 1] != y[j - 1])});
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

DpTables dp_tables(const Text& x, const Text& y) {
  const std::size_t n = x.size(), m = y.size();
  DpTables t;
  t.fwd.assign(n + 1, std::vector<std::uint32_t>(m + 1));
  t.bwd.assign(n + 1, std::vector<std::uint32_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 || j == 0) {
        t.fwd[i][j] = static_cast<std::uint32_t>(i + j);
        continue;
      }
      t.fwd[i][j] = std::min({t.fwd[i - 1][j] + 1, t.fwd[i][j - 1] + 1,
                              t.fwd[i - 1][j - 1] + static_cast<std::uint32_t>(x[i - 1] != y[j - 1])});
    }
  for (std::size_t i = n + 1; i-- > 0;)
    for (std::size_t j = m + 1; j-- > 0;) {
      if (i == n || j == m) {
        t.bwd[i][j] = static_cast<std::uint32_t>((n - i) + (m - j));
        continue;
      }
      t.bwd[i][j] =
          std::min({t.bwd[i + 1][j] + 1, t.bwd[i][j + 1] + 1, t.bwd[i + 1][j + 1] + static_cast<std::uint32_t>(x[i] != y[j])});
    }
  return t;
}

std::optional<Text> apply_edits(const Text& x, const std::vector<RawEdit>& edits) {
  Text out;
  std::size_t xi = 1;  // next unread position of x
  for (const auto& e : edits) {
    if (e.op == 'I') {
      if (e.pos < out.size() + 1) return std::nullopt;
      while (out.size() + 1 < e.pos) {
        if (xi > x.size()) return std::nullopt;
        out.push_back(x[xi++ - 1]);
      }
      out.push_back(e.symbol);
    } else {
      if (e.pos < xi || e.pos > x.size()) return std::nullopt;
      while (xi < e.pos) out.push_back(x[xi++ - 1]);
      if (e.op == 'S') out.push_back(e.symbol);
      ++xi;
    }
  }
  while (xi <= x.size()) out.push_back(x[xi++ - 1]);
  return out;
}

std::vector<std::size_t> naive_sa(const Text& t) {
  Text s(t.size() + 1);
  for (std::size_t i = 0; i < t.size(); ++i) s[i] = t[i] + 1;
  s[t.size()] = 0;
  std::vector<std::size_t> sa(s.size());
  for (std::size_t i = 0; i < sa.size(); ++i) sa[i] = i;
  std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
  });
  for (auto& v : sa) ++v;
  return sa;
}

Text naive_bwt(const Text& t) {
  auto sa = naive_sa(t);
  Text b(sa.size());
  for (std::size_t r = 0; r < sa.size(); ++r) b[r] = sa[r] == 1 ? 0 : t[sa[r] - 2] + 1;
  return b;
}

NaiveBwtTables naive_bwt_tables(const Text& t) {
  NaiveBwtTables nt;
  auto sa0 = naive_sa(t);
  const std::size_t n = sa0.size();
  nt.sa.assign(n + 1, 0);
  nt.isa.assign(n + 1, 0);
  nt.lf.assign(n + 1, 0);
  for (std::size_t r = 1; r <= n; ++r) nt.sa[r] = sa0[r - 1], nt.isa[sa0[r - 1]] = r;
  for (std::size_t r = 1; r <= n; ++r) nt.lf[r] = nt.sa[r] == 1 ? nt.isa[n] : nt.isa[nt.sa[r] - 1];
  nt.bwt = Text(n);
  for (std::size_t r = 1; r <= n; ++r) nt.bwt[r - 1] = nt.sa[r] == 1 ? 0 : t[nt.sa[r] - 2] + 1;
  return nt;
}

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> naive_pullback(const NaiveBwtTables& nt,
                                                                               std::size_t s, std::size_t e) {
  for (std::size_t k = 0;; ++k) {
    for (std::size_t i = s; i <= e; ++i)
      if (nt.run_start(i)) return std::make_tuple(k, s, e);
    const std::size_t ns = nt.lf[s];
    for (std::size_t i = s; i <= e; ++i)
      if (nt.lf[i] != ns + (i - s)) return std::nullopt;
    e = nt.lf[e];
    s = ns;
  }
}

std::vector<std::pair<symbol_t, std::size_t>> naive_runs(const Text& bwt) {
  std::vector<std::pair<symbol_t, std::size_t>> runs;
  for (symbol_t c : bwt) {
    if (!runs.empty() && runs.back().first == c)
      ++runs.back().second;
    else
      runs.emplace_back(c, 1);
  }
  return runs;
}

std::vector<std::size_t> naive_occurrences(const Text& t, const Text& p) {
  std::vector<std::size_t> out;
  if (p.size() > t.size()) return out;
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i)
    if (std::equal(p.begin(), p.end(), t.begin() + i)) out.push_back(i + 1);
  return out;
}

std::size_t naive_lcs_length(const Text& a, const Text& b) {
  std::size_t best = 0;
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : 0;
      best = std::max(best, cur[j]);
    }
    std::swap(prev, cur);
  }
  return best;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> naive_mums(const Text& a, const Text& b) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t len = 1; i + len <= a.size(); ++len) {
      Text w(a.begin() + i, a.begin() + i + len);
      auto oa = naive_occurrences(a, w), ob = naive_occurrences(b, w);
      if (oa.size() != 1 || ob.size() != 1) continue;
      std::size_t j = ob[0] - 1;
      bool left_max = i == 0 || j == 0 || a[i - 1] != b[j - 1];
      bool right_max = i + len == a.size() || j + len == b.size() || a[i + len] != b[j + len];
      if (left_max && right_max) out.emplace_back(i + 1, j + 1, len);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> duval_starts(const Text& t) {
  std::vector<std::size_t> starts;
  std::size_t i = 0, n = t.size();
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && t[k] <= t[j]) {
      k = t[k] < t[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      starts.push_back(i + 1);
      i += j - k;
    }
  }
  return starts;
}

std::map<Text, std::size_t> hash_qgrams(const Text& t, std::size_t q) {
  std::map<Text, std::size_t> m;
  for (std::size_t i = 0; i + q <= t.size(); ++i) ++m[Text(t.begin() + i, t.begin() + i + q)];
  return m;
}

Text random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  std::uniform_int_distribution<symbol_t> d(0, static_cast<symbol_t>(sigma - 1));
  Text t(n);
  for (auto& c : t) c = d(rng);
  return t;
}

Text planted_z_text(std::mt19937_64& rng, std::size_t n, std::size_t z, std::size_t sigma) {
  std::uniform_int_distribution<symbol_t> sym(0, static_cast<symbol_t>(sigma - 1));
  Text t;
  for (symbol_t c = 0; c < sigma && t.size() < n; ++c) t.push_back(c);
  std::shuffle(t.begin(), t.end(), rng);
  const std::size_t copies = std::max<std::size_t>(1, z / 2);
  const std::size_t mean = std::max<std::size_t>(1, n / copies);
  while (t.size() < n) {
    std::uniform_int_distribution<std::size_t> len_d(std::max<std::size_t>(1, mean / 2), mean + mean / 2);
    std::uniform_int_distribution<std::size_t> src_d(0, t.size() - 1);
    std::size_t len = len_d(rng), src = src_d(rng);
    for (std::size_t k = 0; k < len && t.size() < n; ++k) t.push_back(t[src + k]);
    if (t.size() < n) t.push_back(sym(rng));
  }
  return t;
}

Text planted_edits(std::mt19937_64& rng, const Text& x, std::size_t k, std::size_t sigma) {
  Text y = x;
  std::uniform_int_distribution<symbol_t> sym(0, static_cast<symbol_t>(sigma - 1));
  for (std::size_t e = 0; e < k; ++e) {
    int op = static_cast<int>(rng() % 3);
    if (y.empty()) op = 1;
    if (op == 0) {
      y.erase(y.begin() + static_cast<std::ptrdiff_t>(rng() % y.size()));
    } else if (op == 1) {
      y.insert(y.begin() + static_cast<std::ptrdiff_t>(rng() % (y.size() + 1)), sym(rng));
    } else {
      std::size_t p = rng() % y.size();
      if (sigma > 1) {
        symbol_t c;
        do c = sym(rng); while (c == y[p]);
        y[p] = c;
      }
    }
  }
  return y;
}

std::vector<Text> all_strings(std::size_t n, std::size_t sigma) {
  std::vector<Text> out;
  Text cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == sigma - 1) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

}  // namespace qstring::testkit
