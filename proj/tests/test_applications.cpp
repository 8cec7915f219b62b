#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "apps/applications.hpp"
#include "apps/lower_bound.hpp"
#include "lz/lz_core.hpp"
#include "oracles.hpp"

using namespace qstring;

namespace {
// Smallest s1 start of a longest common substring, then the smallest s2 start of it.
std::tuple<std::size_t, std::size_t, std::size_t> brute_lcs(const Text& a, const Text& b) {
  const std::size_t len = testkit::naive_lcs_length(a, b);
  if (len == 0) return {0, 0, 0};
  for (std::size_t i = 0; i + len <= a.size(); ++i) {
    Text w(a.begin() + i, a.begin() + i + len);
    auto occ = testkit::naive_occurrences(b, w);
    if (!occ.empty()) return {i + 1, occ.front(), len};
  }
  FAIL("no witness");
  return {};
}

std::tuple<std::size_t, std::size_t, std::size_t> as_tuple(const MatchReport& m) {
  return {m.start1, m.start2, m.length};
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> as_tuples(const std::vector<MatchReport>& v) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (const auto& m : v) out.push_back(as_tuple(m));
  return out;
}

std::map<Text, std::size_t> as_map(const RIndex& idx, const std::vector<QGram>& g, std::size_t q) {
  std::map<Text, std::size_t> out;
  for (const auto& e : g) {
    Text w(idx.text().begin() + e.start - 1, idx.text().begin() + e.start - 1 + q);
    REQUIRE(out.emplace(w, e.frequency).second);
  }
  return out;
}

std::vector<bool> random_oracle(std::mt19937_64& rng, std::size_t n) {
  std::vector<bool> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = rng() & 1;
  return f;
}

std::size_t ones(const std::vector<bool>& f) { return static_cast<std::size_t>(std::count(f.begin(), f.end(), true)); }
}  // namespace

TEST_CASE("longest common substring examples") {
  MatchReport m = longest_common_substring(to_text("abcde"), to_text("cdefg"));
  CHECK(m == MatchReport{MatchReport::Kind::lcs, 3, 1, 3});
  Text x = to_text("mississippi");
  CHECK(as_tuple(longest_common_substring(x, x)) == std::make_tuple(std::size_t{1}, std::size_t{1}, x.size()));
  CHECK(longest_common_substring(to_text("abc"), to_text("xyz")).length == 0);
  CHECK(longest_common_substring(Text{}, to_text("xyz")).length == 0);
  CHECK(longest_common_substring(Text{}, Text{}).length == 0);
}

TEST_CASE("longest common substring matches brute force") {
  for (std::size_t la = 1; la <= 5; ++la)
    for (const Text& a : testkit::all_strings(la, 2))
      for (std::size_t lb = 1; lb <= 5; ++lb)
        for (const Text& b : testkit::all_strings(lb, 2)) REQUIRE(as_tuple(longest_common_substring(a, b)) == brute_lcs(a, b));
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t sigma = 1 + rng() % 4;
    Text a = testkit::random_text(rng, 1 + rng() % 50, sigma), b = testkit::random_text(rng, 1 + rng() % 50, sigma);
    MatchReport m = longest_common_substring(a, b);
    REQUIRE(as_tuple(m) == brute_lcs(a, b));
    CHECK(std::equal(a.begin() + m.start1 - 1, a.begin() + m.start1 - 1 + m.length, b.begin() + m.start2 - 1));
  }
}

TEST_CASE("pair index layout is checked") {
  RIndex idx(to_text("abc"));
  CHECK_THROWS_AS(longest_common_substring(idx, PairLayout{2, 2, 9}), PreconditionError);
  CHECK_THROWS_AS(maximal_unique_matches(idx, PairLayout{3, 3, 9}), PreconditionError);
}

TEST_CASE("maximal unique matches examples") {
  Text x = to_text("abcd");
  auto m = maximal_unique_matches(x, x);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == MatchReport{MatchReport::Kind::mum, 1, 1, 4});
  CHECK(maximal_unique_matches(to_text("ab"), to_text("cd")).empty());
  // A match ending S2 is found even though it starts at the last position of S2.
  CHECK(as_tuples(maximal_unique_matches(to_text("ab"), to_text("cb"))) ==
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{{2, 2, 1}});
}

TEST_CASE("maximal unique matches equal brute force") {
  for (std::size_t la = 1; la <= 4; ++la)
    for (const Text& a : testkit::all_strings(la, 2))
      for (std::size_t lb = 1; lb <= 4; ++lb)
        for (const Text& b : testkit::all_strings(lb, 2))
          REQUIRE(as_tuples(maximal_unique_matches(a, b)) == testkit::naive_mums(a, b));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t sigma = 2 + rng() % 4;
    Text a = testkit::random_text(rng, 1 + rng() % 50, sigma), b = testkit::random_text(rng, 1 + rng() % 50, sigma);
    REQUIRE(as_tuples(maximal_unique_matches(a, b)) == testkit::naive_mums(a, b));
  }
}

TEST_CASE("lyndon factorization examples") {
  CHECK(lyndon_factorization(RIndex(to_text("banana"))) == std::vector<std::size_t>{1, 2, 4, 6});
  CHECK(lyndon_factorization(RIndex(to_text("dcba"))) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(lyndon_factorization(RIndex(to_text("aabab"))) == std::vector<std::size_t>{1});
  CHECK(lyndon_factorization(RIndex(Text{})).empty());
  std::ostringstream out;
  write_lyndon_tsv(out, {1, 2, 4, 6});
  CHECK(out.str() == "1\t2\t4\t6\n");
}

TEST_CASE("lyndon factorization equals Duval") {
  for (std::size_t n = 1; n <= 12; ++n)
    for (const Text& t : testkit::all_strings(n, 2)) REQUIRE(lyndon_factorization(RIndex(t)) == testkit::duval_starts(t));
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    Text t = testkit::random_text(rng, 1 + rng() % 400, 1 + rng() % 4);
    REQUIRE(lyndon_factorization(RIndex(t)) == testkit::duval_starts(t));
  }
}

TEST_CASE("lyndon search charges grover calls") {
  QueryLedger ledger(64);
  Text t = to_text("zyxwvutsrqponmlkjihgfedcba");
  auto starts = lyndon_factorization(RIndex(t), ledger);
  CHECK(starts.size() == t.size());
  CHECK(ledger.total(QueryLedger::Kind::grover) == (t.size() - 1) * ledger.repetition_factor());
}

TEST_CASE("qgram examples") {
  RIndex idx(to_text("abab"));
  auto g = qgram_frequencies(idx, 2);
  CHECK(as_map(idx, g, 2) == std::map<Text, std::size_t>{{to_text("ab"), 2}, {to_text("ba"), 1}});
  auto whole = qgram_frequencies(idx, 4);
  CHECK(whole == std::vector<QGram>{{1, 1}});
  CHECK_THROWS_AS(qgram_frequencies(idx, 0), PreconditionError);
  CHECK_THROWS_AS(qgram_frequencies(idx, 5), PreconditionError);
}

TEST_CASE("qgram frequencies equal hash counting") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Text t = testkit::random_text(rng, 1 + rng() % 200, 1 + rng() % 4);
    RIndex idx(t);
    for (std::size_t q : {std::size_t{1}, std::size_t{2}, std::size_t{3}, 1 + rng() % t.size(), t.size()}) {
      if (q > t.size()) continue;
      auto g = qgram_frequencies(idx, q);
      REQUIRE(as_map(idx, g, q) == testkit::hash_qgrams(t, q));
      std::size_t total = 0;
      for (const auto& e : g) total += e.frequency;
      REQUIRE(total == t.size() - q + 1);
    }
  }
}

TEST_CASE("threshold string shape") {
  std::vector<bool> f = {false, true, false, true};
  Text t = threshold_string(f);
  REQUIRE(t.size() == 18);
  Text want = {1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 3, 1, 1, 1, 5, 1};
  CHECK(t == want);
  std::size_t probes = 0;
  auto counting = [&](std::size_t k) {
    ++probes;
    return static_cast<bool>(f[k - 1]);
  };
  for (std::size_t i = 1; i <= t.size(); ++i) {
    std::size_t before = probes;
    CHECK(threshold_symbol(4, counting, i) == t[i - 1]);
    CHECK(probes - before <= 1);
  }
  CHECK_THROWS_AS(threshold_symbol(4, counting, 19), RangeError);
}

TEST_CASE("threshold string factor count") {
  CHECK(lz77_greedy(threshold_string({true, false, true})).size() == 8);
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<bool> f(3 + rng() % 40, false);
    for (int k = 0; k < 3; ++k) f[rng() % f.size()] = true;
    Text t = threshold_string(f);
    const std::size_t z = lz77_greedy(t).size();
    CHECK(z == testkit::naive_lz77(t).size());
    CHECK(z == 2 * ones(f) + 4);
  }
  // With no ones the run of zeros after $ is one longer than the prefix run, so it needs
  // two phrases and the count is one above 2|S| + 4.
  for (std::size_t n = 1; n <= 8; ++n) CHECK(lz77_greedy(threshold_string(std::vector<bool>(n, false))).size() == 5);
}

TEST_CASE("indicator string bounds") {
  std::mt19937_64 rng(25);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const Text& t : testkit::all_strings(n, 2)) {
      std::vector<bool> f(t.begin(), t.end());
      Text x = indicator_string(f);
      REQUIRE(x == t);
      REQUIRE(lz77_greedy(x).size() <= 3 * ones(f) + 2);
      REQUIRE(runs_without_sentinel(x) <= 2 * ones(f) + 1);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_oracle(rng, 1 + rng() % 1000);
    Text x = indicator_string(f);
    CHECK(lz77_greedy(x).size() <= 3 * ones(f) + 2);
    CHECK(runs_without_sentinel(x) <= 2 * ones(f) + 1);
  }
  CHECK(runs_without_sentinel(to_text("")) == 0);
  CHECK(runs_without_sentinel(Text{0, 1, 0}) == 3);
  CHECK(build_rlbwt(Text{0, 1, 0}).runs_count() == 4);
}
