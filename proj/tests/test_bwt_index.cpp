#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "bwt/bundle.hpp"
#include "oracles.hpp"

using namespace qstring;

namespace {
using NaiveTables = testkit::NaiveBwtTables;

NaiveTables naive_tables(const Text& t) { return testkit::naive_bwt_tables(t); }

bool naive_run_start(const Text& bwt, std::size_t i) { return i == 1 || bwt[i - 1] != bwt[i - 2]; }

Pullback brute_pullback(const NaiveTables& nt, std::size_t s, std::size_t e) {
  auto r = testkit::naive_pullback(nt, s, e);
  REQUIRE(r.has_value());
  return {std::get<0>(*r), std::get<1>(*r), std::get<2>(*r)};
}

std::vector<Text> texts_up_to(std::size_t n, std::size_t sigma) {
  std::vector<Text> out;
  for (std::size_t len = 0; len <= n; ++len)
    for (auto& t : testkit::all_strings(len, sigma)) out.push_back(t);
  return out;
}
}  // namespace

TEST_CASE("build_rlbwt examples") {
  RlBwt b = build_rlbwt(to_text("banana"));
  CHECK(b.expand() == testkit::naive_bwt(to_text("banana")));
  std::vector<Run> want = {{'a' + 1, 1}, {'n' + 1, 2}, {'b' + 1, 1}, {kSentinel, 1}, {'a' + 1, 2}};
  CHECK(b.runs() == want);
  CHECK(build_rlbwt(to_text("aaaa")).expand() == testkit::naive_bwt(to_text("aaaa")));
  RlBwt empty = build_rlbwt(Text{});
  CHECK(empty.runs() == std::vector<Run>{{kSentinel, 1}});
  CHECK(empty.size() == 1);
}

TEST_CASE("rlbwt validation and file formats") {
  CHECK_THROWS_AS(RlBwt(std::vector<Run>{{1, 2}}), ValidationError);
  CHECK_THROWS_AS(RlBwt(std::vector<Run>{{0, 1}, {1, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(RlBwt(std::vector<Run>{{0, 1}, {1, 0}}), ValidationError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RlBwt b = build_rlbwt(testkit::random_text(rng, rng() % 300, 1 + rng() % 5));
    std::stringstream text, bin;
    write_rlbwt_text(text, b);
    write_rlbwt_binary(bin, b);
    CHECK(read_rlbwt_text(text) == b);
    CHECK(read_rlbwt_binary(bin) == b);
    std::stringstream reread(bin.str()), again;
    write_rlbwt_binary(again, read_rlbwt_binary(reread));
    CHECK(again.str() == bin.str());
  }
  std::stringstream bad("5 1\n0 1\n");
  CHECK_THROWS_AS(read_rlbwt_text(bad), ValidationError);
  std::stringstream junk("XXXX");
  CHECK_THROWS_AS(read_rlbwt_binary(junk), IoError);
}

TEST_CASE("factorization path matches the text path") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    Text t = testkit::random_text(rng, rng() % 200, 3);
    Factorization f;
    f.text_len = t.size();
    for (auto c : t) f.phrases.push_back(Phrase::Literal(c));
    CHECK(build_rlbwt(f) == build_rlbwt(t));
  }
}

TEST_CASE("lf matches naive tables for all texts n <= 12") {
  for (std::size_t sigma : {2, 3}) {
    for (const Text& t : texts_up_to(sigma == 2 ? 12 : 7, sigma)) {
      RlBwt b = build_rlbwt(t);
      auto nt = naive_tables(t);
      for (std::size_t i = 1; i <= b.size(); ++i) REQUIRE(b.lf(i) == nt.lf[i]);
    }
  }
}

TEST_CASE("lf is a single cycle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Text t = testkit::random_text(rng, 1 + rng() % 500, 4);
    RIndex idx(t);
    std::vector<bool> seen(idx.size() + 1, false);
    std::size_t row = 1;
    for (std::size_t step = 0; step < idx.size(); ++step) {
      REQUIRE(!seen[row]);
      seen[row] = true;
      // Row 1 holds the sentinel suffix; walking LF visits positions right to left.
      CHECK(idx.sa(row) == idx.size() - step);
      row = idx.lf(row);
    }
    CHECK(row == 1);
  }
}

TEST_CASE("lf shortcut levels") {
  RlBwt b = build_rlbwt(to_text("mississippi"));
  LfShortcut one(b, 1);
  CHECK(one.levels().size() == 1);
  for (std::size_t i = 1; i <= b.size(); ++i) CHECK(one.lf_pow(i) == b.lf(i));
  CHECK_THROWS_AS(LfShortcut(b, 3), PreconditionError);
  CHECK_THROWS_AS(one.apply(0, 0), RangeError);
}

TEST_CASE("lf_pow equals iterated lf on all texts n <= 64") {
  std::mt19937_64 rng(8);
  std::vector<Text> corpus = texts_up_to(10, 2);
  for (std::size_t n = 11; n <= 64; ++n)
    for (std::size_t sigma : {2, 3, 4})
      for (int rep = 0; rep < 4; ++rep) corpus.push_back(testkit::random_text(rng, n, sigma));
  for (const Text& t : corpus) {
    RlBwt b = build_rlbwt(t);
    const std::size_t r = b.runs_count();
    for (std::size_t tau : {2, 4, 8}) {
      LfShortcut sc(b, tau);
      for (std::size_t l = 0; l < sc.levels().size(); ++l) REQUIRE(sc.interval_count(l) <= (r << l));
      for (std::size_t i = 1; i <= b.size(); ++i) {
        std::size_t j = i;
        for (std::size_t k = 0; k < tau; ++k) j = b.lf(j);
        REQUIRE(sc.lf_pow(i) == j);
      }
    }
  }
}

TEST_CASE("lf shortcut round trip") {
  std::mt19937_64 rng(9);
  RlBwt b = build_rlbwt(testkit::random_text(rng, 400, 3));
  LfShortcut sc(b, 16);
  std::stringstream ss;
  write_shortcut(ss, sc);
  CHECK(read_shortcut(ss) == sc);
  std::stringstream bad("10 4 2\n1\n1 1 0\n1\n1 1 0\n");
  CHECK_THROWS_AS(read_shortcut(bad), ValidationError);
}

TEST_CASE("sa and isa equal naive tables") {
  std::mt19937_64 rng(10);
  std::vector<Text> corpus = texts_up_to(8, 2);
  for (int rep = 0; rep < 60; ++rep) corpus.push_back(testkit::random_text(rng, 1 + rng() % 200, 1 + rng() % 4));
  for (const Text& t : corpus) {
    auto nt = naive_tables(t);
    for (std::size_t tau : {std::size_t{0}, std::size_t{1}, std::size_t{4}}) {
      RIndex idx(t, tau);
      CHECK(idx.sa(1) == idx.size());
      for (std::size_t i = 1; i <= idx.size(); ++i) {
        REQUIRE(idx.sa(i) == nt.sa[i]);
        REQUIRE(idx.isa(i) == nt.isa[i]);
        REQUIRE(idx.isa(idx.sa(i)) == i);
      }
    }
  }
  RIndex idx(to_text("abc"));
  CHECK_THROWS_AS(idx.sa(0), RangeError);
  CHECK_THROWS_AS(idx.isa(5), RangeError);
}

TEST_CASE("samples cover runs and text spacing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Text t = testkit::random_text(rng, 50 + rng() % 500, 3);
    RIndex idx(t, 8);
    const auto& runs = idx.bwt().runs();
    for (std::size_t k = 0; k < runs.size(); ++k) {
      CHECK(idx.samples().find(idx.bwt().run_start(k)).has_value());
      CHECK(idx.samples().find(idx.bwt().run_start(k) + runs[k].length - 1).has_value());
    }
    for (std::size_t p = 1; p <= idx.text_length(); p += 8) {
      std::size_t row = idx.isa(p);
      CHECK(idx.samples().find(row) == p);
      if (p > 8) CHECK(idx.lf_pow(row) == idx.isa(p - 8));
    }
  }
}

TEST_CASE("default tau") {
  CHECK(default_index_tau(100, 1) == 16);
  CHECK(default_index_tau(100, 100) == 1);
  CHECK(default_index_tau(1000, 10) == 16);
}

TEST_CASE("count and locate examples") {
  RIndex idx(to_text("banana"));
  CHECK(idx.count(to_text("ana")) == 2);
  CHECK(idx.locate(to_text("ana")) == std::vector<std::size_t>{2, 4});
  CHECK(idx.count(to_text("banana")) == 1);
  CHECK(idx.locate(to_text("banana")) == std::vector<std::size_t>{1});
  CHECK(idx.count(to_text("nab")) == 0);
  CHECK(idx.locate(to_text("x")).empty());
  CHECK(idx.count(to_text("bananas")) == 0);
  CHECK_THROWS_AS(idx.count(Text{}), PreconditionError);
}

TEST_CASE("count and locate match naive scans") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t sigma = 1 + rng() % 4;
    Text t = testkit::random_text(rng, 1 + rng() % 1000, sigma);
    RIndex idx(t);
    for (int q = 0; q < 10; ++q) {
      Text p;
      if (rng() % 2) {
        std::size_t len = 1 + rng() % 8, start = rng() % t.size();
        p.assign(t.begin() + start, t.begin() + std::min(t.size(), start + len));
      } else {
        p = testkit::random_text(rng, 1 + rng() % 6, sigma + 1);
      }
      auto want = testkit::naive_occurrences(t, p);
      REQUIRE(idx.count(p) == want.size());
      REQUIRE(idx.locate(p) == want);
    }
  }
}

TEST_CASE("run boundary pullback") {
  RIndex b(to_text("banana"));
  CHECK(b.run_boundary_pullback(2, 3) == Pullback{0, 2, 3});

  std::vector<Text> corpus = texts_up_to(9, 2);
  std::mt19937_64 rng(13);
  for (std::size_t n = 10; n <= 64; ++n)
    for (int rep = 0; rep < 3; ++rep) corpus.push_back(testkit::random_text(rng, n, 1 + rng() % 3));
  for (const Text& t : corpus) {
    RIndex idx(t);
    auto nt = naive_tables(t);
    for (std::size_t k = 0; k < idx.bwt().runs_count(); ++k) {
      const std::size_t lo = idx.bwt().run_start(k), hi = lo + idx.bwt().runs()[k].length - 1;
      for (std::size_t s = lo; s <= hi; ++s)
        for (std::size_t e = s; e <= hi; ++e) REQUIRE(idx.run_boundary_pullback(s, e) == brute_pullback(nt, s, e));
    }
  }
}

TEST_CASE("differential suffix array is preserved inside runs") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    Text t = testkit::random_text(rng, 2 + rng() % 120, 1 + rng() % 3);
    auto nt = naive_tables(t);
    const std::size_t n = nt.bwt.size();
    for (std::size_t i = 2; i <= n; ++i) {
      if (naive_run_start(nt.bwt, i)) continue;
      // BWT[i-1] = BWT[i], so LF maps rows i-1, i to adjacent rows one text position earlier.
      REQUIRE(nt.lf[i] == nt.lf[i - 1] + 1);
      const auto dsa = [&](std::size_t r) {
        return static_cast<long>(nt.sa[r]) - static_cast<long>(nt.sa[r - 1]);
      };
      REQUIRE(dsa(nt.lf[i]) == dsa(i));
    }
  }
}

TEST_CASE("bundle round trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qstring_bundle_test";
  fs::remove_all(dir);
  std::mt19937_64 rng(15);
  Text t = testkit::random_text(rng, 700, 3);
  write_bundle(dir, IndexBundle{RIndex(t), std::nullopt});
  IndexBundle b = read_bundle(dir);
  CHECK(b.index.text() == t);
  CHECK(!b.pair);
  RIndex fresh(t);
  CHECK(b.index.bwt() == fresh.bwt());
  CHECK(b.index.shortcut() == fresh.shortcut());
  CHECK(b.index.samples() == fresh.samples());

  auto [joined, layout] = concat_pair(to_text("abc"), to_text("cab"));
  CHECK(layout == PairLayout{3, 3, 'c' + 1});
  CHECK(joined.size() == 7);
  write_bundle(dir, IndexBundle{RIndex(joined), layout});
  IndexBundle p = read_bundle(dir);
  REQUIRE(p.pair);
  CHECK(*p.pair == layout);
  CHECK(p.index.count(to_text("ab")) == 2);

  fs::remove(dir / "samples");
  CHECK_THROWS_AS(read_bundle(dir), IoError);
  CHECK_THROWS_AS(read_bundle(dir / "missing"), IoError);
  fs::remove_all(dir);
}
