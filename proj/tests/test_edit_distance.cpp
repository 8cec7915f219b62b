#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "ed/anchor.hpp"
#include "ed/solve.hpp"
#include "lz/lz_core.hpp"
#include "oracles.hpp"

using namespace qstring;

namespace {
std::vector<testkit::RawEdit> raw(const EditScript& s) {
  std::vector<testkit::RawEdit> out;
  for (const auto& e : s.ops) out.push_back({static_cast<char>(e.kind), e.pos, e.symbol});
  return out;
}

bool script_maps(const Text& x, const Text& y, const EditScript& s) {
  auto r = testkit::apply_edits(x, raw(s));
  return r && *r == y;
}

SolveResult run_solve(const Text& x, const Text& y, const SolveOptions& opt = {}) {
  QueryLedger ledger(std::max(x.size(), y.size()));
  auto data_x = std::make_shared<const Text>(x), data_y = std::make_shared<const Text>(y);
  return solve(OracleText(data_x, ledger), OracleText(data_y, ledger), opt);
}

std::size_t brute_window_left(const Text& x, std::size_t pos, std::size_t k) {
  for (std::size_t i = 0; i <= pos; ++i) {
    Text frag(x.begin() + static_cast<std::ptrdiff_t>(i), x.begin() + static_cast<std::ptrdiff_t>(pos));
    Text rev(frag.rbegin(), frag.rend());
    if (testkit::naive_lz77(rev).size() <= 6 * k + 2) return i;
  }
  return pos;
}

std::size_t brute_window_right(const Text& x, std::size_t pos, std::size_t k) {
  for (std::size_t j = x.size() + 1; j-- > pos;) {
    Text frag(x.begin() + static_cast<std::ptrdiff_t>(pos), x.begin() + static_cast<std::ptrdiff_t>(j));
    if (testkit::naive_lz77(frag).size() <= 6 * k + 2) return j;
  }
  return pos;
}
}  // namespace

TEST_CASE("apply_script and the alignment walk") {
  auto x = to_text("kitten");
  EditScript s;
  s.ops = {EditOp::Substitute(1, 's'), EditOp::Substitute(5, 'i'), EditOp::Insert(7, 'g')};
  CHECK(apply_script(x, s) == to_text("sitting"));
  CHECK(first_y_on_alignment(s, 6, 0) == 0);
  CHECK(first_y_on_alignment(s, 6, 3) == 3);
  CHECK(first_y_on_alignment(s, 6, 6) == 6);
  EditScript bad;
  bad.ops = {EditOp::Delete(3), EditOp::Delete(2)};
  CHECK_FALSE(apply_script(x, bad).has_value());
  EditScript ins;
  ins.ops = {EditOp::Insert(1, 'a'), EditOp::Insert(2, 'b')};
  CHECK(first_y_on_alignment(ins, 0, 0) == 0);
  std::ostringstream out;
  write_script(out, s);
  CHECK(out.str() == "S 1 115\nS 5 105\nI 7 103\n");
}

TEST_CASE("landau_vishkin matches the DP on random pairs") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 400; ++it) {
    auto x = testkit::random_text(rng, rng() % 60, 1 + rng() % 3);
    auto y = it % 2 ? testkit::random_text(rng, rng() % 60, 1 + rng() % 3)
                    : testkit::planted_edits(rng, x, rng() % 8, 3);
    auto r = landau_vishkin(x, y);
    REQUIRE(r);
    std::size_t d = testkit::dp_edit_distance(x, y);
    REQUIRE(r->distance == d);
    REQUIRE(r->script.size() == d);
    REQUIRE(script_maps(x, y, r->script));
    if (d > 0) REQUIRE_FALSE(landau_vishkin(x, y, d - 1).has_value());
  }
}

TEST_CASE("lz_edit_distance on factorizations") {
  auto fx = lz77_greedy(to_text("kitten")), fy = lz77_greedy(to_text("sitting"));
  auto r = lz_edit_distance(fx, fy);
  REQUIRE(r);
  CHECK(r->distance == 3);
  CHECK(script_maps(to_text("kitten"), to_text("sitting"), r->script));
  CHECK_FALSE(lz_edit_distance(fx, fy, 1).has_value());
  auto same = lz_edit_distance(fx, fx);
  CHECK(same->distance == 0);
  CHECK(same->script.empty());
}

TEST_CASE("compressible_window matches brute force") {
  QueryLedger ledger;
  Text unary(50, 4);
  for (std::size_t pos : {0, 17, 50})
    for (std::size_t k : {0, 1, 5}) {
      auto w = compressible_window(OracleText(unary, ledger), pos, k, 50);
      CHECK(w == std::pair<std::size_t, std::size_t>{0, 50});
    }
  std::mt19937_64 rng(42);
  for (int it = 0; it < 150; ++it) {
    auto x = it % 2 ? testkit::random_text(rng, 1 + rng() % 100, 2 + rng() % 3)
                    : testkit::planted_z_text(rng, 1 + rng() % 100, 2 + rng() % 10, 2);
    std::size_t pos = rng() % (x.size() + 1), k = rng() % 4;
    auto w = compressible_window(OracleText(x, ledger), pos, k, x.size());
    REQUIRE(w.first == brute_window_left(x, pos, k));
    REQUIRE(w.second == brute_window_right(x, pos, k));
  }
  auto x = testkit::random_text(rng, 40, 4);
  CHECK(compressible_window(OracleText(x, ledger), 20, 40, 40) == std::pair<std::size_t, std::size_t>{0, 40});
}

TEST_CASE("find_anchor returns an anchor on an optimal alignment") {
  QueryLedger ledger;
  std::mt19937_64 rng(43);
  auto abc = to_text("abcabcabca");
  for (std::size_t pos = 0; pos <= abc.size(); ++pos)
    CHECK(find_anchor(OracleText(abc, ledger), OracleText(abc, ledger), 1, pos, abc.size()) == pos);
  for (int it = 0; it < 300; ++it) {
    auto x = testkit::random_text(rng, 1 + rng() % 60, 2 + rng() % 2);
    auto y = testkit::planted_edits(rng, x, rng() % 6, 3);
    auto dp = testkit::dp_tables(x, y);
    std::size_t d = dp.distance(), pos = rng() % (x.size() + 1);
    std::size_t n = std::max(x.size(), y.size());
    for (std::size_t k : {std::max<std::size_t>(d, 1), d + 3}) {
      std::size_t ay = find_anchor(OracleText(x, ledger), OracleText(y, ledger), k, pos, n);
      REQUIRE(ay <= y.size());
      REQUIRE(dp.anchor(pos, ay));
    }
    if (d > 1) REQUIRE(find_anchor(OracleText(x, ledger), OracleText(y, ledger), d - 1, pos, n) <= y.size());
  }
}

TEST_CASE("is_anchor agrees with the DP anchor test") {
  QueryLedger ledger;
  std::mt19937_64 rng(44);
  for (int it = 0; it < 150; ++it) {
    auto x = testkit::random_text(rng, 1 + rng() % 40, 2 + rng() % 2);
    auto y = testkit::planted_edits(rng, x, rng() % 5, 3);
    auto dp = testkit::dp_tables(x, y);
    std::size_t k = std::max<std::size_t>(1, dp.distance() + rng() % 3), n = std::max(x.size(), y.size());
    OracleText ox(x, ledger), oy(y, ledger);
    REQUIRE(is_anchor(ox, oy, k, 0, 0, n));
    REQUIRE(is_anchor(ox, oy, k, x.size(), y.size(), n));
    for (int q = 0; q < 12; ++q) {
      std::size_t ax = rng() % (x.size() + 1), ay = rng() % (y.size() + 1);
      REQUIRE(is_anchor(ox, oy, k, ax, ay, n) == dp.anchor(ax, ay));
    }
  }
}

TEST_CASE("solve examples") {
  auto r = run_solve(to_text("abc"), to_text("abc"));
  CHECK(r.distance == 0);
  CHECK(r.script.empty());
  r = run_solve(to_text("kitten"), to_text("sitting"));
  CHECK(r.distance == 3);
  CHECK(script_maps(to_text("kitten"), to_text("sitting"), r.script));
  r = run_solve(Text{}, to_text("abc"));
  CHECK(r.distance == 3);
  CHECK(apply_script(Text{}, r.script) == to_text("abc"));
  r = run_solve(to_text("abc"), Text{});
  CHECK(r.distance == 3);
  CHECK(apply_script(to_text("abc"), r.script) == Text{});
}

TEST_CASE("solve equals the DP on all short ternary pairs") {
  std::vector<Text> all;
  for (std::size_t n = 0; n <= 4; ++n)
    for (auto& t : testkit::all_strings(n, 3)) all.push_back(t);
  for (const auto& x : all)
    for (const auto& y : all) {
      auto r = run_solve(x, y);
      REQUIRE(r.distance == testkit::dp_edit_distance(x, y));
      REQUIRE(r.script.size() == r.distance);
      REQUIRE(script_maps(x, y, r.script));
      REQUIRE(r.stats.token_violations == 0);
    }
}

TEST_CASE("solve equals the DP on planted pairs and stays within the token bounds") {
  std::mt19937_64 rng(45);
  for (int it = 0; it < 60; ++it) {
    auto x = testkit::random_text(rng, 1 + rng() % 300, 2 + rng() % 3);
    auto y = testkit::planted_edits(rng, x, rng() % 33, 4);
    auto r = run_solve(x, y);
    std::size_t d = testkit::dp_edit_distance(x, y);
    REQUIRE(r.distance == d);
    REQUIRE(script_maps(x, y, r.script));
    REQUIRE(r.stats.token_violations == 0);
    if (d > 0) {
      REQUIRE(r.stats.q_tokens <= token_bound_q(x.size(), y.size(), d, r.stats.radix));
      REQUIRE(r.stats.t_tokens <= token_bound_t(x.size(), y.size(), d, r.stats.radix));
    }
  }
}

TEST_CASE("pauses do not change the result") {
  std::mt19937_64 rng(46);
  std::size_t pauses = 0, terminated = 0;
  for (int it = 0; it < 120; ++it) {
    auto x = testkit::random_text(rng, 2 + rng() % 40, 2);
    auto y = it % 3 ? testkit::planted_edits(rng, x, 1 + rng() % 12, 2) : testkit::random_text(rng, rng() % 40, 2);
    auto free_run = run_solve(x, y, SolveOptions{2, 1.0, true});
    for (double scale : {1e-2, 1e-4}) {
      auto tight = run_solve(x, y, SolveOptions{2, scale, false});
      REQUIRE(tight.distance == free_run.distance);
      REQUIRE(tight.script == free_run.script);
      pauses += tight.stats.pauses;
      terminated += tight.stats.terminated;
    }
    REQUIRE(free_run.distance == testkit::dp_edit_distance(x, y));
  }
  CHECK(pauses > 0);
  MESSAGE("pauses " << pauses << ", terminated programs " << terminated);
}

TEST_CASE("equal inputs charge only the equality check") {
  QueryLedger ledger = QueryLedger::with_repetition(1);
  Text x(100, 1);
  auto data = std::make_shared<const Text>(x);
  auto r = solve(OracleText(data, ledger), OracleText(data, ledger));
  CHECK(r.distance == 0);
  CHECK(ledger.total() == 10);
  CHECK(ledger.count("root/ed/equal") == 10);
}

namespace {
// All alignments of x(i..j] onto y as sets of (x, y) points with their costs.
void enumerate(const Text& x, const Text& y, std::size_t i, std::size_t j, std::size_t a, std::size_t b,
               std::vector<std::pair<std::size_t, std::size_t>>& path, std::size_t cost,
               std::vector<std::pair<std::set<std::pair<std::size_t, std::size_t>>, std::size_t>>& out) {
  path.emplace_back(a, b);
  if (a == j && b == y.size()) {
    out.emplace_back(std::set<std::pair<std::size_t, std::size_t>>(path.begin(), path.end()), cost);
  } else {
    if (a < j && b < y.size()) enumerate(x, y, i, j, a + 1, b + 1, path, cost + (x[a] != y[b]), out);
    if (a < j) enumerate(x, y, i, j, a + 1, b, path, cost + 1, out);
    if (b < y.size()) enumerate(x, y, i, j, a, b + 1, path, cost + 1, out);
  }
  path.pop_back();
}
}  // namespace

TEST_CASE("disjoint alignments imply compression") {
  std::mt19937_64 rng(47);
  std::size_t checked = 0;
  for (int it = 0; it < 300; ++it) {
    auto x = testkit::random_text(rng, 4 + rng() % 8, 2);
    auto y = testkit::random_text(rng, 1 + rng() % 4, 2);
    std::size_t i = rng() % x.size(), j = i + 1 + rng() % (x.size() - i);
    std::size_t i2 = rng() % x.size(), j2 = i2 + 1 + rng() % (x.size() - i2);
    std::vector<std::pair<std::size_t, std::size_t>> path;
    std::vector<std::pair<std::set<std::pair<std::size_t, std::size_t>>, std::size_t>> as, bs;
    enumerate(x, y, i, j, i, 0, path, 0, as);
    enumerate(x, y, i2, j2, i2, 0, path, 0, bs);
    for (int s = 0; s < 200; ++s) {
      const auto& [pa, ca] = as[rng() % as.size()];
      const auto& [pb, cb] = bs[rng() % bs.size()];
      bool disjoint = true;
      for (const auto& p : pa) disjoint = disjoint && !pb.count(p);
      if (!disjoint) continue;
      ++checked;
      std::size_t lo = std::min(i, i2), hi = std::max(j, j2);
      std::size_t bound = (i > i2 ? i - i2 : i2 - i) + 2 * ca + 2 * cb + 1;
      for (std::size_t a = lo; a <= hi; ++a)
        for (std::size_t b = a; b <= hi; ++b) {
          Text frag(x.begin() + static_cast<std::ptrdiff_t>(a), x.begin() + static_cast<std::ptrdiff_t>(b));
          REQUIRE(testkit::naive_lz77(frag).size() <= bound);
        }
    }
  }
  CHECK(checked > 100);
}
