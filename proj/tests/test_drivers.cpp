#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "drivers/bench.hpp"
#include "drivers/corpus.hpp"
#include "drivers/factorize.hpp"
#include "drivers/verify.hpp"
#include "lz/factorization.hpp"
#include "oracles.hpp"

using namespace qstring;

namespace {
std::size_t hamming(const Text& a, const Text& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d += a[i] != b[i];
  return d;
}

std::string csv_of(const BenchOptions& opt) {
  std::ostringstream out;
  write_bench_csv(out, run_bench(opt));
  return out.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}
}  // namespace

TEST_CASE("repeated block texts") {
  std::mt19937_64 rng(1);
  Text t = repeated_block_text(rng, 1000, 10, 4);
  REQUIRE(t.size() == 1000);
  const Text block(t.begin(), t.begin() + 100);
  for (std::size_t c = 1; c < 10; ++c) {
    Text copy(t.begin() + static_cast<std::ptrdiff_t>(100 * c), t.begin() + static_cast<std::ptrdiff_t>(100 * (c + 1)));
    CHECK(hamming(block, copy) == 1);
  }
  for (symbol_t c : t) CHECK((c >= 'a' && c < 'a' + 4));
  CHECK(repeated_block_text(rng, 0, 5, 2).empty());
  CHECK(repeated_block_text(rng, 7, 100, 2).size() == 7);
  CHECK_THROWS_AS(repeated_block_text(rng, 10, 0, 2), PreconditionError);
  CHECK_THROWS_AS(random_letters(rng, 10, 27), PreconditionError);
}

TEST_CASE("random edit pairs stay within k edits") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 200; ++it) {
    const std::size_t k = rng() % 12;
    auto [x, y] = random_edit_pair(rng, rng() % 60, k, 1 + rng() % 4);
    CHECK(testkit::dp_edit_distance(x, y) <= k);
  }
  auto [x, y] = random_edit_pair(rng, 50, 0, 4);
  CHECK(x == y);
}

TEST_CASE("factorize dispatches to each parser") {
  for (const char* s : {"abacabcabcaaaab", "00010011011", "", "aaaaaaa", "mississippi"}) {
    const Text t = to_text(s);
    QueryLedger ledger(t.size());
    CHECK(factorize(t, FactorizeAlgo::lz77, 0, ledger) == testkit::naive_lz77(t));
    CHECK(factorize(t, FactorizeAlgo::nolz77, 0, ledger) == testkit::naive_non_overlapping(t));
    CHECK(factorize(t, FactorizeAlgo::lzend, 0, ledger) == testkit::naive_lz_end_tau(t, 0));
    CHECK(factorize(t, FactorizeAlgo::lzend_tau, 2, ledger) == testkit::naive_lz_end_tau(t, 2));
    CHECK(decompress(factorize(t, FactorizeAlgo::lzend_tau, 0, ledger)) == t);
  }
  CHECK(parse_factorize_algo("lzend-tau") == FactorizeAlgo::lzend_tau);
  CHECK_THROWS_AS(parse_factorize_algo("lz78"), PreconditionError);
}

TEST_CASE("lz bench rows") {
  BenchOptions opt;
  opt.sizes = {1024, 2048, 4096, 8192, 16384};
  auto rows = run_bench(opt);
  REQUIRE(rows.size() == opt.sizes.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == opt.sizes[i]);
    CHECK(rows[i].ledger_total == rows[i].ledger_read + rows[i].ledger_grover + rows[i].ledger_predicate);
    CHECK(!rows[i].wall_seconds);
    REQUIRE(rows[i].sizes);
    CHECK(rows[i].sizes->z == rows[i].measured);
    if (i > 0) CHECK(rows[i].ledger_total > rows[i - 1].ledger_total);
  }
  const std::string csv = csv_of(opt);
  CHECK(csv == csv_of(opt));
  auto ls = lines(csv);
  REQUIRE(ls.size() == 2 + rows.size() + 1);
  CHECK(ls[0] == "# qstring-bench v1");
  CHECK(ls[1].rfind("suite,algorithm,n,", 0) == 0);
  CHECK(ls[2].find(",NA,") != std::string::npos);
  CHECK(ls.back().rfind("# fitted c_end_tau=", 0) == 0);
}

TEST_CASE("ed bench with no edits charges only the equality check") {
  BenchOptions opt;
  opt.suite = BenchSuite::ed;
  opt.param = 0;
  opt.sizes = {256, 1024};
  QueryLedger sink;
  auto rows = run_bench(opt, &sink);
  for (const auto& r : rows) {
    CHECK(r.output_size == 0);
    const std::string path = "root/ed/n" + std::to_string(r.n) + "_k0/ed/equal";
    CHECK(sink.count(path) == r.ledger_total);
    CHECK(r.ledger_total == r.ledger_grover);
  }
  opt.param = 8;
  opt.timing = true;
  rows = run_bench(opt);
  for (const auto& r : rows) {
    CHECK(r.output_size <= 8);
    CHECK(r.output_size > 0);
    CHECK(r.wall_seconds);
  }
}

TEST_CASE("index bench counts Lyndon factors") {
  BenchOptions opt;
  opt.suite = BenchSuite::index;
  opt.sizes = {500, 2000};
  opt.param = 8;
  for (const auto& r : run_bench(opt)) {
    CHECK(r.output_size == r.sizes->lyndon);
    CHECK(r.ledger_grover > 0);
  }
}

TEST_CASE("size measures on small texts") {
  const Text t = to_text("banana");
  SizeMeasures m = measure_sizes(t);
  CHECK(m.z == testkit::naive_lz77(t).size());
  CHECK(m.runs == testkit::naive_runs(testkit::naive_bwt(t)).size());
  CHECK(m.lyndon == testkit::duval_starts(t).size());
  auto [dq, q] = testkit::naive_substring_complexity(t);
  CHECK(m.delta == doctest::Approx(static_cast<double>(dq) / static_cast<double>(q)));
}

TEST_CASE("loglog slope") {
  std::vector<double> x = {1024, 2048, 4096, 8192}, y, flat(4, 3.0);
  for (double v : x) y.push_back(5 * std::sqrt(v));
  CHECK(loglog_slope(x, y) == doctest::Approx(0.5));
  CHECK(loglog_slope(x, flat) == doctest::Approx(0.0));
  CHECK_THROWS_AS(loglog_slope({1}, {1}), PreconditionError);
  CHECK_THROWS_AS(loglog_slope({2, 2}, {1, 3}), PreconditionError);
}

TEST_CASE("quick verification reports every criterion") {
  std::vector<std::string> out;
  QueryLedger ledger;
  auto results = run_verification(VerifyLevel::quick, [&](const std::string& l) { out.push_back(l); }, &ledger);
  REQUIRE(results.size() == 11);
  REQUIRE(out.size() == 12);
  for (int i = 0; i < 11; ++i) {
    CHECK(results[i].id == i + 1);
    CHECK(out[i].rfind("criterion " + std::to_string(i + 1) + " [", 0) == 0);
    CHECK(out[i] == format_criterion(results[i]));
  }
  CHECK(out.back().rfind("summary: ", 0) == 0);
  CHECK(ledger.count("root/fig1") > 0);
  for (int id : {1, 2, 3, 4, 5, 7, 8, 9, 10, 11}) CHECK_MESSAGE(results[id - 1].passed, out[id - 1]);
  CHECK(parse_verify_level("full") == VerifyLevel::full);
  CHECK_THROWS_AS(parse_verify_level("slow"), PreconditionError);
}
