#include "drivers/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <sstream>

#include "apps/applications.hpp"
#include "apps/lower_bound.hpp"
#include "drivers/bench.hpp"
#include "drivers/factorize.hpp"
#include "ed/solve.hpp"
#include "lz/lz_core.hpp"
#include "lz/lz_end_tau.hpp"
#include "oracles.hpp"

namespace qstring {

namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

std::string show(const Text& t) {
  std::string s;
  bool letters = true;
  for (symbol_t c : t) letters = letters && c >= 'a' && c <= 'z';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (letters) {
      s += static_cast<char>(t[i]);
    } else {
      if (i) s += ' ';
      s += std::to_string(t[i]);
    }
  }
  return '"' + s + '"';
}

std::string show(const Factorization& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.phrases.size(); ++i) out << (i ? " " : "") << f.phrases[i];
  return out.str();
}

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::vector<std::size_t> lengths(const Factorization& f) {
  std::vector<std::size_t> out;
  for (const auto& p : f.phrases) out.push_back(p.length());
  return out;
}

std::vector<Text> strings_up_to(std::size_t n, std::size_t sigma, std::size_t from = 0) {
  std::vector<Text> out;
  for (std::size_t len = from; len <= n; ++len)
    for (auto& t : testkit::all_strings(len, sigma)) out.push_back(std::move(t));
  return out;
}

// Counts checks and keeps the first failure message.
struct Tally {
  std::size_t checks = 0, failures = 0;
  std::string first;

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = describe();
  }
  bool ok() const { return failures == 0; }
  std::string summary(const std::string& what) const {
    std::string s = std::to_string(checks) + " " + what + ", " + std::to_string(failures) + " mismatches";
    if (failures) s += "; first: " + first;
    return s;
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

Triple brute_lcs(const Text& a, const Text& b) {
  const std::size_t len = testkit::naive_lcs_length(a, b);
  if (len == 0) return {0, 0, 0};
  for (std::size_t i = 0; i + len <= a.size(); ++i) {
    Text w(a.begin() + static_cast<std::ptrdiff_t>(i), a.begin() + static_cast<std::ptrdiff_t>(i + len));
    auto occ = testkit::naive_occurrences(b, w);
    if (!occ.empty()) return {i + 1, occ.front(), len};
  }
  return {0, 0, 0};
}

std::vector<testkit::RawEdit> raw_edits(const EditScript& s) {
  std::vector<testkit::RawEdit> out;
  for (const auto& e : s.ops) out.push_back({static_cast<char>(e.kind), e.pos, e.symbol});
  return out;
}

std::size_t ones(const std::vector<bool>& f) { return static_cast<std::size_t>(std::count(f.begin(), f.end(), true)); }

class Verifier {
 public:
  Verifier(VerifyLevel level, const VerifySink& emit, QueryLedger* ledger)
      : full_(level == VerifyLevel::full), emit_(emit), ledger_(ledger) {}

  std::vector<CriterionResult> run() {
    record(1, "fig1-lz77", &Verifier::fig1);
    record(2, "lz-end-example", &Verifier::lz_end_example);
    record(3, "factorization-oracles", &Verifier::factorization_oracles);
    record(4, "edit-distance-oracles", &Verifier::edit_distance_oracles);
    record(5, "token-bounds", &Verifier::token_bounds);
    record(6, "query-scaling", &Verifier::query_scaling);
    record(7, "lf-power", &Verifier::lf_power);
    record(8, "index-oracles", &Verifier::index_oracles);
    record(9, "applications", &Verifier::applications);
    record(10, "lower-bound-fixtures", &Verifier::lower_bounds);
    record(11, "size-relations", &Verifier::size_relations);
    std::size_t passed = 0;
    for (const auto& r : results_) passed += r.passed;
    emit_("summary: " + std::to_string(passed) + "/" + std::to_string(results_.size()) + " criteria passed (" +
          (full_ ? "full" : "quick") + ")");
    return results_;
  }

 private:
  using Check = void (Verifier::*)(CriterionResult&);

  void record(int id, const char* name, Check check) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    Stopwatch clock;
    try {
      (this->*check)(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = clock.seconds();
    emit_(format_criterion(r));
    results_.push_back(std::move(r));
  }

  void absorb(const QueryLedger& l, std::string_view tag) {
    if (ledger_) ledger_->absorb(l, tag);
  }

  void fig1(CriterionResult& r) {
    Stopwatch clock;
    QueryLedger ledger(15);
    Factorization f = factorize(to_text("abacabcabcaaaab"), FactorizeAlgo::lz77, 0, ledger);
    const double secs = clock.seconds();
    absorb(ledger, "fig1");
    const std::vector<Phrase> want = {Phrase::Literal('a'), Phrase::Literal('b'), Phrase::Copy(1, 1),
                                      Phrase::Literal('c'), Phrase::Copy(1, 2),   Phrase::Copy(4, 5),
                                      Phrase::Copy(11, 3),  Phrase::Copy(9, 1)};
    const bool match = f.phrases == want;
    r.passed = match && secs < 1.0;
    r.detail = (match ? "8 phrases match" : "got " + show(f)) + ", " + fixed(secs, 4) + " s (limit 1 s)";
  }

  void lz_end_example(CriterionResult& r) {
    const Text t = to_text("00010011011");
    QueryLedger ledger(t.size());
    Factorization plain = factorize(t, FactorizeAlgo::lzend, 0, ledger);
    Factorization tau2 = factorize(t, FactorizeAlgo::lzend_tau, 2, ledger);
    absorb(ledger, "lz_end_example");
    Tally tally;
    tally.expect(lengths(plain) == std::vector<std::size_t>{1, 1, 1, 1, 3, 1, 3},
                 [&] { return "LZ-End " + show(plain); });
    tally.expect(plain == testkit::naive_lz_end_tau(t, 0), [&] { return "LZ-End differs from brute force"; });
    tally.expect(lengths(tau2) == std::vector<std::size_t>{1, 1, 1, 1, 3, 2, 1, 1},
                 [&] { return "LZ-End+tau " + show(tau2); });
    tally.expect(tau2 == testkit::naive_lz_end_tau(t, 2), [&] { return "LZ-End+tau differs from brute force"; });
    tally.expect(decompress(plain) == t && decompress(tau2) == t, [] { return "decompression differs"; });
    r.passed = tally.ok();
    r.detail = "LZ-End " + std::to_string(plain.size()) + " factors (want 7), tau=2 " + std::to_string(tau2.size()) +
               " factors (want 8)";
    if (!tally.ok()) r.detail += "; " + tally.first;
  }

  void factorization_oracles(CriterionResult& r) {
    Stopwatch clock;
    std::vector<Text> corpus = strings_up_to(full_ ? 12 : 8, 2);
    const std::size_t exhaustive = corpus.size();
    std::mt19937_64 rng(301);
    const int random = full_ ? 10000 : 300;
    for (int i = 0; i < random; ++i)
      corpus.push_back(testkit::random_text(rng, 1 + rng() % (full_ ? 200 : 100), 1 + rng() % 4));
    Tally tally;
    for (const Text& t : corpus) {
      const Factorization greedy = lz77_greedy(t);
      tally.expect(greedy == testkit::naive_lz77(t), [&] { return "lz77_greedy on " + show(t); });
      for (std::size_t tau = 1; tau <= 4; ++tau) {
        QueryLedger ledger(t.size());
        Factorization f = lz_end_tau_build(OracleText(t, ledger), tau);
        tally.expect(f == testkit::naive_lz_end_tau(t, tau),
                     [&] { return "tau=" + std::to_string(tau) + " on " + show(t) + ": " + show(f); });
        tally.expect(convert_to_lz77(f) == greedy, [&] { return "convert_to_lz77 on " + show(t); });
      }
    }
    const double secs = clock.seconds();
    r.passed = tally.ok() && secs < 300;
    r.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(random) + " random texts, " +
               tally.summary("checks") + ", " + fixed(secs, 1) + " s (limit 300 s)";
  }

  // Criteria 4 and 5 share one corpus; the solve runs happen here and the token checks are kept.
  void edit_distance_oracles(CriterionResult& r) {
    Stopwatch clock;
    std::vector<std::shared_ptr<const Text>> all;
    for (auto& t : strings_up_to(full_ ? 7 : 4, 3)) all.push_back(std::make_shared<const Text>(std::move(t)));
    Tally tally;
    auto check = [&](const std::shared_ptr<const Text>& x, const std::shared_ptr<const Text>& y) {
      QueryLedger ledger(std::max({x->size(), y->size(), std::size_t{2}}));
      SolveResult res = solve(OracleText(x, ledger), OracleText(y, ledger));
      const std::size_t d = testkit::dp_edit_distance(*x, *y);
      auto describe = [&] { return show(*x) + " vs " + show(*y); };
      tally.expect(res.distance == d, [&] {
        return describe() + ": distance " + std::to_string(res.distance) + ", DP " + std::to_string(d);
      });
      auto applied = testkit::apply_edits(*x, raw_edits(res.script));
      tally.expect(applied && *applied == *y && res.script.size() == res.distance,
                   [&] { return describe() + ": script does not map x to y at length = distance"; });
      ++token_runs_;
      bool within = res.stats.token_violations == 0;
      if (d > 0)
        within = within && res.stats.q_tokens <= token_bound_q(x->size(), y->size(), d, res.stats.radix) &&
                 res.stats.t_tokens <= token_bound_t(x->size(), y->size(), d, res.stats.radix);
      if (!within && token_failures_++ == 0) token_first_ = describe();
    };
    for (const auto& x : all)
      for (const auto& y : all) check(x, y);
    std::mt19937_64 rng(401);
    const int random = full_ ? 1000 : 50;
    for (int i = 0; i < random; ++i) {
      Text x = testkit::random_text(rng, 1 + rng() % (full_ ? 500 : 200), 2 + rng() % 3);
      Text y = testkit::planted_edits(rng, x, rng() % 33, 4);
      check(std::make_shared<const Text>(std::move(x)), std::make_shared<const Text>(std::move(y)));
    }
    const double secs = clock.seconds();
    r.passed = tally.ok() && secs < 600;
    r.detail = std::to_string(all.size() * all.size()) + " exhaustive + " + std::to_string(random) + " planted pairs, " +
               tally.summary("checks") + ", " + fixed(secs, 1) + " s (limit 600 s)";
  }

  void token_bounds(CriterionResult& r) {
    r.passed = token_runs_ > 0 && token_failures_ == 0;
    r.detail = std::to_string(token_runs_) + " solve runs, " + std::to_string(token_failures_) + " over budget";
    if (token_failures_) r.detail += "; first: " + token_first_;
  }

  void query_scaling(CriterionResult& r) {
    std::vector<std::size_t> sizes;
    for (unsigned e = 10; e <= (full_ ? 16u : 12u); ++e) sizes.push_back(std::size_t{1} << e);
    const std::vector<std::size_t> zs = full_ ? std::vector<std::size_t>{8, 16, 64, 256} : std::vector<std::size_t>{16};
    const std::size_t k = 16;
    BenchOptions opt;
    const double limit = 0.15;
    bool ok = true;
    std::string detail = "lz";
    for (std::size_t z : zs) {
      std::vector<double> xs, ys;
      for (std::size_t n : sizes) {
        BenchRecord rec = bench_lz_case(n, z, 601, opt, ledger_);
        xs.push_back(static_cast<double>(n));
        ys.push_back(rec.scaled_ledger);
        corpus_.push_back({n, *rec.sizes});
      }
      const double slope = loglog_slope(xs, ys);
      ok = ok && slope <= limit;
      detail += " z=" + std::to_string(z) + ":" + fixed(slope);
    }
    std::vector<double> xs, ys;
    std::string ratios;
    for (std::size_t n : sizes) {
      BenchRecord rec = bench_ed_case(n, k, 602, opt, ledger_);
      xs.push_back(static_cast<double>(n));
      ys.push_back(rec.scaled_ledger);
      ratios += (ratios.empty() ? "" : ",") + fixed(rec.scaled_ledger, 0);
    }
    const double slope = loglog_slope(xs, ys);
    ok = ok && slope <= limit;
    detail += "; solve k=" + std::to_string(k) + ":" + fixed(slope) + " (ledger/sqrt(dn) " + ratios + ")";
    r.passed = ok;
    r.detail = "log-log slopes over n=2^10..2^" + std::to_string(full_ ? 16 : 12) + " (limit " + fixed(limit, 2) +
               "): " + detail;
  }

  void lf_power(CriterionResult& r) {
    std::vector<Text> corpus = strings_up_to(full_ ? 10 : 6, 2, 1);
    std::mt19937_64 rng(701);
    for (std::size_t n = corpus.back().size() + 1; n <= (full_ ? 64u : 32u); ++n)
      for (int i = 0; i < (full_ ? 20 : 3); ++i) corpus.push_back(testkit::random_text(rng, n, 1 + rng() % 4));
    const std::size_t small = corpus.size();
    const int large = full_ ? 100 : 10;
    for (int i = 0; i < large; ++i)
      corpus.push_back(testkit::random_text(rng, 1 + rng() % (full_ ? 10000 : 2000), 2 + rng() % 3));
    Tally tally;
    for (const Text& t : corpus) {
      const auto nt = testkit::naive_bwt_tables(t);
      const RlBwt bwt = build_rlbwt(t);
      const std::size_t rows = nt.bwt.size(), runs = bwt.runs_count();
      for (std::size_t tau : {2, 4, 8}) {
        const LfShortcut sc(bwt, tau);
        for (std::size_t l = 0; l < sc.levels().size(); ++l)
          tally.expect(sc.interval_count(l) <= (std::size_t{1} << l) * runs, [&] {
            return "level " + std::to_string(l) + " has " + std::to_string(sc.interval_count(l)) + " intervals on " +
                   show(t);
          });
        for (std::size_t i = 1; i <= rows; ++i) {
          std::size_t j = i;
          for (std::size_t s = 0; s < tau; ++s) j = nt.lf[j];
          tally.expect(sc.lf_pow(i) == j,
                       [&] { return "tau=" + std::to_string(tau) + " row " + std::to_string(i) + " of " + show(t); });
        }
      }
    }
    r.passed = tally.ok();
    r.detail = std::to_string(small) + " texts n<=" + std::to_string(full_ ? 64 : 32) + " + " + std::to_string(large) +
               " random texts, tau in {2,4,8}, " + tally.summary("checks");
  }

  void index_oracles(CriterionResult& r) {
    std::mt19937_64 rng(801);
    Tally tables, queries, pullbacks;
    std::vector<Text> corpus = strings_up_to(full_ ? 8 : 5, 2);
    for (int i = 0; i < (full_ ? 300 : 40); ++i) corpus.push_back(testkit::random_text(rng, 1 + rng() % 200, 1 + rng() % 4));
    for (const Text& t : corpus) {
      const RIndex idx(t);
      const auto nt = testkit::naive_bwt_tables(t);
      for (std::size_t i = 1; i <= idx.size(); ++i) {
        tables.expect(idx.sa(i) == nt.sa[i], [&] { return "sa(" + std::to_string(i) + ") of " + show(t); });
        tables.expect(idx.isa(i) == nt.isa[i], [&] { return "isa(" + std::to_string(i) + ") of " + show(t); });
      }
    }
    const int texts = full_ ? 1000 : 100;
    for (int i = 0; i < texts; ++i) {
      const std::size_t sigma = 1 + rng() % 4;
      const Text t = testkit::random_text(rng, 1 + rng() % 300, sigma);
      const RIndex idx(t);
      for (int j = 0; j < 10; ++j) {
        Text p;
        if (j % 2 == 0) {
          const std::size_t start = rng() % t.size();
          const std::size_t len = 1 + rng() % std::min<std::size_t>(20, t.size() - start);
          p.assign(t.begin() + static_cast<std::ptrdiff_t>(start), t.begin() + static_cast<std::ptrdiff_t>(start + len));
        } else {
          p = testkit::random_text(rng, 1 + rng() % 6, sigma);
        }
        const auto occ = testkit::naive_occurrences(t, p);
        queries.expect(idx.count(p) == occ.size(), [&] { return "count " + show(p) + " in " + show(t); });
        queries.expect(idx.locate(p) == occ, [&] { return "locate " + show(p) + " in " + show(t); });
      }
    }
    std::vector<Text> small = strings_up_to(full_ ? 9 : 6, 2);
    for (std::size_t n = full_ ? 10 : 7; n <= (full_ ? 64u : 24u); ++n)
      for (int rep = 0; rep < 3; ++rep) small.push_back(testkit::random_text(rng, n, 1 + rng() % 3));
    for (const Text& t : small) {
      const RIndex idx(t);
      const auto nt = testkit::naive_bwt_tables(t);
      for (std::size_t k = 0; k < idx.bwt().runs_count(); ++k) {
        const std::size_t lo = idx.bwt().run_start(k), hi = lo + idx.bwt().runs()[k].length - 1;
        for (std::size_t s = lo; s <= hi; ++s)
          for (std::size_t e = s; e <= hi; ++e) {
            const Pullback got = idx.run_boundary_pullback(s, e);
            const auto want = testkit::naive_pullback(nt, s, e);
            pullbacks.expect(want && Triple{got.k, got.s, got.e} == *want, [&] {
              return "[" + std::to_string(s) + ".." + std::to_string(e) + "] of " + show(t);
            });
          }
      }
    }
    r.passed = tables.ok() && queries.ok() && pullbacks.ok();
    r.detail = "sa/isa " + tables.summary("rows") + "; count/locate " + std::to_string(texts * 10) + " pairs, " +
               queries.summary("checks") + "; pullback " + pullbacks.summary("intervals");
  }

  void applications(CriterionResult& r) {
    std::mt19937_64 rng(901);
    Tally lcs, mum, lyndon, qgrams;
    std::vector<std::pair<Text, Text>> pairs;
    const std::size_t total = full_ ? 10 : 6;
    for (std::size_t la = 0; la <= total; ++la)
      for (const Text& a : testkit::all_strings(la, 2))
        for (std::size_t lb = 0; la + lb <= total; ++lb)
          for (const Text& b : testkit::all_strings(lb, 2)) pairs.emplace_back(a, b);
    for (int i = 0; i < (full_ ? 1000 : 100); ++i) {
      const std::size_t sigma = 1 + rng() % 4;
      pairs.emplace_back(testkit::random_text(rng, 1 + rng() % 50, sigma), testkit::random_text(rng, 1 + rng() % 50, sigma));
    }
    for (const auto& [a, b] : pairs) {
      auto [t, layout] = concat_pair(a, b);
      const RIndex idx(std::move(t));
      const MatchReport m = longest_common_substring(idx, layout);
      lcs.expect(Triple{m.start1, m.start2, m.length} == brute_lcs(a, b), [&] { return show(a) + " vs " + show(b); });
      std::vector<Triple> got;
      for (const auto& x : maximal_unique_matches(idx, layout)) got.emplace_back(x.start1, x.start2, x.length);
      mum.expect(got == testkit::naive_mums(a, b), [&] { return show(a) + " vs " + show(b); });
    }
    std::vector<Text> texts = strings_up_to(full_ ? 12 : 8, 2, 1);
    for (int i = 0; i < (full_ ? 300 : 50); ++i) texts.push_back(testkit::random_text(rng, 1 + rng() % 400, 1 + rng() % 4));
    for (const Text& t : texts)
      lyndon.expect(lyndon_factorization(RIndex(t)) == testkit::duval_starts(t), [&] { return show(t); });
    for (int i = 0; i < (full_ ? 200 : 40); ++i) {
      const Text t = testkit::random_text(rng, 1 + rng() % 200, 1 + rng() % 4);
      const RIndex idx(t);
      for (std::size_t q : {std::size_t{1}, std::size_t{2}, std::size_t{3}, 1 + rng() % t.size(), t.size()}) {
        if (q > t.size()) continue;
        std::map<Text, std::size_t> got;
        std::size_t sum = 0;
        for (const auto& g : qgram_frequencies(idx, q)) {
          got[Text(t.begin() + static_cast<std::ptrdiff_t>(g.start - 1),
                   t.begin() + static_cast<std::ptrdiff_t>(g.start - 1 + q))] += g.frequency;
          sum += g.frequency;
        }
        qgrams.expect(got == testkit::hash_qgrams(t, q) && sum == t.size() - q + 1,
                      [&] { return "q=" + std::to_string(q) + " on " + show(t); });
      }
    }
    r.passed = lcs.ok() && mum.ok() && lyndon.ok() && qgrams.ok();
    r.detail = "lcs " + lcs.summary("pairs") + "; mum " + mum.summary("pairs") + "; lyndon " +
               lyndon.summary("texts") + "; qgrams " + qgrams.summary("cases");
  }

  void lower_bounds(CriterionResult& r) {
    std::mt19937_64 rng(1001);
    Tally indicator_z, indicator_r, threshold_z;
    const int oracles = full_ ? 1000 : 100;
    for (int i = 0; i < oracles; ++i) {
      std::vector<bool> f(1 + rng() % (full_ ? 1000 : 200));
      for (std::size_t k = 0; k < f.size(); ++k) f[k] = rng() & 1;
      const std::size_t s = ones(f);
      const Text x = indicator_string(f);
      const std::size_t z = lz77_greedy(x).size(), runs = runs_without_sentinel(x);
      auto where = [&] { return "n=" + std::to_string(f.size()) + " |S|=" + std::to_string(s); };
      indicator_z.expect(z <= 3 * s + 2, [&] { return where() + " z=" + std::to_string(z); });
      indicator_r.expect(runs <= 2 * s + 1, [&] { return where() + " r=" + std::to_string(runs); });
      const std::size_t zt = lz77_greedy(threshold_string(f)).size();
      threshold_z.expect(zt == 2 * s + 4, [&] { return where() + " z=" + std::to_string(zt); });
    }
    r.passed = indicator_z.ok() && indicator_r.ok() && threshold_z.ok();
    r.detail = std::to_string(oracles) + " oracles; z<=3|S|+2 " + indicator_z.summary("checks") + "; r<=2|S|+1 " +
               indicator_r.summary("checks") + "; z=2|S|+4 " + threshold_z.summary("checks");
  }

  void size_relations(CriterionResult& r) {
    Tally tally;
    double c[4] = {0, 0, 0, 0};
    for (const auto& [n, m] : corpus_) {
      const double lg = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
      const double z = static_cast<double>(m.z);
      auto where = [&, n = n] { return "n=" + std::to_string(n) + " z=" + std::to_string(m.z); };
      tally.expect(m.z_end_tau <= 8 * z * lg * lg, [&] { return where() + " z_end_tau=" + std::to_string(m.z_end_tau); });
      tally.expect(m.runs <= 8 * z * lg * lg, [&] { return where() + " r=" + std::to_string(m.runs); });
      tally.expect(m.lyndon <= 8 * z * lg, [&] { return where() + " lyndon=" + std::to_string(m.lyndon); });
      tally.expect(m.delta <= z, [&] { return where() + " delta=" + fixed(m.delta); });
      c[0] = std::max(c[0], m.c_end_tau(n));
      c[1] = std::max(c[1], m.c_runs(n));
      c[2] = std::max(c[2], m.c_lyndon(n));
      c[3] = std::max(c[3], m.c_delta());
    }
    r.passed = !corpus_.empty() && tally.ok();
    r.detail = std::to_string(corpus_.size()) + " planted texts, " + tally.summary("checks") +
               "; fitted c_end_tau=" + fixed(c[0], 4) + " c_runs=" + fixed(c[1], 4) + " c_lyndon=" + fixed(c[2], 4) +
               " c_delta=" + fixed(c[3], 4) + " (limit 8, 8, 8, 1)";
  }

  bool full_;
  const VerifySink& emit_;
  QueryLedger* ledger_;
  std::vector<CriterionResult> results_;
  std::size_t token_runs_ = 0, token_failures_ = 0;
  std::string token_first_;
  std::vector<std::pair<std::size_t, SizeMeasures>> corpus_;
};

}  // namespace

VerifyLevel parse_verify_level(std::string_view name) {
  if (name == "quick") return VerifyLevel::quick;
  if (name == "full") return VerifyLevel::full;
  throw PreconditionError("unknown verification level '" + std::string(name) + "'");
}

std::string format_criterion(const CriterionResult& r) {
  return "criterion " + std::to_string(r.id) + " [" + r.name + "] " + (r.passed ? "PASS" : "FAIL") + " (" +
         fixed(r.seconds, 2) + " s) " + r.detail;
}

std::vector<CriterionResult> run_verification(VerifyLevel level, const VerifySink& emit, QueryLedger* ledger) {
  return Verifier(level, emit, ledger).run();
}

}  // namespace qstring
