#include "drivers/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <random>

#include "apps/applications.hpp"
#include "drivers/corpus.hpp"
#include "ed/solve.hpp"
#include "lz/lz_core.hpp"
#include "lz/lz_end_tau.hpp"

namespace qstring {

namespace {
double lg(std::size_t n) { return std::log2(static_cast<double>(std::max<std::size_t>(n, 2))); }

std::uint64_t case_seed(std::uint64_t seed, BenchSuite suite, std::size_t n, std::size_t param) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(param)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

void fill_ledger(BenchRecord& r, const QueryLedger& l) {
  r.ledger_total = l.total();
  r.ledger_read = l.total(QueryLedger::Kind::read);
  r.ledger_grover = l.total(QueryLedger::Kind::grover);
  r.ledger_predicate = l.total(QueryLedger::Kind::predicate);
  const double m = static_cast<double>(std::max<std::size_t>(r.measured, 1));
  r.scaled_ledger = static_cast<double>(r.ledger_total) / std::sqrt(m * static_cast<double>(std::max<std::size_t>(r.n, 1)));
}

BenchRecord start_record(BenchSuite suite, const char* algorithm, std::size_t n, const char* param_name,
                         std::size_t param) {
  BenchRecord r;
  r.suite = suite;
  r.algorithm = algorithm;
  r.n = n;
  r.param_name = param_name;
  r.param = param;
  return r;
}

std::string case_tag(const BenchRecord& r) {
  return suite_name(r.suite) + "/n" + std::to_string(r.n) + "_" + r.param_name + std::to_string(r.param);
}

void absorb(QueryLedger* sink, const QueryLedger& l, const BenchRecord& r) {
  if (sink) sink->absorb(l, case_tag(r));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}
}  // namespace

BenchSuite parse_bench_suite(std::string_view name) {
  if (name == "lz") return BenchSuite::lz;
  if (name == "ed") return BenchSuite::ed;
  if (name == "index") return BenchSuite::index;
  throw PreconditionError("unknown bench suite '" + std::string(name) + "'");
}

std::string suite_name(BenchSuite s) {
  switch (s) {
    case BenchSuite::lz:
      return "lz";
    case BenchSuite::ed:
      return "ed";
    case BenchSuite::index:
      return "index";
  }
  return "?";
}

double SizeMeasures::c_end_tau(std::size_t n) const { return z_end_tau / (std::max<std::size_t>(z, 1) * lg(n) * lg(n)); }
double SizeMeasures::c_runs(std::size_t n) const { return runs / (std::max<std::size_t>(z, 1) * lg(n) * lg(n)); }
double SizeMeasures::c_lyndon(std::size_t n) const { return lyndon / (std::max<std::size_t>(z, 1) * lg(n)); }
double SizeMeasures::c_delta() const { return delta / static_cast<double>(std::max<std::size_t>(z, 1)); }

SizeMeasures measure_sizes(const Text& t, std::optional<std::size_t> z_end_tau) {
  SizeMeasures m;
  m.z = lz77_greedy(t).size();
  if (z_end_tau) {
    m.z_end_tau = *z_end_tau;
  } else {
    QueryLedger scratch(t.size());
    m.z_end_tau = lz_end_tau_build(OracleText(t, scratch)).size();
  }
  RIndex idx(t);
  m.runs = idx.runs();
  m.lyndon = lyndon_factorization(idx).size();
  m.delta = substring_complexity(t).value();
  return m;
}

BenchRecord bench_lz_case(std::size_t n, std::size_t z, std::uint64_t seed, const BenchOptions& opt,
                          QueryLedger* sink) {
  std::mt19937_64 rng(case_seed(seed, BenchSuite::lz, n, z));
  auto text = std::make_shared<const Text>(repeated_block_text(rng, n, z, opt.sigma));
  BenchRecord r = start_record(BenchSuite::lz, "lzend-tau", n, "z", z);
  QueryLedger ledger(n, opt.c_rep);
  Stopwatch clock;
  Factorization f = lz_end_tau_build(OracleText(text, ledger));
  const double secs = clock.seconds();
  r.output_size = f.size();
  r.measured = convert_to_lz77(f).size();
  if (opt.timing) r.wall_seconds = secs;
  fill_ledger(r, ledger);
  r.sizes = measure_sizes(*text, r.output_size);
  absorb(sink, ledger, r);
  return r;
}

BenchRecord bench_ed_case(std::size_t n, std::size_t k, std::uint64_t seed, const BenchOptions& opt,
                          QueryLedger* sink) {
  std::mt19937_64 rng(case_seed(seed, BenchSuite::ed, n, k));
  auto [x, y] = random_edit_pair(rng, n, k, opt.sigma);
  BenchRecord r = start_record(BenchSuite::ed, "solve", n, "k", k);
  QueryLedger ledger(std::max(x.size(), y.size()), opt.c_rep);
  auto xs = std::make_shared<const Text>(std::move(x));
  auto ys = std::make_shared<const Text>(std::move(y));
  Stopwatch clock;
  SolveResult res = solve(OracleText(xs, ledger), OracleText(ys, ledger));
  const double secs = clock.seconds();
  r.measured = r.output_size = res.distance;
  if (opt.timing) r.wall_seconds = secs;
  fill_ledger(r, ledger);
  absorb(sink, ledger, r);
  return r;
}

BenchRecord bench_index_case(std::size_t n, std::size_t z, std::uint64_t seed, const BenchOptions& opt,
                             QueryLedger* sink) {
  std::mt19937_64 rng(case_seed(seed, BenchSuite::index, n, z));
  Text text = repeated_block_text(rng, n, z, opt.sigma);
  BenchRecord r = start_record(BenchSuite::index, "lyndon", n, "z", z);
  QueryLedger ledger(n, opt.c_rep);
  Stopwatch clock;
  RIndex idx(text);
  r.output_size = lyndon_factorization(idx, ledger).size();
  const double secs = clock.seconds();
  if (opt.timing) r.wall_seconds = secs;
  SizeMeasures m = measure_sizes(text);
  r.measured = m.z;
  r.sizes = m;
  fill_ledger(r, ledger);
  absorb(sink, ledger, r);
  return r;
}

std::vector<BenchRecord> run_bench(const BenchOptions& opt, QueryLedger* sink) {
  if (opt.sizes.empty()) throw PreconditionError("bench: no sizes given");
  std::vector<BenchRecord> rows;
  for (std::size_t n : opt.sizes) {
    if (n == 0) throw PreconditionError("bench: sizes must be positive");
    switch (opt.suite) {
      case BenchSuite::lz:
        rows.push_back(bench_lz_case(n, opt.param, opt.seed, opt, sink));
        break;
      case BenchSuite::ed:
        rows.push_back(bench_ed_case(n, opt.param, opt.seed, opt, sink));
        break;
      case BenchSuite::index:
        rows.push_back(bench_index_case(n, opt.param, opt.seed, opt, sink));
        break;
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
  out << "# qstring-bench v" << kBenchCsvVersion << '\n';
  out << "suite,algorithm,n,param_name,param,measured,output_size,ledger_total,ledger_read,ledger_grover,"
         "ledger_predicate,scaled_ledger,wall_seconds,z,z_end_tau,runs,lyndon,delta,c_end_tau,c_runs,c_lyndon,"
         "c_delta\n";
  double max_c[4] = {0, 0, 0, 0};
  bool any_sizes = false;
  for (const auto& r : rows) {
    out << suite_name(r.suite) << ',' << r.algorithm << ',' << r.n << ',' << r.param_name << ',' << r.param << ','
        << r.measured << ',' << r.output_size << ',' << r.ledger_total << ',' << r.ledger_read << ','
        << r.ledger_grover << ',' << r.ledger_predicate << ',' << fmt(r.scaled_ledger) << ','
        << (r.wall_seconds ? fmt(*r.wall_seconds) : "NA");
    if (r.sizes) {
      const SizeMeasures& m = *r.sizes;
      const double c[4] = {m.c_end_tau(r.n), m.c_runs(r.n), m.c_lyndon(r.n), m.c_delta()};
      out << ',' << m.z << ',' << m.z_end_tau << ',' << m.runs << ',' << m.lyndon << ',' << fmt(m.delta);
      for (int i = 0; i < 4; ++i) {
        out << ',' << fmt(c[i]);
        max_c[i] = std::max(max_c[i], c[i]);
      }
      any_sizes = true;
    } else {
      out << ",NA,NA,NA,NA,NA,NA,NA,NA,NA";
    }
    out << '\n';
  }
  if (any_sizes)
    out << "# fitted c_end_tau=" << fmt(max_c[0]) << " c_runs=" << fmt(max_c[1]) << " c_lyndon=" << fmt(max_c[2])
        << " c_delta=" << fmt(max_c[3]) << '\n';
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw PreconditionError("loglog_slope: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::log2(x[i]), b = std::log2(y[i]);
    sx += a, sy += b, sxx += a * a, sxy += a * b;
  }
  const double den = m * sxx - sx * sx;
  if (den == 0) throw PreconditionError("loglog_slope: x values must differ");
  return (m * sxy - sx * sy) / den;
}

}  // namespace qstring
