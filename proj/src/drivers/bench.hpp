#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle/oracle.hpp"

namespace qstring {

enum class BenchSuite { lz, ed, index };

BenchSuite parse_bench_suite(std::string_view name);
std::string suite_name(BenchSuite s);

struct BenchOptions {
  BenchSuite suite = BenchSuite::lz;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  std::size_t param = 16;  // planted z for lz and index, planted k for ed
  std::size_t sigma = 4;
  double c_rep = 1.0;
  bool timing = false;
};

/// Sizes of one text under the compressibility measures compared in the bench output.
struct SizeMeasures {
  std::size_t z = 0;           // LZ77 phrases
  std::size_t z_end_tau = 0;   // LZ-End+tau phrases
  std::size_t runs = 0;        // BWT runs, sentinel included
  std::size_t lyndon = 0;      // Lyndon factors
  double delta = 0;            // substring complexity

  double c_end_tau(std::size_t n) const;
  double c_runs(std::size_t n) const;
  double c_lyndon(std::size_t n) const;
  double c_delta() const;
};

struct BenchRecord {
  BenchSuite suite = BenchSuite::lz;
  std::string algorithm;
  std::size_t n = 0;
  std::string param_name;
  std::size_t param = 0;        // the planted parameter
  std::size_t measured = 0;     // measured z (lz, index) or edit distance (ed)
  std::size_t output_size = 0;  // phrases, distance or factors produced by the run
  std::uint64_t ledger_total = 0, ledger_read = 0, ledger_grover = 0, ledger_predicate = 0;
  double scaled_ledger = 0;     // ledger_total / sqrt(max(measured, 1) * n)
  std::optional<double> wall_seconds;
  std::optional<SizeMeasures> sizes;
};

/// One planted-z LZ-End+tau build.
BenchRecord bench_lz_case(std::size_t n, std::size_t z, std::uint64_t seed, const BenchOptions& opt,
                          QueryLedger* sink = nullptr);
/// One planted-k edit distance computation.
BenchRecord bench_ed_case(std::size_t n, std::size_t k, std::uint64_t seed, const BenchOptions& opt,
                          QueryLedger* sink = nullptr);
/// One planted-z r-index build followed by the Lyndon factorization.
BenchRecord bench_index_case(std::size_t n, std::size_t z, std::uint64_t seed, const BenchOptions& opt,
                             QueryLedger* sink = nullptr);

/// Known LZ-End+tau sizes can be passed in to skip the rebuild.
SizeMeasures measure_sizes(const Text& t, std::optional<std::size_t> z_end_tau = std::nullopt);

std::vector<BenchRecord> run_bench(const BenchOptions& opt, QueryLedger* sink = nullptr);

inline constexpr int kBenchCsvVersion = 1;
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

/// Least-squares slope of log2(y) against log2(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qstring
