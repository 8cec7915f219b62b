// qstring: command-line front end over the libqstring C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qstring/qstring.h"

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2 };

struct CliError {
  int code;
  std::string message;
};

void check(qs_status s) {
  if (s == QS_OK) return;
  const bool usage = s == QS_ERR_ARGUMENT || s == QS_ERR_RANGE || s == QS_ERR_PRECONDITION;
  throw CliError{usage ? kUsage : kFailure, qs_last_error()};
}

void to_stream(const char* data, size_t len, void* user) { static_cast<std::ostream*>(user)->write(data, len); }

void to_line(const char* data, size_t len, void* user) {
  auto* out = static_cast<std::ostream*>(user);
  out->write(data, len);
  *out << '\n' << std::flush;
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kFailure, "cannot read " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kFailure, "cannot write " + path};
  return out;
}

std::vector<uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

using LedgerPtr = std::unique_ptr<qs_ledger, decltype(&qs_ledger_destroy)>;
using IndexPtr = std::unique_ptr<qs_index, decltype(&qs_index_destroy)>;

LedgerPtr make_ledger(size_t n, double c_rep) {
  qs_ledger* l = nullptr;
  check(qs_ledger_create(n, c_rep, &l));
  return {l, &qs_ledger_destroy};
}

void dump_ledger(const qs_ledger* l, const std::string& path) {
  if (path.empty()) return;
  auto out = open_out(path);
  check(qs_ledger_write_csv(l, to_stream, &out));
}

IndexPtr load_index(const std::string& dir) {
  qs_index* idx = nullptr;
  check(qs_index_load(dir.c_str(), &idx));
  return {idx, &qs_index_destroy};
}

size_t parse_size_value(const std::string& s) {
  try {
    if (s.rfind("2^", 0) == 0) {
      const unsigned long e = std::stoul(s.substr(2));
      if (e >= 48) throw CliError{kUsage, "size too large: " + s};
      return size_t{1} << e;
    }
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<size_t>(v);
  } catch (const std::logic_error&) {
    throw CliError{kUsage, "bad size '" + s + "'"};
  }
}

// "1024,4096", "2^10..2^14" (doubling) or a mix of both.
std::vector<size_t> parse_sizes(const std::string& list) {
  std::vector<size_t> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string::npos) comma = list.size();
    const std::string tok = list.substr(pos, comma - pos);
    const std::size_t dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_size_value(tok));
    } else {
      size_t lo = parse_size_value(tok.substr(0, dots)), hi = parse_size_value(tok.substr(dots + 2));
      if (lo == 0 || lo > hi) throw CliError{kUsage, "bad size range '" + tok + "'"};
      for (size_t n = lo; n <= hi; n *= 2) out.push_back(n);
    }
    pos = comma + 1;
  }
  return out;
}

struct Common {
  std::string ledger;
  double c_rep = 1.0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--ledger", c.ledger, "Write the query ledger CSV to this path");
  cmd->add_option("--repetition-factor", c.c_rep, "Constant c in the repetition factor ceil(c log2 n)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-counted string algorithms: factorizations, edit distance and r-index queries"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qs_version()));

  Common common;

  auto* fact = app.add_subcommand("factorize", "Factorize a raw byte file; prints the phrase count");
  std::string fact_in, fact_algo = "lz77", fact_out;
  size_t fact_tau = 0;
  fact->add_option("input", fact_in, "Input file")->required();
  fact->add_option("--algo", fact_algo, "lz77 | nolz77 | lzend | lzend-tau")
      ->check(CLI::IsMember({"lz77", "nolz77", "lzend", "lzend-tau"}));
  fact->add_option("--tau", fact_tau, "Source spacing for lzend-tau (0 searches by doubling)");
  fact->add_option("--out", fact_out, "Write the factorization as JSON lines");
  add_common(fact, common);

  auto* index = app.add_subcommand("index", "Build or query an r-index bundle");
  index->require_subcommand(1);
  auto* build = index->add_subcommand("build", "Build a bundle directory from a raw byte file");
  std::string build_in, build_dir, build_pair;
  build->add_option("input", build_in, "Input file")->required();
  build->add_option("bundle", build_dir, "Output bundle directory")->required();
  build->add_option("--pair", build_pair, "Second file; indexes input + separator + pair for lcs and mum");
  add_common(build, common);

  auto* query = index->add_subcommand("query", "Query a bundle: count P | locate P | sa i | isa i | lyndon | qgrams q | lcs | mum");
  std::string query_dir, query_kind, query_arg;
  query->add_option("bundle", query_dir, "Bundle directory")->required();
  query->add_option("query", query_kind, "Query kind")
      ->required()
      ->check(CLI::IsMember({"count", "locate", "sa", "isa", "lyndon", "qgrams", "lcs", "mum"}));
  query->add_option("arg", query_arg, "Pattern, row, position or q");
  add_common(query, common);

  auto* ed = app.add_subcommand("ed", "Edit distance between two raw byte files");
  std::string ed_x, ed_y;
  bool ed_script = false;
  ed->add_option("x", ed_x, "First file")->required();
  ed->add_option("y", ed_y, "Second file")->required();
  ed->add_flag("--script", ed_script, "Print an optimal edit script after the distance");
  add_common(ed, common);

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite on planted corpora and write CSV");
  std::string bench_suite = "lz", bench_sizes = "2^10..2^14", bench_out;
  uint64_t bench_seed = 1;
  size_t bench_param = 16, bench_sigma = 4;
  bool bench_timing = false;
  bench->add_option("--suite", bench_suite, "lz | ed | index")->check(CLI::IsMember({"lz", "ed", "index"}));
  bench->add_option("--sizes", bench_sizes, "Comma list of sizes; a..b doubles from a to b; 2^k allowed");
  bench->add_option("--seed", bench_seed, "Corpus seed");
  bench->add_option("--param", bench_param, "Planted z (lz, index) or k (ed)");
  bench->add_option("--sigma", bench_sigma, "Alphabet size of generated texts")->check(CLI::Range(1, 26));
  bench->add_option("--out", bench_out, "CSV path (stdout when omitted)");
  bench->add_flag("--timing", bench_timing, "Record wall time instead of NA");
  add_common(bench, common);

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks against brute-force oracles");
  std::string verify_level = "quick";
  verify->add_option("--level", verify_level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*fact) {
      const auto text = read_file(fact_in);
      auto ledger = make_ledger(text.size(), common.c_rep);
      const qs_algo algo = fact_algo == "lz77"     ? QS_ALGO_LZ77
                           : fact_algo == "nolz77" ? QS_ALGO_NOLZ77
                           : fact_algo == "lzend"  ? QS_ALGO_LZEND
                                                   : QS_ALGO_LZEND_TAU;
      qs_factorization* raw = nullptr;
      check(qs_factorize(text.data(), text.size(), algo, fact_tau, ledger.get(), &raw));
      std::unique_ptr<qs_factorization, decltype(&qs_factorization_destroy)> f(raw, &qs_factorization_destroy);
      if (!fact_out.empty()) {
        auto out = open_out(fact_out);
        check(qs_factorization_write_jsonl(f.get(), to_stream, &out));
      }
      dump_ledger(ledger.get(), common.ledger);
      std::cout << qs_factorization_size(f.get()) << '\n';
      return kOk;
    }

    if (*build) {
      const auto s1 = read_file(build_in);
      qs_index* raw = nullptr;
      if (build_pair.empty()) {
        check(qs_index_build(s1.data(), s1.size(), &raw));
      } else {
        const auto s2 = read_file(build_pair);
        check(qs_index_build_pair(s1.data(), s1.size(), s2.data(), s2.size(), &raw));
      }
      IndexPtr idx(raw, &qs_index_destroy);
      check(qs_index_save(idx.get(), build_dir.c_str()));
      auto ledger = make_ledger(qs_index_text_length(idx.get()), common.c_rep);
      dump_ledger(ledger.get(), common.ledger);
      return kOk;
    }

    if (*query) {
      IndexPtr idx = load_index(query_dir);
      auto ledger = make_ledger(qs_index_text_length(idx.get()) + 1, common.c_rep);
      auto need_arg = [&] {
        if (query_arg.empty()) throw CliError{kUsage, "query " + query_kind + " needs an argument"};
      };
      if (query_kind == "count" || query_kind == "locate") {
        need_arg();
        const auto p = bytes_of(query_arg);
        if (query_kind == "count") {
          size_t c = 0;
          check(qs_index_count(idx.get(), p.data(), p.size(), &c));
          std::cout << c << '\n';
        } else {
          check(qs_index_locate(idx.get(), p.data(), p.size(), to_stream, &std::cout));
        }
      } else if (query_kind == "sa" || query_kind == "isa") {
        need_arg();
        const size_t i = parse_size_value(query_arg);
        size_t v = 0;
        check(query_kind == "sa" ? qs_index_sa(idx.get(), i, &v) : qs_index_isa(idx.get(), i, &v));
        std::cout << v << '\n';
      } else if (query_kind == "lyndon") {
        check(qs_index_lyndon(idx.get(), ledger.get(), to_stream, &std::cout));
      } else if (query_kind == "qgrams") {
        need_arg();
        check(qs_index_qgrams(idx.get(), parse_size_value(query_arg), to_stream, &std::cout));
      } else if (query_kind == "lcs") {
        check(qs_index_lcs(idx.get(), to_stream, &std::cout));
      } else {
        check(qs_index_mum(idx.get(), to_stream, &std::cout));
      }
      dump_ledger(ledger.get(), common.ledger);
      return kOk;
    }

    if (*ed) {
      const auto x = read_file(ed_x), y = read_file(ed_y);
      auto ledger = make_ledger(std::max(x.size(), y.size()), common.c_rep);
      size_t d = 0;
      std::string script;
      auto collect = [](const char* data, size_t len, void* user) { static_cast<std::string*>(user)->append(data, len); };
      check(qs_edit_distance(x.data(), x.size(), y.data(), y.size(), ledger.get(), &d, ed_script ? +collect : nullptr,
                             &script));
      std::cout << d << '\n' << script;
      dump_ledger(ledger.get(), common.ledger);
      return kOk;
    }

    if (*bench) {
      const auto sizes = parse_sizes(bench_sizes);
      qs_bench_options opt;
      qs_bench_options_init(&opt);
      opt.suite = bench_suite == "lz" ? QS_SUITE_LZ : bench_suite == "ed" ? QS_SUITE_ED : QS_SUITE_INDEX;
      opt.sizes = sizes.data();
      opt.sizes_count = sizes.size();
      opt.seed = bench_seed;
      opt.param = bench_param;
      opt.sigma = bench_sigma;
      opt.c_rep = common.c_rep;
      opt.timing = bench_timing ? 1 : 0;
      auto ledger = make_ledger(2, common.c_rep);
      if (bench_out.empty()) {
        check(qs_bench(&opt, ledger.get(), to_stream, &std::cout));
      } else {
        auto out = open_out(bench_out);
        check(qs_bench(&opt, ledger.get(), to_stream, &out));
      }
      dump_ledger(ledger.get(), common.ledger);
      return kOk;
    }

    if (*verify) {
      auto ledger = make_ledger(2, common.c_rep);
      int passed = 0;
      check(qs_verify(verify_level == "full" ? QS_VERIFY_FULL : QS_VERIFY_QUICK, ledger.get(), to_line, &std::cout,
                      &passed));
      dump_ledger(ledger.get(), common.ledger);
      return passed ? kOk : kFailure;
    }
  } catch (const CliError& e) {
    std::cerr << "qstring: " << e.message << '\n';
    return e.code;
  }
  return kUsage;
}
