#include "qstring/qstring.h"

#include <algorithm>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "apps/applications.hpp"
#include "bwt/bundle.hpp"
#include "drivers/bench.hpp"
#include "drivers/factorize.hpp"
#include "drivers/verify.hpp"
#include "ed/solve.hpp"

struct qs_ledger {
  qstring::QueryLedger ledger;
};

struct qs_factorization {
  qstring::Factorization f;
};

struct qs_index {
  qstring::IndexBundle bundle;
};

namespace {

thread_local std::string last_error;

qs_status fail(qs_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Maps exceptions from the core onto status codes.
template <class F>
qs_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return QS_OK;
  } catch (const qstring::RangeError& e) {
    return fail(QS_ERR_RANGE, e.what());
  } catch (const qstring::PreconditionError& e) {
    return fail(QS_ERR_PRECONDITION, e.what());
  } catch (const qstring::ValidationError& e) {
    return fail(QS_ERR_VALIDATION, e.what());
  } catch (const qstring::IoError& e) {
    return fail(QS_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QS_ERR_INTERNAL, e.what());
  }
}

qstring::Text bytes(const uint8_t* data, size_t len) {
  if (data == nullptr && len != 0) throw qstring::PreconditionError("null data with nonzero length");
  qstring::Text t(len);
  for (size_t i = 0; i < len; ++i) t[i] = data[i];
  return t;
}

void send(qs_write_fn write, void* user, const std::string& s) {
  if (write && !s.empty()) write(s.data(), s.size(), user);
}

template <class Fn>
void send_stream(qs_write_fn write, void* user, Fn&& fill) {
  std::ostringstream out;
  fill(out);
  send(write, user, out.str());
}

#define QS_REQUIRE(cond, what) \
  if (!(cond)) return fail(QS_ERR_ARGUMENT, what)

const qstring::PairLayout& pair_of(const qs_index* index) {
  if (!index->bundle.pair) throw qstring::PreconditionError("index was not built over a pair of strings");
  return *index->bundle.pair;
}

qstring::QueryLedger& ledger_or(qs_ledger* ledger, std::unique_ptr<qstring::QueryLedger>& scratch, size_t n) {
  if (ledger) return ledger->ledger;
  scratch = std::make_unique<qstring::QueryLedger>(n);
  return *scratch;
}

}  // namespace

extern "C" {

const char* qs_last_error(void) { return last_error.c_str(); }

const char* qs_version(void) { return "1.0.0"; }

qs_status qs_ledger_create(size_t n, double c_rep, qs_ledger** out) {
  QS_REQUIRE(out, "null output handle");
  QS_REQUIRE(c_rep > 0, "repetition constant must be positive");
  return guarded([&] { *out = new qs_ledger{qstring::QueryLedger(n, c_rep)}; });
}

void qs_ledger_destroy(qs_ledger* ledger) { delete ledger; }

uint64_t qs_ledger_total(const qs_ledger* ledger) { return ledger ? ledger->ledger.total() : 0; }

uint64_t qs_ledger_repetition_factor(const qs_ledger* ledger) {
  return ledger ? ledger->ledger.repetition_factor() : 0;
}

qs_status qs_ledger_write_csv(const qs_ledger* ledger, qs_write_fn write, void* user) {
  QS_REQUIRE(ledger, "null ledger");
  return guarded([&] { send_stream(write, user, [&](std::ostream& o) { ledger->ledger.write_csv(o); }); });
}

qs_status qs_factorize(const uint8_t* text, size_t len, qs_algo algo, size_t tau, qs_ledger* ledger,
                       qs_factorization** out) {
  QS_REQUIRE(out, "null output handle");
  qstring::FactorizeAlgo a;
  switch (algo) {
    case QS_ALGO_LZ77:
      a = qstring::FactorizeAlgo::lz77;
      break;
    case QS_ALGO_NOLZ77:
      a = qstring::FactorizeAlgo::nolz77;
      break;
    case QS_ALGO_LZEND:
      a = qstring::FactorizeAlgo::lzend;
      break;
    case QS_ALGO_LZEND_TAU:
      a = qstring::FactorizeAlgo::lzend_tau;
      break;
    default:
      return fail(QS_ERR_ARGUMENT, "unknown algorithm");
  }
  return guarded([&] {
    qstring::Text t = bytes(text, len);
    std::unique_ptr<qstring::QueryLedger> scratch;
    qstring::QueryLedger& l = ledger_or(ledger, scratch, len);
    *out = new qs_factorization{qstring::factorize(t, a, tau, l)};
  });
}

void qs_factorization_destroy(qs_factorization* f) { delete f; }

size_t qs_factorization_size(const qs_factorization* f) { return f ? f->f.size() : 0; }

qs_status qs_factorization_write_jsonl(const qs_factorization* f, qs_write_fn write, void* user) {
  QS_REQUIRE(f, "null factorization");
  return guarded([&] { send_stream(write, user, [&](std::ostream& o) { qstring::write_jsonl(o, f->f); }); });
}

qs_status qs_edit_distance(const uint8_t* x, size_t x_len, const uint8_t* y, size_t y_len, qs_ledger* ledger,
                           size_t* distance, qs_write_fn script, void* user) {
  QS_REQUIRE(distance, "null distance output");
  return guarded([&] {
    std::unique_ptr<qstring::QueryLedger> scratch;
    qstring::QueryLedger& l = ledger_or(ledger, scratch, std::max(x_len, y_len));
    auto xs = std::make_shared<const qstring::Text>(bytes(x, x_len));
    auto ys = std::make_shared<const qstring::Text>(bytes(y, y_len));
    qstring::SolveResult r = qstring::solve(qstring::OracleText(xs, l), qstring::OracleText(ys, l));
    *distance = r.distance;
    if (script) send_stream(script, user, [&](std::ostream& o) { qstring::write_script(o, r.script); });
  });
}

qs_status qs_index_build(const uint8_t* text, size_t len, qs_index** out) {
  QS_REQUIRE(out, "null output handle");
  return guarded([&] { *out = new qs_index{qstring::IndexBundle{qstring::RIndex(bytes(text, len)), std::nullopt}}; });
}

qs_status qs_index_build_pair(const uint8_t* s1, size_t len1, const uint8_t* s2, size_t len2, qs_index** out) {
  QS_REQUIRE(out, "null output handle");
  return guarded([&] {
    auto [t, layout] = qstring::concat_pair(bytes(s1, len1), bytes(s2, len2));
    *out = new qs_index{qstring::IndexBundle{qstring::RIndex(std::move(t)), layout}};
  });
}

qs_status qs_index_save(const qs_index* index, const char* dir) {
  QS_REQUIRE(index && dir, "null argument");
  return guarded([&] { qstring::write_bundle(dir, index->bundle); });
}

qs_status qs_index_load(const char* dir, qs_index** out) {
  QS_REQUIRE(dir && out, "null argument");
  return guarded([&] { *out = new qs_index{qstring::read_bundle(dir)}; });
}

void qs_index_destroy(qs_index* index) { delete index; }

size_t qs_index_text_length(const qs_index* index) { return index ? index->bundle.index.text_length() : 0; }

size_t qs_index_runs(const qs_index* index) { return index ? index->bundle.index.runs() : 0; }

int qs_index_is_pair(const qs_index* index) { return index && index->bundle.pair ? 1 : 0; }

qs_status qs_index_count(const qs_index* index, const uint8_t* pattern, size_t len, size_t* count) {
  QS_REQUIRE(index && count, "null argument");
  return guarded([&] { *count = index->bundle.index.count(bytes(pattern, len)); });
}

qs_status qs_index_locate(const qs_index* index, const uint8_t* pattern, size_t len, qs_write_fn write, void* user) {
  QS_REQUIRE(index, "null index");
  return guarded([&] {
    auto occ = index->bundle.index.locate(bytes(pattern, len));
    send_stream(write, user, [&](std::ostream& o) {
      for (size_t p : occ) o << p << '\n';
    });
  });
}

qs_status qs_index_sa(const qs_index* index, size_t row, size_t* position) {
  QS_REQUIRE(index && position, "null argument");
  return guarded([&] { *position = index->bundle.index.sa(row); });
}

qs_status qs_index_isa(const qs_index* index, size_t position, size_t* row) {
  QS_REQUIRE(index && row, "null argument");
  return guarded([&] { *row = index->bundle.index.isa(position); });
}

qs_status qs_index_lcs(const qs_index* index, qs_write_fn write, void* user) {
  QS_REQUIRE(index, "null index");
  return guarded([&] {
    auto m = qstring::longest_common_substring(index->bundle.index, pair_of(index));
    std::vector<qstring::MatchReport> rows;
    if (m.length > 0) rows.push_back(m);
    send_stream(write, user, [&](std::ostream& o) { qstring::write_matches_tsv(o, rows); });
  });
}

qs_status qs_index_mum(const qs_index* index, qs_write_fn write, void* user) {
  QS_REQUIRE(index, "null index");
  return guarded([&] {
    auto m = qstring::maximal_unique_matches(index->bundle.index, pair_of(index));
    send_stream(write, user, [&](std::ostream& o) { qstring::write_matches_tsv(o, m); });
  });
}

qs_status qs_index_lyndon(const qs_index* index, qs_ledger* ledger, qs_write_fn write, void* user) {
  QS_REQUIRE(index, "null index");
  return guarded([&] {
    std::unique_ptr<qstring::QueryLedger> scratch;
    qstring::QueryLedger& l = ledger_or(ledger, scratch, index->bundle.index.size());
    auto starts = qstring::lyndon_factorization(index->bundle.index, l);
    send_stream(write, user, [&](std::ostream& o) { qstring::write_lyndon_tsv(o, starts); });
  });
}

qs_status qs_index_qgrams(const qs_index* index, size_t q, qs_write_fn write, void* user) {
  QS_REQUIRE(index, "null index");
  return guarded([&] {
    auto g = qstring::qgram_frequencies(index->bundle.index, q);
    send_stream(write, user, [&](std::ostream& o) { qstring::write_qgrams_tsv(o, g); });
  });
}

void qs_bench_options_init(qs_bench_options* opt) {
  if (!opt) return;
  *opt = qs_bench_options{QS_SUITE_LZ, nullptr, 0, 1, 16, 4, 1.0, 0};
}

qs_status qs_bench(const qs_bench_options* opt, qs_ledger* ledger, qs_write_fn csv, void* user) {
  QS_REQUIRE(opt, "null options");
  QS_REQUIRE(opt->sizes || opt->sizes_count == 0, "null sizes");
  QS_REQUIRE(opt->c_rep > 0, "repetition constant must be positive");
  qstring::BenchOptions o;
  switch (opt->suite) {
    case QS_SUITE_LZ:
      o.suite = qstring::BenchSuite::lz;
      break;
    case QS_SUITE_ED:
      o.suite = qstring::BenchSuite::ed;
      break;
    case QS_SUITE_INDEX:
      o.suite = qstring::BenchSuite::index;
      break;
    default:
      return fail(QS_ERR_ARGUMENT, "unknown suite");
  }
  o.sizes.assign(opt->sizes, opt->sizes + opt->sizes_count);
  o.seed = opt->seed;
  o.param = opt->param;
  o.sigma = opt->sigma;
  o.c_rep = opt->c_rep;
  o.timing = opt->timing != 0;
  return guarded([&] {
    auto rows = qstring::run_bench(o, ledger ? &ledger->ledger : nullptr);
    send_stream(csv, user, [&](std::ostream& out) { qstring::write_bench_csv(out, rows); });
  });
}

qs_status qs_verify(qs_verify_level level, qs_ledger* ledger, qs_write_fn line, void* user, int* all_passed) {
  QS_REQUIRE(all_passed, "null result output");
  QS_REQUIRE(level == QS_VERIFY_QUICK || level == QS_VERIFY_FULL, "unknown level");
  return guarded([&] {
    auto results = qstring::run_verification(
        level == QS_VERIFY_FULL ? qstring::VerifyLevel::full : qstring::VerifyLevel::quick,
        [&](const std::string& s) { send(line, user, s); }, ledger ? &ledger->ledger : nullptr);
    *all_passed = 1;
    for (const auto& r : results) *all_passed = *all_passed && r.passed;
  });
}

}  // extern "C"
