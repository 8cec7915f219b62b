#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qstring/qstring.h>

#include <cstring>
#include <filesystem>
#include <string>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {
void append(const char* data, size_t len, void* user) { static_cast<std::string*>(user)->append(data, len); }

const uint8_t* bytes(const std::string& s) { return reinterpret_cast<const uint8_t*>(s.data()); }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qstring_capi_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

qs_index* build(const std::string& s) {
  qs_index* idx = nullptr;
  REQUIRE(qs_index_build(bytes(s), s.size(), &idx) == QS_OK);
  return idx;
}
}  // namespace

TEST_CASE("ledger handles") {
  qs_ledger* l = nullptr;
  REQUIRE(qs_ledger_create(1024, 1.0, &l) == QS_OK);
  CHECK(qs_ledger_repetition_factor(l) == 10);
  CHECK(qs_ledger_total(l) == 0);
  std::string csv;
  CHECK(qs_ledger_write_csv(l, append, &csv) == QS_OK);
  CHECK(csv == "tag,count\n");
  qs_ledger_destroy(l);
  qs_ledger_destroy(nullptr);
  CHECK(qs_ledger_create(16, 1.0, nullptr) == QS_ERR_ARGUMENT);
  CHECK(std::strlen(qs_last_error()) > 0);
  CHECK(qs_ledger_create(16, -1.0, &l) != QS_OK);
  CHECK(std::strlen(qs_version()) > 0);
}

TEST_CASE("factorize through the C interface") {
  const std::string t = "abacabcabcaaaab";
  qs_ledger* l = nullptr;
  REQUIRE(qs_ledger_create(t.size(), 1.0, &l) == QS_OK);
  qs_factorization* f = nullptr;
  REQUIRE(qs_factorize(bytes(t), t.size(), QS_ALGO_LZ77, 0, l, &f) == QS_OK);
  CHECK(qs_factorization_size(f) == 8);
  CHECK(qs_ledger_total(l) > 0);
  std::string jsonl;
  REQUIRE(qs_factorization_write_jsonl(f, append, &jsonl) == QS_OK);
  std::size_t newlines = 0;
  for (char c : jsonl) newlines += c == '\n';
  CHECK(newlines == 9);
  CHECK(jsonl.find("\"n\": 15") != std::string::npos);
  qs_factorization_destroy(f);

  const std::string b = "00010011011";
  REQUIRE(qs_factorize(bytes(b), b.size(), QS_ALGO_LZEND_TAU, 2, l, &f) == QS_OK);
  CHECK(qs_factorization_size(f) == 8);
  qs_factorization_destroy(f);
  REQUIRE(qs_factorize(bytes(b), b.size(), QS_ALGO_LZEND, 0, nullptr, &f) == QS_OK);
  CHECK(qs_factorization_size(f) == 7);
  qs_factorization_destroy(f);
  REQUIRE(qs_factorize(nullptr, 0, QS_ALGO_NOLZ77, 0, nullptr, &f) == QS_OK);
  CHECK(qs_factorization_size(f) == 0);
  qs_factorization_destroy(f);

  CHECK(qs_factorize(bytes(t), t.size(), static_cast<qs_algo>(9), 0, l, &f) == QS_ERR_ARGUMENT);
  CHECK(qs_factorize(bytes(t), t.size(), QS_ALGO_LZ77, 0, l, nullptr) == QS_ERR_ARGUMENT);
  qs_ledger_destroy(l);
}

TEST_CASE("edit distance through the C interface") {
  std::string script;
  size_t d = 99;
  REQUIRE(qs_edit_distance(bytes("kitten"), 6, bytes("sitting"), 7, nullptr, &d, append, &script) == QS_OK);
  CHECK(d == 3);
  std::size_t lines = 0;
  for (char c : script) lines += c == '\n';
  CHECK(lines == 3);
  REQUIRE(qs_edit_distance(bytes("same"), 4, bytes("same"), 4, nullptr, &d, nullptr, nullptr) == QS_OK);
  CHECK(d == 0);
  REQUIRE(qs_edit_distance(nullptr, 0, bytes("abc"), 3, nullptr, &d, nullptr, nullptr) == QS_OK);
  CHECK(d == 3);
  CHECK(qs_edit_distance(bytes("a"), 1, bytes("b"), 1, nullptr, nullptr, nullptr, nullptr) == QS_ERR_ARGUMENT);
}

TEST_CASE("index queries and persistence") {
  qs_index* idx = build("banana");
  CHECK(qs_index_text_length(idx) == 6);
  CHECK(qs_index_is_pair(idx) == 0);
  size_t v = 0;
  REQUIRE(qs_index_count(idx, bytes("ana"), 3, &v) == QS_OK);
  CHECK(v == 2);
  std::string loc;
  REQUIRE(qs_index_locate(idx, bytes("ana"), 3, append, &loc) == QS_OK);
  CHECK(loc == "2\n4\n");
  REQUIRE(qs_index_sa(idx, 1, &v) == QS_OK);
  CHECK(v == 7);
  REQUIRE(qs_index_isa(idx, 7, &v) == QS_OK);
  CHECK(v == 1);
  CHECK(qs_index_sa(idx, 8, &v) == QS_ERR_RANGE);
  CHECK(qs_index_count(idx, bytes(""), 0, &v) != QS_OK);

  std::string lyn;
  REQUIRE(qs_index_lyndon(idx, nullptr, append, &lyn) == QS_OK);
  CHECK(lyn == "1\t2\t4\t6\n");
  std::string qg;
  REQUIRE(qs_index_qgrams(idx, 2, append, &qg) == QS_OK);
  CHECK(qg == "4\t2\n1\t1\n5\t2\n");
  std::string lcs;
  CHECK(qs_index_lcs(idx, append, &lcs) == QS_ERR_PRECONDITION);

  TempDir dir;
  const std::string bundle = (dir.path / "b").string();
  REQUIRE(qs_index_save(idx, bundle.c_str()) == QS_OK);
  qs_index* back = nullptr;
  REQUIRE(qs_index_load(bundle.c_str(), &back) == QS_OK);
  CHECK(qs_index_runs(back) == qs_index_runs(idx));
  REQUIRE(qs_index_count(back, bytes("an"), 2, &v) == QS_OK);
  CHECK(v == 2);
  qs_index_destroy(back);
  qs_index_destroy(idx);

  CHECK(qs_index_load((dir.path / "missing").string().c_str(), &back) == QS_ERR_IO);
  CHECK(std::strlen(qs_last_error()) > 0);
}

TEST_CASE("pair index queries") {
  qs_index* idx = nullptr;
  REQUIRE(qs_index_build_pair(bytes("abcde"), 5, bytes("cdefg"), 5, &idx) == QS_OK);
  CHECK(qs_index_is_pair(idx) == 1);
  std::string lcs, mum;
  REQUIRE(qs_index_lcs(idx, append, &lcs) == QS_OK);
  CHECK(lcs == "3\t1\t3\n");
  REQUIRE(qs_index_mum(idx, append, &mum) == QS_OK);
  CHECK(mum == "3\t1\t3\n");
  qs_index_destroy(idx);
}

TEST_CASE("bench through the C interface") {
  qs_bench_options opt;
  qs_bench_options_init(&opt);
  const size_t sizes[] = {1024, 2048};
  opt.sizes = sizes;
  opt.sizes_count = 2;
  qs_ledger* l = nullptr;
  REQUIRE(qs_ledger_create(0, 1.0, &l) == QS_OK);
  std::string a, b;
  REQUIRE(qs_bench(&opt, l, append, &a) == QS_OK);
  REQUIRE(qs_bench(&opt, nullptr, append, &b) == QS_OK);
  CHECK(a == b);
  CHECK(a.rfind("# qstring-bench v1\n", 0) == 0);
  CHECK(qs_ledger_total(l) > 0);
  qs_ledger_destroy(l);
  opt.sizes_count = 0;
  CHECK(qs_bench(&opt, nullptr, append, &a) != QS_OK);
  opt.suite = static_cast<qs_suite>(7);
  opt.sizes_count = 2;
  CHECK(qs_bench(&opt, nullptr, append, &a) == QS_ERR_ARGUMENT);
}
