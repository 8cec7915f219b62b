#ifndef QSTRING_QSTRING_H
#define QSTRING_QSTRING_H

/*
 * C interface to libqstring: query-counted string algorithms over oracle texts.
 *
 * Every function returns a qs_status. On failure a message describing the error
 * is available from qs_last_error() until the next call on the same thread.
 * Handles are opaque and owned by the caller; release them with the matching
 * *_destroy function. Text inputs are raw bytes.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QS_API __declspec(dllexport)
#elif defined(__GNUC__)
#define QS_API __attribute__((visibility("default")))
#else
#define QS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qs_status {
  QS_OK = 0,
  QS_ERR_ARGUMENT = 1,     /* null handle, bad enum or malformed option */
  QS_ERR_RANGE = 2,        /* position or parameter out of range */
  QS_ERR_PRECONDITION = 3, /* input violates an operation's precondition */
  QS_ERR_VALIDATION = 4,   /* a file or structure failed validation */
  QS_ERR_IO = 5,
  QS_ERR_INTERNAL = 6
} qs_status;

QS_API const char* qs_last_error(void);
QS_API const char* qs_version(void);

/* Receives output text in one or more chunks. */
typedef void (*qs_write_fn)(const char* data, size_t len, void* user);

/* ---- query ledger ------------------------------------------------------ */

typedef struct qs_ledger qs_ledger;

/* repetition factor = ceil(c_rep * log2(max(n, 2))) */
QS_API qs_status qs_ledger_create(size_t n, double c_rep, qs_ledger** out);
QS_API void qs_ledger_destroy(qs_ledger* ledger);
QS_API uint64_t qs_ledger_total(const qs_ledger* ledger);
QS_API uint64_t qs_ledger_repetition_factor(const qs_ledger* ledger);
/* CSV with header "tag,count" and rows "path:kind,count". */
QS_API qs_status qs_ledger_write_csv(const qs_ledger* ledger, qs_write_fn write, void* user);

/* ---- factorization ----------------------------------------------------- */

typedef enum qs_algo { QS_ALGO_LZ77 = 0, QS_ALGO_NOLZ77 = 1, QS_ALGO_LZEND = 2, QS_ALGO_LZEND_TAU = 3 } qs_algo;

typedef struct qs_factorization qs_factorization;

/* tau applies to QS_ALGO_LZEND_TAU; 0 selects the doubling search. */
QS_API qs_status qs_factorize(const uint8_t* text, size_t len, qs_algo algo, size_t tau, qs_ledger* ledger,
                              qs_factorization** out);
QS_API void qs_factorization_destroy(qs_factorization* f);
QS_API size_t qs_factorization_size(const qs_factorization* f);
/* JSON lines: a header {"kind", "tau", "n"} followed by one phrase per line. */
QS_API qs_status qs_factorization_write_jsonl(const qs_factorization* f, qs_write_fn write, void* user);

/* ---- edit distance ----------------------------------------------------- */

/* script receives lines "D x", "I y c" or "S x c" when non-null. */
QS_API qs_status qs_edit_distance(const uint8_t* x, size_t x_len, const uint8_t* y, size_t y_len, qs_ledger* ledger,
                                  size_t* distance, qs_write_fn script, void* user);

/* ---- r-index ----------------------------------------------------------- */

typedef struct qs_index qs_index;

QS_API qs_status qs_index_build(const uint8_t* text, size_t len, qs_index** out);
/* Index over s1 + separator + s2 for the two-string queries. */
QS_API qs_status qs_index_build_pair(const uint8_t* s1, size_t len1, const uint8_t* s2, size_t len2, qs_index** out);
QS_API qs_status qs_index_save(const qs_index* index, const char* dir);
QS_API qs_status qs_index_load(const char* dir, qs_index** out);
QS_API void qs_index_destroy(qs_index* index);

QS_API size_t qs_index_text_length(const qs_index* index);
QS_API size_t qs_index_runs(const qs_index* index);
QS_API int qs_index_is_pair(const qs_index* index);

QS_API qs_status qs_index_count(const qs_index* index, const uint8_t* pattern, size_t len, size_t* count);
/* One 1-based position per line, increasing. */
QS_API qs_status qs_index_locate(const qs_index* index, const uint8_t* pattern, size_t len, qs_write_fn write,
                                 void* user);
/* Rows are 1..n+1; row 1 holds the sentinel suffix n+1. */
QS_API qs_status qs_index_sa(const qs_index* index, size_t row, size_t* position);
QS_API qs_status qs_index_isa(const qs_index* index, size_t position, size_t* row);

/* TSV results. lcs and mum need a pair index. */
QS_API qs_status qs_index_lcs(const qs_index* index, qs_write_fn write, void* user);
QS_API qs_status qs_index_mum(const qs_index* index, qs_write_fn write, void* user);
QS_API qs_status qs_index_lyndon(const qs_index* index, qs_ledger* ledger, qs_write_fn write, void* user);
QS_API qs_status qs_index_qgrams(const qs_index* index, size_t q, qs_write_fn write, void* user);

/* ---- drivers ----------------------------------------------------------- */

typedef enum qs_suite { QS_SUITE_LZ = 0, QS_SUITE_ED = 1, QS_SUITE_INDEX = 2 } qs_suite;

typedef struct qs_bench_options {
  qs_suite suite;
  const size_t* sizes;
  size_t sizes_count;
  uint64_t seed;
  size_t param; /* planted z (lz, index) or k (ed) */
  size_t sigma;
  double c_rep;
  int timing; /* nonzero records wall time; otherwise the column is NA */
} qs_bench_options;

QS_API void qs_bench_options_init(qs_bench_options* opt);
/* Writes the versioned bench CSV. ledger, when non-null, accumulates every run. */
QS_API qs_status qs_bench(const qs_bench_options* opt, qs_ledger* ledger, qs_write_fn csv, void* user);

typedef enum qs_verify_level { QS_VERIFY_QUICK = 0, QS_VERIFY_FULL = 1 } qs_verify_level;

/* Runs the acceptance criteria. line receives each result line (without newline);
 * *all_passed is set to 1 when every criterion passed. */
QS_API qs_status qs_verify(qs_verify_level level, qs_ledger* ledger, qs_write_fn line, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
