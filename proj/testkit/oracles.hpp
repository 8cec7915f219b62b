#pragma once

// Brute-force reference implementations used as independent oracles by the
// tests and the verification driver. Nothing here calls into the algorithms
// under test except for plain data types.

#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "common.hpp"
#include "lz/factorization.hpp"

namespace qstring::testkit {

// ---- LZ family -----------------------------------------------------------

/// Greedy LZ77; ties between equally long sources go to the largest start.
Factorization naive_lz77(const Text& t);
/// Greedy non-overlapping LZ77 (sources end before the phrase starts).
Factorization naive_non_overlapping(const Text& t);
/// Greedy LZ-End+tau; tau = 0 means plain LZ-End (phrase ends only).
/// Ties between equally long sources go to the smallest source end.
Factorization naive_lz_end_tau(const Text& t, std::size_t tau);
/// Largest h in [max(s, j - tau)..j] with t[s..h] a potential factor given the
/// phrase ends in `ends` (1-based, all < s).
std::optional<std::size_t> naive_tau_far(const Text& t, std::size_t tau, const std::vector<std::size_t>& ends,
                                         std::size_t s, std::size_t j);
std::size_t naive_leftmost_occurrence(const Text& t, std::size_t start, std::size_t len);
/// (distinct q-grams, q) maximizing the ratio; the smallest such q.
std::pair<std::size_t, std::size_t> naive_substring_complexity(const Text& t);
Text naive_decompress(const Factorization& f);
/// Every LZ77-like factorization of t (phrases are fresh literals or earlier
/// occurrences, self-overlap allowed); returns the minimum size among them.
std::size_t min_lz77_like_size(const Text& t);

// ---- edit distance -------------------------------------------------------

std::size_t dp_edit_distance(const Text& x, const Text& y);
/// fwd[i][j] = ed(x[1..i], y[1..j]); bwd[i][j] = ed(x(i..], y(j..]).
struct DpTables {
  std::vector<std::vector<std::uint32_t>> fwd, bwd;
  std::size_t distance() const { return fwd.back().back(); }
  bool anchor(std::size_t i, std::size_t j) const { return fwd[i][j] + bwd[i][j] == distance(); }
};
DpTables dp_tables(const Text& x, const Text& y);

struct RawEdit {
  char op;  // 'D', 'I', 'S'
  std::size_t pos;
  symbol_t symbol;
};
/// Applies edits in order; positions refer to the original x (D, S) or the output (I).
std::optional<Text> apply_edits(const Text& x, const std::vector<RawEdit>& edits);

// ---- BWT family ----------------------------------------------------------

/// Suffix array of t$ with 1-based positions; entry 0 is the sentinel suffix n+1.
std::vector<std::size_t> naive_sa(const Text& t);
/// BWT of t$, with symbols shifted by one and 0 as the sentinel.
Text naive_bwt(const Text& t);
std::vector<std::pair<symbol_t, std::size_t>> naive_runs(const Text& bwt);
std::vector<std::size_t> naive_occurrences(const Text& t, const Text& p);

struct NaiveBwtTables {
  std::vector<std::size_t> sa, isa, lf;  // 1-based rows and positions, index 0 unused
  Text bwt;                               // bwt[0] is row 1
  bool run_start(std::size_t row) const { return row == 1 || bwt[row - 1] != bwt[row - 2]; }
};
NaiveBwtTables naive_bwt_tables(const Text& t);
/// Iterates LF on the rows [s..e] until the interval holds a run start. Returns
/// (steps, s', e'), or nullopt if some step does not map the interval contiguously.
std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> naive_pullback(const NaiveBwtTables& nt,
                                                                               std::size_t s, std::size_t e);

// ---- applications --------------------------------------------------------

std::size_t naive_lcs_length(const Text& a, const Text& b);
/// (start in a, start in b, length), 1-based, sorted.
std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> naive_mums(const Text& a, const Text& b);
std::vector<std::size_t> duval_starts(const Text& t);
std::map<Text, std::size_t> hash_qgrams(const Text& t, std::size_t q);

// ---- corpora -------------------------------------------------------------

Text random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma);
/// Text of length n built from sigma seed symbols followed by copies of random
/// earlier fragments, each followed by one random symbol.
Text planted_z_text(std::mt19937_64& rng, std::size_t n, std::size_t z, std::size_t sigma);
/// y obtained from x by exactly k random edits (so ed(x, y) <= k).
Text planted_edits(std::mt19937_64& rng, const Text& x, std::size_t k, std::size_t sigma);
/// All strings over [0..sigma) of length exactly n, in lexicographic order.
std::vector<Text> all_strings(std::size_t n, std::size_t sigma);

}  // namespace qstring::testkit
