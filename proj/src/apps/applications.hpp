#pragma once

#include <iosfwd>

#include "bwt/bundle.hpp"
#include "oracle/oracle.hpp"

namespace qstring {

struct MatchReport {
  enum class Kind { lcs, mum };
  Kind kind = Kind::lcs;
  std::size_t start1 = 0, start2 = 0;  // 1-based; 0 for an empty match
  std::size_t length = 0;
  friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

/// Longest common substring of the two halves of a pair index. Among longest matches the
/// smallest s1 start wins, then the smallest s2 start.
MatchReport longest_common_substring(const RIndex& idx, const PairLayout& layout);
MatchReport longest_common_substring(const Text& s1, const Text& s2);

/// Maximal unique matches from adjacent rows at BWT run boundaries, sorted by s1 start.
std::vector<MatchReport> maximal_unique_matches(const RIndex& idx, const PairLayout& layout);
std::vector<MatchReport> maximal_unique_matches(const Text& s1, const Text& s2);

/// Start positions of the Lyndon factors: the prefix minima of ISA. Searches are charged
/// to `ledger` as Grover calls.
std::vector<std::size_t> lyndon_factorization(const RIndex& idx, QueryLedger& ledger);
std::vector<std::size_t> lyndon_factorization(const RIndex& idx);

struct QGram {
  std::size_t start = 0;  // one occurrence of the q-gram
  std::size_t frequency = 0;
  friend bool operator==(const QGram&, const QGram&) = default;
};

/// Every distinct q-gram in suffix-array order, identified by (start, q).
std::vector<QGram> qgram_frequencies(const RIndex& idx, std::size_t q);

void write_matches_tsv(std::ostream& out, const std::vector<MatchReport>& m);
void write_lyndon_tsv(std::ostream& out, const std::vector<std::size_t>& starts);
void write_qgrams_tsv(std::ostream& out, const std::vector<QGram>& g);

}  // namespace qstring
