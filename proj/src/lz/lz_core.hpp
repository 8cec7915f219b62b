#pragma once

#include "lz/factorization.hpp"
#include "lz/suffix_index.hpp"
#include "oracle/oracle.hpp"

namespace qstring {

/// Greedy LZ77 parse; among equally long earlier occurrences the one starting
/// closest to the phrase is used as source.
Factorization lz77_greedy(const Text& text);

/// Greedy LZ-End parse: each phrase is the longest fragment that is a suffix of
/// the text up to some earlier phrase end; fresh symbols become literals.
Factorization lz_end_classical(const Text& text);

/// Greedy non-overlapping LZ77 from oracle access to the text.
Factorization non_overlapping_lz77_oracle(const OracleText& o);

/// Occurrence queries over a materialized text.
class OccurrenceIndex {
 public:
  explicit OccurrenceIndex(const Text& t) : idx_(t) {}
  /// Smallest start of an occurrence of text[start..start+len) (1-based).
  std::size_t leftmost_occurrence(std::size_t start, std::size_t len) const;
  /// Largest start strictly below `limit` of an occurrence of text[start..start+len).
  std::size_t rightmost_occurrence_before(std::size_t start, std::size_t len, std::size_t limit) const;

 private:
  SuffixIndex idx_;
};

/// LZ77 parse of the text spelled by any LZ77-like factorization.
Factorization convert_to_lz77(const Factorization& f);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
};

/// max over q of (number of distinct length-q substrings) / q.
Rational substring_complexity(const Text& text);

}  // namespace qstring
