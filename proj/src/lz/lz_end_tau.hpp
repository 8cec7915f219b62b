#pragma once

#include <optional>

#include "lz/factorization.hpp"
#include "lz/prefix_pool.hpp"

namespace qstring {

/// A run of pool ranks [lo, hi) whose entries are read with `offset` subtracted.
struct MergedRange {
  std::size_t lo = 0, hi = 0, offset = 0;
};

/// The x-th smallest (1-based, co-lexicographic) value among the shifted ranges.
std::size_t kth_of_merged_ranges(const PrefixPool& pool, const DynamicLce& known,
                                 const std::vector<MergedRange>& ranges, std::size_t x);

/// Oracle-driven LZ-End+tau factorizer for one fixed tau.
class LzEndTauFactorizer {
 public:
  LzEndTauFactorizer(const OracleText& o, std::size_t tau);
  LzEndTauFactorizer(const LzEndTauFactorizer&) = delete;
  LzEndTauFactorizer& operator=(const LzEndTauFactorizer&) = delete;

  struct TauFar {
    bool holds = false;
    std::optional<std::size_t> h;
    std::pair<std::size_t, std::size_t> sources{0, 0};  // pool ranks of sources for X[s..h]
  };

  std::size_t position() const { return s_; }
  std::size_t tau() const { return tau_; }
  bool done() const { return s_ > o_.length(); }
  std::size_t phrase_count() const { return phrases_.size(); }

  /// Restarts on a new text, keeping allocated buffers.
  void reset(const OracleText& o, std::size_t tau);

  TauFar tau_far_holds(std::size_t j);
  Phrase next_factor();
  void insert_prefixes(const Phrase& p);
  /// next_factor followed by insert_prefixes.
  Phrase step();

  const PrefixPool& pool() const { return pool_; }
  const DynamicLce& known() const { return known_; }
  Factorization result() const;

 private:
  symbol_t sym(std::size_t i);

  OracleText o_;
  std::size_t tau_;
  std::size_t s_ = 1;
  DynamicLce known_;
  PrefixPool pool_;
  std::vector<std::int64_t> cache_;
  std::vector<symbol_t> seen_;  // sorted
  std::vector<Phrase> phrases_;
  std::optional<Phrase> pending_;
  // Scratch buffers reused across tau_far_holds calls.
  Text window_;
  PrefixFingerprints window_hashes_;
  std::vector<std::pair<std::size_t, std::size_t>> ranges_;
  std::vector<MergedRange> merged_;
};

struct LzEndTauOptions {
  std::size_t tau = 0;                 // 0 selects z_guess doubling
  std::size_t max_phrases = SIZE_MAX;  // builds exceeding this abort
};

/// LZ-End+tau parse of the oracle text, or nullopt if the phrase cap was exceeded.
std::optional<Factorization> lz_end_tau_build(const OracleText& o, const LzEndTauOptions& opt);
Factorization lz_end_tau_build(const OracleText& o);
Factorization lz_end_tau_build(const OracleText& o, std::size_t tau);

}  // namespace qstring
