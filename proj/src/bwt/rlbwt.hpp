#pragma once

#include <iosfwd>
#include <utility>

#include "common.hpp"
#include "lz/factorization.hpp"

namespace qstring {

/// Sentinel symbol of the internal BWT alphabet; input symbol c is stored as c + 1.
inline constexpr symbol_t kSentinel = 0;

struct Run {
  symbol_t symbol = 0;
  std::size_t length = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length encoded BWT of X$ with rank support over run boundaries.
/// Rows are 1-based; size() counts the sentinel.
class RlBwt {
 public:
  RlBwt() : RlBwt(std::vector<Run>{{kSentinel, 1}}) {}
  /// Throws ValidationError unless the runs form the BWT shape (one sentinel, no empty
  /// or mergeable runs).
  explicit RlBwt(std::vector<Run> runs);

  std::size_t size() const { return n_; }
  std::size_t runs_count() const { return runs_.size(); }
  const std::vector<Run>& runs() const { return runs_; }

  /// First row of run t (0-based run index).
  std::size_t run_start(std::size_t t) const { return starts_[t]; }
  std::size_t run_of(std::size_t i) const;
  bool is_run_start(std::size_t i) const { return starts_[run_of(i)] == i; }
  symbol_t at(std::size_t i) const { return runs_[run_of(i)].symbol; }

  /// Occurrences of c in rows [1..i].
  std::size_t rank(symbol_t c, std::size_t i) const;
  /// Rows holding symbols smaller than c.
  std::size_t smaller(symbol_t c) const;
  bool contains(symbol_t c) const;
  std::size_t lf(std::size_t i) const;

  Text expand() const;

  friend bool operator==(const RlBwt& a, const RlBwt& b) { return a.runs_ == b.runs_; }

 private:
  std::size_t symbol_index(symbol_t c) const;

  std::vector<Run> runs_;
  std::size_t n_ = 0;
  std::vector<std::size_t> starts_;
  std::vector<symbol_t> alphabet_;
  std::vector<std::size_t> below_;
  // Per symbol: indices of its runs and the count of the symbol before each of them.
  std::vector<std::vector<std::size_t>> sym_runs_, sym_before_;
};

/// BWT of the text followed by the sentinel, with symbols shifted as above.
RlBwt build_rlbwt(const Text& text);
RlBwt build_rlbwt(const Factorization& f);
/// Same, given the suffix array of text$ (0-based, sentinel suffix first).
RlBwt rlbwt_from_suffix_array(const Text& text, const std::vector<std::uint32_t>& sa);

void write_rlbwt_text(std::ostream& out, const RlBwt& b);
RlBwt read_rlbwt_text(std::istream& in);
void write_rlbwt_binary(std::ostream& out, const RlBwt& b);
RlBwt read_rlbwt_binary(std::istream& in);

}  // namespace qstring
