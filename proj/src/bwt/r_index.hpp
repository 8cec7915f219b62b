#pragma once

#include <optional>
#include <utility>

#include "bwt/lf_shortcut.hpp"
#include "lz/dynamic_lce.hpp"

namespace qstring {

/// SA values at rows whose text position is 1 + k*tau or the sentinel suffix,
/// plus the first and last row of every run.
struct SampledSa {
  std::size_t tau = 1;
  std::vector<std::pair<std::size_t, std::size_t>> rows;  // (row, SA[row]) sorted by row

  std::optional<std::size_t> find(std::size_t row) const;
  friend bool operator==(const SampledSa&, const SampledSa&) = default;
};

struct Pullback {
  std::size_t k = 0, s = 0, e = 0;
  friend bool operator==(const Pullback&, const Pullback&) = default;
};

/// Run-length BWT index of a text with LF^tau shortcuts and sampled suffix array.
///
/// Rows are 1..size(), where size() = text length + 1. Text positions are 1-based and
/// position size() is the sentinel suffix, so sa(1) == size().
class RIndex {
 public:
  /// tau = 0 picks ceil(sqrt(n / r)) rounded up to a power of two.
  explicit RIndex(Text text, std::size_t tau = 0);
  RIndex(Text text, RlBwt bwt, LfShortcut shortcut, SampledSa samples);

  std::size_t size() const { return bwt_.size(); }
  std::size_t text_length() const { return text_.size(); }
  std::size_t runs() const { return bwt_.runs_count(); }
  std::size_t tau() const { return shortcut_.tau(); }
  const Text& text() const { return text_; }
  const RlBwt& bwt() const { return bwt_; }
  const LfShortcut& shortcut() const { return shortcut_; }
  const SampledSa& samples() const { return samples_; }

  std::size_t lf(std::size_t i) const { return bwt_.lf(i); }
  std::size_t lf_pow(std::size_t i) const { return shortcut_.lf_pow(i); }

  std::size_t sa(std::size_t i) const;
  std::size_t isa(std::size_t p) const;

  /// Longest common extension of text suffixes p and q (1-based, up to size()).
  std::size_t lce(std::size_t p, std::size_t q) const;
  /// Orders the suffixes of text$ starting at p and q.
  bool suffix_less(std::size_t p, std::size_t q) const;

  /// Rows of suffixes prefixed by the pattern (input symbols), or nullopt if absent.
  std::optional<std::pair<std::size_t, std::size_t>> interval(const Text& pattern) const;
  std::size_t count(const Text& pattern) const;
  /// Sorted text positions of the pattern's occurrences.
  std::vector<std::size_t> locate(const Text& pattern) const;

  /// Smallest k with LF^k([s..e]) = [s'..e'] containing a run start.
  Pullback run_boundary_pullback(std::size_t s, std::size_t e) const;

 private:
  Text text_;
  RlBwt bwt_;
  LfShortcut shortcut_;
  SampledSa samples_;
  DynamicLce lce_;
};

std::size_t default_index_tau(std::size_t n, std::size_t r);

}  // namespace qstring
