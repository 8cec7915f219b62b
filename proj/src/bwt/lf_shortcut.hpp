#pragma once

#include <iosfwd>

#include "bwt/rlbwt.hpp"

namespace qstring {

/// Interval partitions of the BWT rows on which LF^(2^l) is a shift, for l = 0..log2(tau).
///
/// Level 0 is the run partition. Level l + 1 pulls the level-l boundaries back through
/// LF^(2^l) and names each piece by the pair of level-l symbols it reads.
class LfShortcut {
 public:
  struct Level {
    std::vector<std::size_t> starts;  // first row of each interval
    std::vector<std::size_t> mapped;  // LF^(2^l) of that first row
    std::vector<std::uint32_t> ids;   // replacement symbol of the interval
    std::size_t size() const { return starts.size(); }
  };

  LfShortcut() = default;
  /// tau must be a power of two.
  LfShortcut(const RlBwt& bwt, std::size_t tau);
  LfShortcut(std::size_t n, std::size_t tau, std::vector<Level> levels);

  std::size_t tau() const { return tau_; }
  std::size_t rows() const { return n_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::size_t interval_count(std::size_t level) const { return levels_.at(level).size(); }

  /// LF^(2^level)[i].
  std::size_t apply(std::size_t level, std::size_t i) const;
  /// LF^tau[i].
  std::size_t lf_pow(std::size_t i) const { return apply(levels_.size() - 1, i); }

  friend bool operator==(const LfShortcut& a, const LfShortcut& b);

 private:
  std::size_t n_ = 0;
  std::size_t tau_ = 1;
  std::vector<Level> levels_;
};

bool is_power_of_two(std::size_t v);

void write_shortcut(std::ostream& out, const LfShortcut& s);
LfShortcut read_shortcut(std::istream& in);

}  // namespace qstring
