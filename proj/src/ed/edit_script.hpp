#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "common.hpp"

namespace qstring {

/// One edit in global 1-based coordinates. Delete and Substitute name a
/// position of X; Insert names the position the new symbol takes in Y.
struct EditOp {
  enum class Kind : char { insert = 'I', remove = 'D', substitute = 'S' };
  Kind kind;
  std::size_t pos;
  symbol_t symbol = 0;

  static EditOp Insert(std::size_t y_pos, symbol_t c) { return {Kind::insert, y_pos, c}; }
  static EditOp Delete(std::size_t x_pos) { return {Kind::remove, x_pos, 0}; }
  static EditOp Substitute(std::size_t x_pos, symbol_t c) { return {Kind::substitute, x_pos, c}; }

  bool operator==(const EditOp& o) const { return kind == o.kind && pos == o.pos && symbol == o.symbol; }
};

/// Edits ordered along the alignment they come from.
struct EditScript {
  std::vector<EditOp> ops;

  std::size_t size() const { return ops.size(); }
  bool empty() const { return ops.empty(); }
  void append(const EditScript& other) { ops.insert(ops.end(), other.ops.begin(), other.ops.end()); }
  bool operator==(const EditScript& o) const { return ops == o.ops; }
};

/// Result of applying the script to x, or nullopt if it is out of order or out of range.
std::optional<Text> apply_script(const Text& x, const EditScript& s);

/// Smallest y such that (x, y) lies on the alignment described by `s`
/// (positions relative to the fragments the script was computed for).
std::size_t first_y_on_alignment(const EditScript& s, std::size_t x_len, std::size_t x);

/// One edit per line: `D x`, `I y c`, or `S x c` with c a decimal byte value.
void write_script(std::ostream& out, const EditScript& s);

}  // namespace qstring
