#include "ed/edit_script.hpp"

#include <ostream>

namespace qstring {

std::optional<Text> apply_script(const Text& x, const EditScript& s) {
  Text out;
  out.reserve(x.size() + s.size());
  std::size_t xi = 1;
  for (const auto& e : s.ops) {
    if (e.kind == EditOp::Kind::insert) {
      if (e.pos < out.size() + 1) return std::nullopt;
      while (out.size() + 1 < e.pos) {
        if (xi > x.size()) return std::nullopt;
        out.push_back(x[xi++ - 1]);
      }
      out.push_back(e.symbol);
      continue;
    }
    if (e.pos < xi || e.pos > x.size()) return std::nullopt;
    while (xi < e.pos) out.push_back(x[xi++ - 1]);
    if (e.kind == EditOp::Kind::substitute) out.push_back(e.symbol);
    ++xi;
  }
  while (xi <= x.size()) out.push_back(x[xi++ - 1]);
  return out;
}

std::size_t first_y_on_alignment(const EditScript& s, std::size_t x_len, std::size_t x) {
  if (x > x_len) throw RangeError("first_y_on_alignment: x out of range");
  std::size_t i = 0, j = 0;
  // Walks `di` matched pairs, reporting y if the walk passes row x.
  auto match_to = [&](std::size_t di) -> std::optional<std::size_t> {
    if (x >= i && x <= i + di) return j + (x - i);
    i += di;
    j += di;
    return std::nullopt;
  };
  for (const auto& e : s.ops) {
    std::size_t di = e.kind == EditOp::Kind::insert ? e.pos - 1 - j : e.pos - 1 - i;
    if (auto y = match_to(di)) return *y;
    switch (e.kind) {
      case EditOp::Kind::insert: ++j; break;
      case EditOp::Kind::remove: ++i; break;
      case EditOp::Kind::substitute: ++i, ++j; break;
    }
    if (i == x) return j;
  }
  if (auto y = match_to(x_len - i)) return *y;
  throw InvariantError("first_y_on_alignment: script does not cover x");
}

void write_script(std::ostream& out, const EditScript& s) {
  for (const auto& e : s.ops) {
    out << static_cast<char>(e.kind) << ' ' << e.pos;
    if (e.kind != EditOp::Kind::remove) out << ' ' << e.symbol;
    out << '\n';
  }
}

}  // namespace qstring
