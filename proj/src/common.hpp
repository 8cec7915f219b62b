#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qstring {

using symbol_t = std::uint32_t;
using Text = std::vector<symbol_t>;

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Text to_text(std::string_view s) {
  Text t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = static_cast<unsigned char>(s[i]);
  return t;
}

inline std::string to_string(const Text& t) {
  std::string s(t.size(), '\0');
  for (std::size_t i = 0; i < t.size(); ++i) s[i] = static_cast<char>(t[i]);
  return s;
}

// ceil(log2(n)) with ceil(log2(1)) = 0.
inline unsigned ceil_log2(std::uint64_t n) {
  unsigned l = 0;
  while ((std::uint64_t{1} << l) < n) ++l;
  return l;
}

inline std::uint64_t ceil_sqrt(std::uint64_t m) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
  while (r * r < m) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= m) --r;
  return r;
}

}  // namespace qstring
