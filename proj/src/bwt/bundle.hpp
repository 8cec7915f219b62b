#pragma once

#include <filesystem>
#include <optional>

#include "bwt/r_index.hpp"

namespace qstring {

/// Layout of a two-string index over s1 · separator · s2.
struct PairLayout {
  std::size_t len1 = 0, len2 = 0;
  symbol_t separator = 0;
  friend bool operator==(const PairLayout&, const PairLayout&) = default;
};

/// s1 · separator · s2 with a separator larger than every symbol of either string.
std::pair<Text, PairLayout> concat_pair(const Text& s1, const Text& s2);

struct IndexBundle {
  RIndex index;
  std::optional<PairLayout> pair;
};

inline constexpr int kBundleVersion = 1;

/// Writes header.json, rlbwt.txt, shortcut, samples, text.lz.jsonl and, for pairs, pair.json.
void write_bundle(const std::filesystem::path& dir, const IndexBundle& b);
IndexBundle read_bundle(const std::filesystem::path& dir);

}  // namespace qstring
