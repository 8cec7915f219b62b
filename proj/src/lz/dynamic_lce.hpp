#pragma once

#include "lz/fingerprint.hpp"

namespace qstring {

bool debug_lce_enabled();

/// Append-only text with fingerprint-based longest common extension queries.
///
/// The text grows by appending literals or copies of its own substrings.
/// `lce` compares suffixes; `lcs` compares prefixes from their right ends,
/// which is LCE on the reversed text.
class DynamicLce {
 public:
  DynamicLce() = default;
  explicit DynamicLce(const Text& t);

  void reserve(std::size_t n) {
    text_.reserve(n);
    hashes_.reserve(n);
  }
  void clear() {
    text_.clear();
    hashes_.clear();
  }
  void push_back(symbol_t c) {
    text_.push_back(c);
    hashes_.push_back(c);
  }
  /// Appends text[src..src+len), copying symbol by symbol so overlapping sources work.
  void append_copy(std::size_t src, std::size_t len);

  std::size_t size() const { return text_.size(); }
  symbol_t at(std::size_t i) const { return text_[i - 1]; }
  const Text& text() const { return text_; }
  Fingerprint fingerprint(std::size_t start, std::size_t len) const { return hashes_.get(start, len); }

  /// Longest common prefix of the suffixes starting at i and j (1-based, up to size()+1).
  std::size_t lce(std::size_t i, std::size_t j) const;
  /// Longest common suffix of the prefixes ending at i and j (0 ≤ i, j ≤ size()).
  std::size_t lcs(std::size_t i, std::size_t j) const;

 private:
  std::size_t lce_fast(std::size_t i, std::size_t j) const;
  std::size_t lcs_fast(std::size_t i, std::size_t j) const;

  Text text_;
  PrefixFingerprints hashes_;
};

}  // namespace qstring
