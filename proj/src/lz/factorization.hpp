#pragma once

#include <iosfwd>
#include <string>

#include "common.hpp"

namespace qstring {

/// A literal symbol or a copy of `len` symbols starting at 1-based text position `src`.
struct Phrase {
  bool literal = true;
  symbol_t symbol = 0;
  std::size_t src = 0;
  std::size_t len = 0;

  static Phrase Literal(symbol_t c) { return Phrase{true, c, 0, 0}; }
  static Phrase Copy(std::size_t src, std::size_t len) { return Phrase{false, 0, src, len}; }

  std::size_t length() const { return literal ? 1 : len; }
  friend bool operator==(const Phrase&, const Phrase&) = default;
};

enum class FactorizationKind { lz77, non_overlapping, lz_end, lz_end_tau };

std::string kind_name(FactorizationKind k);
FactorizationKind parse_kind(const std::string& name);

struct Factorization {
  FactorizationKind kind = FactorizationKind::lz77;
  std::size_t tau = 0;  // only meaningful for lz_end_tau
  std::vector<Phrase> phrases;
  std::size_t text_len = 0;

  std::size_t size() const { return phrases.size(); }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Expands a factorization, rejecting copies that read text not yet produced.
Text decompress(const Factorization& f);

/// Checks the kind-specific source constraints on top of decompressibility.
void validate(const Factorization& f);

void write_jsonl(std::ostream& out, const Factorization& f);
Factorization read_jsonl(std::istream& in);

std::ostream& operator<<(std::ostream& out, const Phrase& p);

}  // namespace qstring
