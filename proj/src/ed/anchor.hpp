#pragma once

#include <optional>
#include <utility>

#include "ed/lz_edit_distance.hpp"
#include "oracle/oracle.hpp"

namespace qstring {

/// Phrase cap for the LZ builds made on behalf of threshold k: 8(6k+2)⌈log₂ n⌉².
std::size_t anchor_build_cap(std::size_t k, std::size_t n);

/// LZ-End+tau factorization of the view, or nullopt if it has more than `cap` phrases.
std::optional<Factorization> capped_lz_build(const OracleText& o, std::size_t cap);

/// Minimum i ∈ [0..x] with |LZ(rev X(i..x])| ≤ 6k+2 and maximum j ∈ [x..|X|]
/// with |LZ(X(x..j])| ≤ 6k+2. `n` is the global input length used for build caps.
std::pair<std::size_t, std::size_t> compressible_window(const OracleText& x, std::size_t pos, std::size_t k,
                                                        std::size_t n);

/// y such that (pos, y) is a k-edit anchor of X and Y.
std::size_t find_anchor(const OracleText& x, const OracleText& y, std::size_t k, std::size_t pos, std::size_t n);

/// Whether (ax, ay) is an edit anchor of X and Y; exact whenever ed(X, Y) ≤ k.
bool is_anchor(const OracleText& x, const OracleText& y, std::size_t k, std::size_t ax, std::size_t ay,
               std::size_t n);

}  // namespace qstring
