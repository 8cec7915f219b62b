#pragma once

#include <optional>

#include "ed/edit_script.hpp"
#include "lz/factorization.hpp"

namespace qstring {

struct EditResult {
  std::size_t distance = 0;
  EditScript script;
};

/// Landau–Vishkin diagonal waves with fingerprint LCE and a traceback.
/// Script positions are shifted by the given offsets. Returns nullopt if the
/// distance exceeds `cap`.
std::optional<EditResult> landau_vishkin(const Text& x, const Text& y, std::optional<std::size_t> cap = std::nullopt,
                                         std::size_t x_offset = 0, std::size_t y_offset = 0);

/// Edit distance of the texts behind two factorizations. Charges no oracle queries.
std::optional<EditResult> lz_edit_distance(const Factorization& fx, const Factorization& fy,
                                           std::optional<std::size_t> cap = std::nullopt);

}  // namespace qstring
