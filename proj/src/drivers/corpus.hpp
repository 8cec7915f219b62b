#pragma once

#include <random>
#include <utility>

#include "common.hpp"

namespace qstring {

/// Symbols are the letters 'a', 'b', ... of an alphabet of size `sigma` (at most 26).
Text random_letters(std::mt19937_64& rng, std::size_t n, std::size_t sigma);

/// A random block of length ⌈n/z⌉ repeated until n symbols are written. Every copy
/// after the first has one position changed to a different letter.
Text repeated_block_text(std::mt19937_64& rng, std::size_t n, std::size_t z, std::size_t sigma);

/// A random text x of length n and y obtained from x by k random edits.
std::pair<Text, Text> random_edit_pair(std::mt19937_64& rng, std::size_t n, std::size_t k, std::size_t sigma);

}  // namespace qstring
