#pragma once

#include <string_view>

#include "lz/factorization.hpp"
#include "oracle/oracle.hpp"

namespace qstring {

enum class FactorizeAlgo { lz77, nolz77, lzend, lzend_tau };

FactorizeAlgo parse_factorize_algo(std::string_view name);

/// Factorizes `text` with the chosen parser. Oracle-driven parsers charge `ledger`.
/// For lzend_tau, tau = 0 selects the doubling search.
Factorization factorize(const Text& text, FactorizeAlgo algo, std::size_t tau, QueryLedger& ledger);

}  // namespace qstring
