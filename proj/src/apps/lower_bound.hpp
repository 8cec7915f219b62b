#pragma once

#include <vector>

#include "oracle/oracle.hpp"

namespace qstring {

/// f(1) f(2) ... f(n) as a binary string.
Text indicator_string(const std::vector<bool>& f);

/// Symbol i (1-based) of 0^{2n} $ (0 s(f(1),1)) ... (0 s(f(n),n)) 0, where s(b,i) = b ? i : 0.
/// Encoded as $ -> 0, 0 -> 1, i -> i + 1. Probes f at most once.
template <class F>
symbol_t threshold_symbol(std::size_t n, F&& f, std::size_t i) {
  if (i < 1 || i > 4 * n + 2) throw RangeError("threshold string: position out of range");
  if (i <= 2 * n || i % 2 == 0) return 1;
  if (i == 2 * n + 1) return 0;
  const std::size_t k = (i - (2 * n + 1)) / 2;
  return f(k) ? static_cast<symbol_t>(k + 1) : 1;
}

Text threshold_string(const std::vector<bool>& f);
OracleText threshold_oracle(const std::vector<bool>& f, QueryLedger& ledger);

/// Runs of BWT(X) once the sentinel is dropped from the transform.
std::size_t runs_without_sentinel(const Text& x);

}  // namespace qstring
