#include "apps/lower_bound.hpp"

#include "bwt/rlbwt.hpp"

namespace qstring {

Text indicator_string(const std::vector<bool>& f) {
  Text t(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) t[i] = f[i] ? 1 : 0;
  return t;
}

Text threshold_string(const std::vector<bool>& f) {
  const std::size_t n = f.size();
  Text t(4 * n + 2);
  auto probe = [&](std::size_t k) { return static_cast<bool>(f[k - 1]); };
  for (std::size_t i = 1; i <= t.size(); ++i) t[i - 1] = threshold_symbol(n, probe, i);
  return t;
}

OracleText threshold_oracle(const std::vector<bool>& f, QueryLedger& ledger) {
  return OracleText(threshold_string(f), ledger);
}

std::size_t runs_without_sentinel(const Text& x) {
  std::size_t runs = 0;
  symbol_t prev = kSentinel;
  const RlBwt b = build_rlbwt(x);
  for (const Run& run : b.runs()) {
    if (run.symbol == kSentinel) continue;
    if (runs == 0 || run.symbol != prev) ++runs;
    prev = run.symbol;
  }
  return runs;
}

}  // namespace qstring
