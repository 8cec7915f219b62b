#include "drivers/factorize.hpp"

#include <string>

#include "lz/lz_core.hpp"
#include "lz/lz_end_tau.hpp"

namespace qstring {

FactorizeAlgo parse_factorize_algo(std::string_view name) {
  if (name == "lz77") return FactorizeAlgo::lz77;
  if (name == "nolz77") return FactorizeAlgo::nolz77;
  if (name == "lzend") return FactorizeAlgo::lzend;
  if (name == "lzend-tau") return FactorizeAlgo::lzend_tau;
  throw PreconditionError("unknown factorization algorithm '" + std::string(name) + "'");
}

Factorization factorize(const Text& text, FactorizeAlgo algo, std::size_t tau, QueryLedger& ledger) {
  OracleText o(text, ledger);
  switch (algo) {
    case FactorizeAlgo::lz77:
      return convert_to_lz77(lz_end_tau_build(o));
    case FactorizeAlgo::nolz77:
      return non_overlapping_lz77_oracle(o);
    case FactorizeAlgo::lzend:
      return lz_end_classical(text);
    case FactorizeAlgo::lzend_tau:
      return tau == 0 ? lz_end_tau_build(o) : lz_end_tau_build(o, tau);
  }
  throw PreconditionError("unknown factorization algorithm");
}

}  // namespace qstring
