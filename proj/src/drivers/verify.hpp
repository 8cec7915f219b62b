#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle/oracle.hpp"

namespace qstring {

enum class VerifyLevel { quick, full };

VerifyLevel parse_verify_level(std::string_view name);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::string detail;
};

/// "criterion <id> [<name>] PASS|FAIL (<seconds> s) <detail>"
std::string format_criterion(const CriterionResult& r);

using VerifySink = std::function<void(const std::string& line)>;

/// Runs acceptance criteria 1 to 11 against the brute-force oracles. Each result line
/// goes to `emit` as soon as its criterion finishes, then one summary line.
/// The quick level shrinks every corpus; full runs the exhaustive ones.
std::vector<CriterionResult> run_verification(VerifyLevel level, const VerifySink& emit,
                                              QueryLedger* ledger = nullptr);

}  // namespace qstring
