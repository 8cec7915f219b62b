#pragma once

#include "ed/edit_script.hpp"
#include "oracle/oracle.hpp"

namespace qstring {

struct SolveOptions {
  std::size_t radix = 0;      // 0 selects ⌈5 log₂ n⌉
  double budget_scale = 1.0;  // multiplies every pause limit
  bool unbounded = false;     // child programs never pause
};

struct SolveStats {
  std::size_t radix = 0;
  long double q_tokens = 0, t_tokens = 0;
  std::size_t nodes = 0, pauses = 0, terminated = 0;
  /// Finished calls whose subtree burned more than T_q or T_t of their own distance.
  std::size_t token_violations = 0;
};

struct SolveResult {
  std::size_t distance = 0;
  EditScript script;
  SolveStats stats;
};

long double token_bound_q(std::size_t x_len, std::size_t y_len, long double d, std::size_t radix);
long double token_bound_t(std::size_t x_len, std::size_t y_len, long double d, std::size_t radix);
std::size_t default_radix(std::size_t n);

/// Exact edit distance of the two oracle texts with a witness script.
SolveResult solve(const OracleText& x, const OracleText& y, const SolveOptions& opt = {});

}  // namespace qstring
