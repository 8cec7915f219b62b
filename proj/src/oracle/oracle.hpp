#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "common.hpp"

namespace qstring {

/// Per-tag query accounting shared by every oracle view of one execution.
///
/// Charges are filed under the current tag path (see Scope) and one of three
/// kinds: plain reads, structural search charges, and reads issued while a
/// search predicate is being evaluated.
class QueryLedger {
 public:
  enum class Kind : std::uint8_t { read = 0, grover = 1, predicate = 2 };

  explicit QueryLedger(std::size_t n = 2, double c_rep = 1.0);
  static QueryLedger with_repetition(std::uint64_t rep);

  std::uint64_t repetition_factor() const { return rep_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t total(Kind k) const;
  std::uint64_t count(std::string_view path) const;

  void charge(Kind k, std::uint64_t amount) {
    counts_[current_][static_cast<std::size_t>(k)] += amount;
    total_ += amount;
  }
  void charge_read(std::uint64_t amount = 1) {
    charge(in_predicate_ ? Kind::predicate : Kind::read, amount);
  }

  void reset();
  /// Adds every count of `other`, filing its paths under root/`prefix`.
  void absorb(const QueryLedger& other, std::string_view prefix);

  /// Rows "path:kind" -> count, sorted by key, zero rows omitted.
  std::vector<std::pair<std::string, std::uint64_t>> rows() const;
  void write_csv(std::ostream& out) const;

  class Scope {
   public:
    Scope(QueryLedger& ledger, std::string_view name);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    QueryLedger* ledger_;
    std::size_t saved_;
  };

  class PredicateGuard {
   public:
    explicit PredicateGuard(QueryLedger& l) : l_(&l), saved_(l.in_predicate_) { l.in_predicate_ = true; }
    ~PredicateGuard() { l_->in_predicate_ = saved_; }
    PredicateGuard(const PredicateGuard&) = delete;
    PredicateGuard& operator=(const PredicateGuard&) = delete;

   private:
    QueryLedger* l_;
    bool saved_;
  };

 private:
  std::size_t intern(const std::string& path);

  std::uint64_t rep_;
  std::uint64_t total_ = 0;
  bool in_predicate_ = false;
  std::size_t current_ = 0;
  std::vector<std::string> paths_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::vector<std::pair<std::string, std::size_t>>> children_;
  std::vector<std::array<std::uint64_t, 3>> counts_;
};

namespace detail {
struct OracleAccess;
}

/// A view (forward or reversed, over a sub-range) of a hidden text.
/// Positions are 1-based. Every read charges one query.
class OracleText {
 public:
  OracleText(std::shared_ptr<const Text> data, QueryLedger& ledger);
  OracleText(Text data, QueryLedger& ledger);

  std::size_t length() const { return length_; }
  bool empty() const { return length_ == 0; }
  bool is_reversed() const { return reversed_; }
  QueryLedger& ledger() const { return *ledger_; }

  symbol_t read(std::size_t i) const;

  /// The fragment of this view starting at position `start` with `len` symbols.
  OracleText sub(std::size_t start, std::size_t len) const;
  OracleText reversed() const;

 private:
  friend struct detail::OracleAccess;

  std::shared_ptr<const Text> data_;
  QueryLedger* ledger_;
  std::size_t offset_ = 0;
  std::size_t length_ = 0;
  bool reversed_ = false;
};

/// Leftmost index in [lo..hi] satisfying `pred`, charging ceil(sqrt(width)) times
/// the repetition factor as structural cost. Reads performed by `pred` are
/// charged as predicate reads.
template <class Pred>
std::optional<std::size_t> grover_find(QueryLedger& ledger, std::size_t lo, std::size_t hi, Pred&& pred) {
  if (lo > hi) throw RangeError("grover_find: empty range");
  ledger.charge(QueryLedger::Kind::grover, ceil_sqrt(hi - lo + 1) * ledger.repetition_factor());
  QueryLedger::PredicateGuard guard(ledger);
  for (std::size_t i = lo; i <= hi; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

template <class Pred>
std::optional<std::size_t> grover_find(const OracleText& o, std::size_t lo, std::size_t hi, Pred&& pred) {
  return grover_find(o.ledger(), lo, hi, std::forward<Pred>(pred));
}

bool fragments_equal(const OracleText& a, const OracleText& b);

std::size_t oracle_lcp(const OracleText& a, const OracleText& b);
/// As oracle_lcp, given that the first `known` symbols are already known to match.
std::size_t oracle_lcp_from(const OracleText& a, const OracleText& b, std::size_t known);
std::size_t oracle_lcs(const OracleText& a, const OracleText& b);
std::size_t oracle_lcs_from(const OracleText& a, const OracleText& b, std::size_t known);

std::optional<std::size_t> rightmost_mismatch(const OracleText& a, const OracleText& b);

}  // namespace qstring
