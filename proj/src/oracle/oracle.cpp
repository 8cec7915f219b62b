#include "oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace qstring {

namespace {
const char* kind_name(std::size_t k) {
  static const char* names[] = {"read", "grover", "predicate"};
  return names[k];
}
}  // namespace

QueryLedger::QueryLedger(std::size_t n, double c_rep) {
  double lg = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  auto rep = static_cast<std::uint64_t>(std::ceil(c_rep * lg - 1e-9));
  rep_ = std::max<std::uint64_t>(rep, 1);
  intern("root");
}

QueryLedger QueryLedger::with_repetition(std::uint64_t rep) {
  QueryLedger l;
  l.rep_ = std::max<std::uint64_t>(rep, 1);
  return l;
}

std::size_t QueryLedger::intern(const std::string& path) {
  auto [it, fresh] = ids_.try_emplace(path, paths_.size());
  if (fresh) {
    paths_.push_back(path);
    counts_.push_back({0, 0, 0});
    children_.emplace_back();
  }
  return it->second;
}

std::uint64_t QueryLedger::total(Kind k) const {
  std::uint64_t s = 0;
  for (const auto& c : counts_) s += c[static_cast<std::size_t>(k)];
  return s;
}

std::uint64_t QueryLedger::count(std::string_view path) const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    std::string_view p = paths_[i];
    if (p == path || (p.size() > path.size() && p.substr(0, path.size()) == path && p[path.size()] == '/'))
      for (auto c : counts_[i]) s += c;
  }
  return s;
}

void QueryLedger::reset() {
  for (auto& c : counts_) c = {0, 0, 0};
  total_ = 0;
}

void QueryLedger::absorb(const QueryLedger& other, std::string_view prefix) {
  for (std::size_t i = 0; i < other.paths_.size(); ++i) {
    const std::string& p = other.paths_[i];
    std::string path = "root/";
    path += prefix;
    if (p.size() > 4) path += p.substr(4);
    const std::size_t id = intern(path);
    for (std::size_t k = 0; k < 3; ++k) {
      counts_[id][k] += other.counts_[i][k];
      total_ += other.counts_[i][k];
    }
  }
}

std::vector<std::pair<std::string, std::uint64_t>> QueryLedger::rows() const {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (std::size_t i = 0; i < paths_.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k)
      if (counts_[i][k] != 0) out.emplace_back(paths_[i] + ":" + kind_name(k), counts_[i][k]);
  std::sort(out.begin(), out.end());
  return out;
}

void QueryLedger::write_csv(std::ostream& out) const {
  out << "tag,count\n";
  for (const auto& [tag, c] : rows()) out << tag << ',' << c << '\n';
}

QueryLedger::Scope::Scope(QueryLedger& ledger, std::string_view name) : ledger_(&ledger), saved_(ledger.current_) {
  for (const auto& [child, id] : ledger.children_[saved_])
    if (child == name) {
      ledger.current_ = id;
      return;
    }
  std::string path = ledger.paths_[saved_];
  path += '/';
  path += name;
  std::size_t id = ledger.intern(path);
  ledger.children_[saved_].emplace_back(std::string(name), id);
  ledger.current_ = id;
}

QueryLedger::Scope::~Scope() { ledger_->current_ = saved_; }

namespace detail {
struct OracleAccess {
  static symbol_t peek(const OracleText& o, std::size_t i) {
    return o.reversed_ ? (*o.data_)[o.offset_ + o.length_ - i] : (*o.data_)[o.offset_ + i - 1];
  }

  static bool same_symbols(const OracleText& a, const OracleText& b) {
    const std::size_t n = a.length_;
    if (!a.reversed_ && !b.reversed_) {
      return std::equal(a.data_->begin() + a.offset_, a.data_->begin() + a.offset_ + n, b.data_->begin() + b.offset_);
    }
    for (std::size_t i = 1; i <= n; ++i)
      if (peek(a, i) != peek(b, i)) return false;
    return true;
  }
};
}  // namespace detail

OracleText::OracleText(std::shared_ptr<const Text> data, QueryLedger& ledger)
    : data_(std::move(data)), ledger_(&ledger), length_(data_->size()) {}

OracleText::OracleText(Text data, QueryLedger& ledger)
    : OracleText(std::make_shared<const Text>(std::move(data)), ledger) {}

symbol_t OracleText::read(std::size_t i) const {
  if (i < 1 || i > length_) throw RangeError("oracle read out of range");
  ledger_->charge_read();
  return detail::OracleAccess::peek(*this, i);
}

OracleText OracleText::sub(std::size_t start, std::size_t len) const {
  if (start < 1 || start - 1 + len > length_) throw RangeError("oracle fragment out of range");
  OracleText v = *this;
  v.length_ = len;
  if (reversed_)
    v.offset_ = offset_ + length_ - (start - 1) - len;
  else
    v.offset_ = offset_ + start - 1;
  return v;
}

OracleText OracleText::reversed() const {
  OracleText v = *this;
  v.reversed_ = !reversed_;
  return v;
}

bool fragments_equal(const OracleText& a, const OracleText& b) {
  if (a.length() != b.length()) return false;
  a.ledger().charge(QueryLedger::Kind::grover, ceil_sqrt(a.length()) * a.ledger().repetition_factor());
  return detail::OracleAccess::same_symbols(a, b);
}

std::size_t oracle_lcp_from(const OracleText& a, const OracleText& b, std::size_t known) {
  const std::size_t m = std::min(a.length(), b.length());
  std::size_t lo = std::min(known, m);
  std::size_t step = 1;
  while (lo < m) {
    std::size_t t = std::min(step, m - lo);
    if (fragments_equal(a.sub(lo + 1, t), b.sub(lo + 1, t))) {
      lo += t;
      step *= 2;
      continue;
    }
    // The mismatch lies inside the block (lo, lo + t]; only unverified symbols are tested.
    std::size_t ext = 0, hi = t - 1;
    while (ext < hi) {
      std::size_t mid = (ext + hi + 1) / 2;
      if (fragments_equal(a.sub(lo + ext + 1, mid - ext), b.sub(lo + ext + 1, mid - ext)))
        ext = mid;
      else
        hi = mid - 1;
    }
    return lo + ext;
  }
  return lo;
}

std::size_t oracle_lcp(const OracleText& a, const OracleText& b) { return oracle_lcp_from(a, b, 0); }

std::size_t oracle_lcs(const OracleText& a, const OracleText& b) {
  return oracle_lcp_from(a.reversed(), b.reversed(), 0);
}

std::size_t oracle_lcs_from(const OracleText& a, const OracleText& b, std::size_t known) {
  return oracle_lcp_from(a.reversed(), b.reversed(), known);
}

std::optional<std::size_t> rightmost_mismatch(const OracleText& a, const OracleText& b) {
  if (a.length() != b.length()) throw PreconditionError("rightmost_mismatch: unequal lengths");
  std::size_t m = oracle_lcs(a, b);
  if (m == a.length()) return std::nullopt;
  return a.length() - m;
}

}  // namespace qstring
