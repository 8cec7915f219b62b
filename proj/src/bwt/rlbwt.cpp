#include "bwt/rlbwt.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "lz/suffix_index.hpp"

namespace qstring {

RlBwt::RlBwt(std::vector<Run> runs) : runs_(std::move(runs)) {
  std::size_t sentinels = 0;
  starts_.reserve(runs_.size());
  for (std::size_t t = 0; t < runs_.size(); ++t) {
    const Run& run = runs_[t];
    if (run.length == 0) throw ValidationError("rlbwt: empty run");
    if (t > 0 && runs_[t - 1].symbol == run.symbol) throw ValidationError("rlbwt: adjacent runs share a symbol");
    if (run.symbol == kSentinel) sentinels += run.length;
    starts_.push_back(n_ + 1);
    n_ += run.length;
  }
  if (sentinels != 1) throw ValidationError("rlbwt: expected exactly one sentinel");

  for (const Run& run : runs_) alphabet_.push_back(run.symbol);
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  sym_runs_.resize(alphabet_.size());
  sym_before_.resize(alphabet_.size());
  std::vector<std::size_t> totals(alphabet_.size(), 0);
  for (std::size_t t = 0; t < runs_.size(); ++t) {
    std::size_t a = symbol_index(runs_[t].symbol);
    sym_runs_[a].push_back(t);
    sym_before_[a].push_back(totals[a]);
    totals[a] += runs_[t].length;
  }
  below_.assign(alphabet_.size(), 0);
  for (std::size_t a = 1; a < alphabet_.size(); ++a) below_[a] = below_[a - 1] + totals[a - 1];
}

std::size_t RlBwt::symbol_index(symbol_t c) const {
  return static_cast<std::size_t>(std::lower_bound(alphabet_.begin(), alphabet_.end(), c) - alphabet_.begin());
}

bool RlBwt::contains(symbol_t c) const { return std::binary_search(alphabet_.begin(), alphabet_.end(), c); }

std::size_t RlBwt::run_of(std::size_t i) const {
  if (i < 1 || i > n_) throw RangeError("rlbwt: row out of range");
  return static_cast<std::size_t>(std::upper_bound(starts_.begin(), starts_.end(), i) - starts_.begin()) - 1;
}

std::size_t RlBwt::smaller(symbol_t c) const {
  std::size_t a = symbol_index(c);
  return a < alphabet_.size() ? below_[a] : n_;
}

std::size_t RlBwt::rank(symbol_t c, std::size_t i) const {
  if (i == 0) return 0;
  const std::size_t a = symbol_index(c);
  if (a == alphabet_.size() || alphabet_[a] != c) return 0;
  const std::size_t t = run_of(i);
  const auto& rs = sym_runs_[a];
  // Last run of c starting at or before run t.
  auto it = std::upper_bound(rs.begin(), rs.end(), t);
  if (it == rs.begin()) return 0;
  const std::size_t k = static_cast<std::size_t>(it - rs.begin()) - 1;
  const std::size_t u = rs[k];
  return sym_before_[a][k] + (u == t ? i - starts_[t] + 1 : runs_[u].length);
}

std::size_t RlBwt::lf(std::size_t i) const {
  const std::size_t t = run_of(i);
  const symbol_t c = runs_[t].symbol;
  return smaller(c) + rank(c, i);
}

Text RlBwt::expand() const {
  Text out;
  out.reserve(n_);
  for (const Run& run : runs_) out.insert(out.end(), run.length, run.symbol);
  return out;
}

RlBwt build_rlbwt(const Text& text) { return rlbwt_from_suffix_array(text, suffix_array_with_sentinel(text)); }

RlBwt rlbwt_from_suffix_array(const Text& text, const std::vector<std::uint32_t>& sa) {
  std::vector<Run> runs;
  for (std::uint32_t p : sa) {
    symbol_t c = p == 0 ? kSentinel : text[p - 1] + 1;
    if (!runs.empty() && runs.back().symbol == c)
      ++runs.back().length;
    else
      runs.push_back({c, 1});
  }
  return RlBwt(std::move(runs));
}

RlBwt build_rlbwt(const Factorization& f) { return build_rlbwt(decompress(f)); }

void write_rlbwt_text(std::ostream& out, const RlBwt& b) {
  out << b.size() << ' ' << b.runs_count() << '\n';
  for (const Run& run : b.runs()) out << run.symbol << ' ' << run.length << '\n';
}

RlBwt read_rlbwt_text(std::istream& in) {
  std::size_t n = 0, r = 0;
  if (!(in >> n >> r)) throw IoError("rlbwt: missing header");
  std::vector<Run> runs;
  for (std::size_t t = 0; t < r; ++t) {
    Run run;
    if (!(in >> run.symbol >> run.length)) throw IoError("rlbwt: truncated run list");
    runs.push_back(run);
  }
  RlBwt b(std::move(runs));
  if (b.size() != n) throw ValidationError("rlbwt: header length disagrees with runs");
  return b;
}

namespace {
constexpr char kMagic[4] = {'Q', 'R', 'L', 'B'};

void put_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int k = 0; k < 8; ++k) buf[k] = static_cast<char>((v >> (8 * k)) & 0xff);
  out.write(buf, 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), 8)) throw IoError("rlbwt: truncated binary input");
  std::uint64_t v = 0;
  for (int k = 7; k >= 0; --k) v = (v << 8) | buf[k];
  return v;
}
}  // namespace

void write_rlbwt_binary(std::ostream& out, const RlBwt& b) {
  out.write(kMagic, 4);
  put_u64(out, b.size());
  put_u64(out, b.runs_count());
  for (const Run& run : b.runs()) {
    put_u64(out, run.symbol);
    put_u64(out, run.length);
  }
}

RlBwt read_rlbwt_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) throw IoError("rlbwt: bad binary magic");
  const std::uint64_t n = get_u64(in), r = get_u64(in);
  std::vector<Run> runs;
  for (std::uint64_t t = 0; t < r; ++t) {
    std::uint64_t c = get_u64(in);
    if (c > UINT32_MAX) throw ValidationError("rlbwt: symbol out of range");
    runs.push_back({static_cast<symbol_t>(c), get_u64(in)});
  }
  RlBwt b(std::move(runs));
  if (b.size() != n) throw ValidationError("rlbwt: header length disagrees with runs");
  return b;
}

}  // namespace qstring
