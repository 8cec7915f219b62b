#include "bwt/lf_shortcut.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

namespace qstring {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

namespace {

std::size_t find_interval(const LfShortcut::Level& lv, std::size_t i) {
  return static_cast<std::size_t>(std::upper_bound(lv.starts.begin(), lv.starts.end(), i) - lv.starts.begin()) - 1;
}

LfShortcut::Level next_level(const LfShortcut::Level& lv, std::size_t n) {
  LfShortcut::Level out;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> names;
  auto end_of = [&](std::size_t t) { return t + 1 < lv.size() ? lv.starts[t + 1] - 1 : n; };
  for (std::size_t t = 0; t < lv.size(); ++t) {
    const std::size_t s = lv.starts[t], e = end_of(t), m = lv.mapped[t];
    const std::size_t m_end = m + (e - s);
    for (std::size_t u = find_interval(lv, m), lo = m; lo <= m_end; ++u) {
      const std::size_t hi = std::min(m_end, end_of(u));
      auto [it, fresh] = names.try_emplace({lv.ids[t], lv.ids[u]}, static_cast<std::uint32_t>(names.size()));
      const std::size_t start = s + (lo - m), mapped = lv.mapped[u] + (lo - lv.starts[u]);
      const bool joins = !out.starts.empty() && out.ids.back() == it->second &&
                         out.mapped.back() + (start - out.starts.back()) == mapped;
      if (!joins) {
        out.starts.push_back(start);
        out.mapped.push_back(mapped);
        out.ids.push_back(it->second);
      }
      lo = hi + 1;
    }
  }
  return out;
}

}  // namespace

LfShortcut::LfShortcut(const RlBwt& bwt, std::size_t tau) : n_(bwt.size()), tau_(tau) {
  if (!is_power_of_two(tau)) throw PreconditionError("lf shortcut: tau must be a power of two");
  Level base;
  for (std::size_t t = 0; t < bwt.runs_count(); ++t) {
    base.starts.push_back(bwt.run_start(t));
    base.mapped.push_back(bwt.lf(bwt.run_start(t)));
    base.ids.push_back(bwt.runs()[t].symbol);
  }
  levels_.push_back(std::move(base));
  for (std::size_t span = 1; span < tau; span *= 2) levels_.push_back(next_level(levels_.back(), n_));
}

LfShortcut::LfShortcut(std::size_t n, std::size_t tau, std::vector<Level> levels)
    : n_(n), tau_(tau), levels_(std::move(levels)) {
  if (!is_power_of_two(tau) || levels_.size() != ceil_log2(tau) + 1)
    throw ValidationError("lf shortcut: level count does not match tau");
  for (const auto& lv : levels_) {
    if (lv.starts.empty() || lv.starts[0] != 1 || lv.mapped.size() != lv.size() || lv.ids.size() != lv.size())
      throw ValidationError("lf shortcut: malformed level");
    for (std::size_t t = 1; t < lv.size(); ++t)
      if (lv.starts[t] <= lv.starts[t - 1] || lv.starts[t] > n_) throw ValidationError("lf shortcut: unsorted level");
  }
}

std::size_t LfShortcut::apply(std::size_t level, std::size_t i) const {
  if (i < 1 || i > n_) throw RangeError("lf shortcut: row out of range");
  const Level& lv = levels_.at(level);
  const std::size_t t = find_interval(lv, i);
  return lv.mapped[t] + (i - lv.starts[t]);
}

bool operator==(const LfShortcut& a, const LfShortcut& b) {
  if (a.n_ != b.n_ || a.tau_ != b.tau_ || a.levels_.size() != b.levels_.size()) return false;
  for (std::size_t l = 0; l < a.levels_.size(); ++l) {
    const auto &x = a.levels_[l], &y = b.levels_[l];
    if (x.starts != y.starts || x.mapped != y.mapped || x.ids != y.ids) return false;
  }
  return true;
}

void write_shortcut(std::ostream& out, const LfShortcut& s) {
  out << s.rows() << ' ' << s.tau() << ' ' << s.levels().size() << '\n';
  for (const auto& lv : s.levels()) {
    out << lv.size() << '\n';
    for (std::size_t t = 0; t < lv.size(); ++t) out << lv.starts[t] << ' ' << lv.mapped[t] << ' ' << lv.ids[t] << '\n';
  }
}

LfShortcut read_shortcut(std::istream& in) {
  std::size_t n = 0, tau = 0, count = 0;
  if (!(in >> n >> tau >> count)) throw IoError("shortcut: missing header");
  std::vector<LfShortcut::Level> levels;
  for (std::size_t l = 0; l < count; ++l) {
    std::size_t m = 0;
    if (!(in >> m)) throw IoError("shortcut: missing level size");
    LfShortcut::Level lv;
    for (std::size_t t = 0; t < m; ++t) {
      std::size_t s = 0, mp = 0;
      std::uint32_t id = 0;
      if (!(in >> s >> mp >> id)) throw IoError("shortcut: truncated level");
      lv.starts.push_back(s);
      lv.mapped.push_back(mp);
      lv.ids.push_back(id);
    }
    levels.push_back(std::move(lv));
  }
  return LfShortcut(n, tau, std::move(levels));
}

}  // namespace qstring
