#include "ed/lz_edit_distance.hpp"

#include <algorithm>

#include "lz/dynamic_lce.hpp"

namespace qstring {

namespace {
enum Step : std::uint8_t { kNone, kSub, kDel, kIns };
constexpr std::int64_t kUnreached = -1;
}  // namespace

std::optional<EditResult> landau_vishkin(const Text& x, const Text& y, std::optional<std::size_t> cap,
                                         std::size_t x_offset, std::size_t y_offset) {
  const auto n = static_cast<std::int64_t>(x.size()), m = static_cast<std::int64_t>(y.size());
  const std::size_t limit = std::min<std::size_t>(cap.value_or(SIZE_MAX), std::max(x.size(), y.size()));

  thread_local DynamicLce lce;
  lce.clear();
  lce.reserve(x.size() + y.size());
  for (auto c : x) lce.push_back(c);
  for (auto c : y) lce.push_back(c);
  auto slide = [&](std::int64_t i, std::int64_t k) {
    std::int64_t j = i + k;
    if (i >= n || j >= m) return i;
    auto e = static_cast<std::int64_t>(lce.lce(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(n + j + 1)));
    return i + std::min({e, n - i, m - j});
  };

  // Wave d occupies [d*d, (d+1)*(d+1)) with diagonal k at d*d + (k + d).
  thread_local std::vector<std::int64_t> reach, start;
  thread_local std::vector<std::uint8_t> step;
  reach.clear(), start.clear(), step.clear();
  auto at = [](std::int64_t d, std::int64_t k) { return static_cast<std::size_t>(d * d + k + d); };
  const std::int64_t target = m - n;

  std::int64_t found = -1;
  for (std::int64_t d = 0; d <= static_cast<std::int64_t>(limit); ++d) {
    reach.resize(static_cast<std::size_t>((d + 1) * (d + 1)), kUnreached);
    start.resize(reach.size(), kUnreached);
    step.resize(reach.size(), kNone);
    for (std::int64_t k = -d; k <= d; ++k) {
      if (k < -n || k > m) continue;
      std::int64_t best = kUnreached;
      std::uint8_t how = kNone;
      if (d == 0) {
        best = 0;
      } else {
        auto prev = [&](std::int64_t kk) {
          return kk >= -(d - 1) && kk <= d - 1 ? reach[at(d - 1, kk)] : kUnreached;
        };
        auto consider = [&](std::int64_t i, std::uint8_t h) {
          if (i < 0 || i > n || i + k < 0 || i + k > m) return;
          if (i > best) best = i, how = h;
        };
        if (auto p = prev(k); p != kUnreached) consider(p + 1, kSub);
        if (auto p = prev(k + 1); p != kUnreached) consider(p + 1, kDel);
        if (auto p = prev(k - 1); p != kUnreached) consider(p, kIns);
      }
      if (best == kUnreached) continue;
      start[at(d, k)] = best;
      step[at(d, k)] = how;
      reach[at(d, k)] = slide(best, k);
    }
    if (target >= -d && target <= d && reach[at(d, target)] == n) {
      found = d;
      break;
    }
  }
  if (found < 0) return std::nullopt;

  EditResult out;
  out.distance = static_cast<std::size_t>(found);
  std::int64_t k = target;
  for (std::int64_t d = found; d > 0; --d) {
    std::int64_t s = start[at(d, k)];
    switch (step[at(d, k)]) {
      case kSub:
        out.script.ops.push_back(
            EditOp::Substitute(x_offset + static_cast<std::size_t>(s), y[static_cast<std::size_t>(s + k - 1)]));
        break;
      case kDel:
        out.script.ops.push_back(EditOp::Delete(x_offset + static_cast<std::size_t>(s)));
        ++k;
        break;
      case kIns:
        out.script.ops.push_back(
            EditOp::Insert(y_offset + static_cast<std::size_t>(s + k), y[static_cast<std::size_t>(s + k - 1)]));
        --k;
        break;
      default:
        throw InvariantError("landau_vishkin: broken traceback");
    }
  }
  std::reverse(out.script.ops.begin(), out.script.ops.end());
  return out;
}

std::optional<EditResult> lz_edit_distance(const Factorization& fx, const Factorization& fy,
                                           std::optional<std::size_t> cap) {
  return landau_vishkin(decompress(fx), decompress(fy), cap);
}

}  // namespace qstring
