#include "ed/anchor.hpp"

#include <algorithm>

#include "lz/lz_core.hpp"
#include "lz/lz_end_tau.hpp"

namespace qstring {

namespace {
std::size_t sat_mul(std::size_t a, std::size_t b) { return b != 0 && a > SIZE_MAX / b ? SIZE_MAX : a * b; }

std::size_t lz_bound(std::size_t k) { return sat_mul(6, k) == SIZE_MAX ? SIZE_MAX : 6 * k + 2; }

bool lz_size_at_most(const OracleText& o, std::size_t bound, std::size_t cap) {
  if (o.length() <= bound) return true;
  auto f = capped_lz_build(o, cap);
  return f && convert_to_lz77(*f).size() <= bound;
}

// Largest len in [0..limit] with pred(len), given pred is monotone and pred(len) for len ≤ bound.
template <class Pred>
std::size_t longest_window(std::size_t limit, std::size_t bound, Pred pred) {
  if (limit <= bound) return limit;
  std::size_t good = bound, bad = limit + 1;
  while (good < limit) {
    std::size_t probe = std::min(limit, 2 * good);
    if (!pred(probe)) {
      bad = probe;
      break;
    }
    good = probe;
  }
  while (bad - good > 1) {
    std::size_t mid = good + (bad - good) / 2;
    (pred(mid) ? good : bad) = mid;
  }
  return good;
}

struct Window {
  std::size_t i, j, ys, ye;
};

Window window_for(const OracleText& x, const OracleText& y, std::size_t pos, std::size_t k, std::size_t n) {
  auto [i, j] = compressible_window(x, pos, k, n);
  std::size_t ys = std::min(i, y.length());
  auto end = static_cast<std::int64_t>(j) + static_cast<std::int64_t>(y.length()) - static_cast<std::int64_t>(x.length());
  std::size_t ye = static_cast<std::size_t>(std::clamp<std::int64_t>(end, static_cast<std::int64_t>(ys),
                                                                     static_cast<std::int64_t>(y.length())));
  return {i, j, ys, ye};
}

// Fragment (a..b] of a view, in the half-open 0-based convention used above.
OracleText frag(const OracleText& o, std::size_t a, std::size_t b) { return o.sub(a + 1, b - a); }
}  // namespace

std::size_t anchor_build_cap(std::size_t k, std::size_t n) {
  std::size_t lg = std::max<std::size_t>(1, ceil_log2(std::max<std::size_t>(n, 2)));
  return sat_mul(sat_mul(8, lz_bound(k)), lg * lg);
}

std::optional<Factorization> capped_lz_build(const OracleText& o, std::size_t cap) {
  return lz_end_tau_build(o, LzEndTauOptions{0, cap});
}

std::pair<std::size_t, std::size_t> compressible_window(const OracleText& x, std::size_t pos, std::size_t k,
                                                        std::size_t n) {
  if (pos > x.length()) throw RangeError("compressible_window: position out of range");
  QueryLedger::Scope scope(x.ledger(), "window");
  const std::size_t bound = lz_bound(k), cap = anchor_build_cap(k, n);
  std::size_t left = longest_window(pos, bound, [&](std::size_t len) {
    return lz_size_at_most(x.sub(pos - len + 1, len).reversed(), bound, cap);
  });
  std::size_t right = longest_window(x.length() - pos, bound, [&](std::size_t len) {
    return lz_size_at_most(x.sub(pos + 1, len), bound, cap);
  });
  return {pos - left, pos + right};
}

std::size_t find_anchor(const OracleText& x, const OracleText& y, std::size_t k, std::size_t pos, std::size_t n) {
  if (pos > x.length()) throw RangeError("find_anchor: position out of range");
  QueryLedger::Scope scope(x.ledger(), "find_anchor");
  const Window w = window_for(x, y, pos, k, n);
  const std::size_t cap = anchor_build_cap(k, n);
  auto fx = capped_lz_build(frag(x, w.i, w.j), cap);
  if (!fx) return 0;
  auto fy = capped_lz_build(frag(y, w.ys, w.ye), cap);
  if (!fy) return 0;
  auto r = lz_edit_distance(*fx, *fy, k);
  if (!r) return 0;
  return w.ys + first_y_on_alignment(r->script, w.j - w.i, pos - w.i);
}

bool is_anchor(const OracleText& x, const OracleText& y, std::size_t k, std::size_t ax, std::size_t ay,
               std::size_t n) {
  if (ax > x.length() || ay > y.length()) throw RangeError("is_anchor: pair out of range");
  QueryLedger::Scope scope(x.ledger(), "is_anchor");
  const Window w = window_for(x, y, ax, k, n);
  if (ay < w.ys || ay > w.ye) return false;
  const std::size_t cap = anchor_build_cap(k, n);
  auto build = [&](const OracleText& o, std::size_t a, std::size_t b) { return capped_lz_build(frag(o, a, b), cap); };
  auto xl = build(x, w.i, ax), xr = build(x, ax, w.j), xw = build(x, w.i, w.j);
  if (!xl || !xr || !xw) return false;
  auto yl = build(y, w.ys, ay), yr = build(y, ay, w.ye), yw = build(y, w.ys, w.ye);
  if (!yl || !yr || !yw) return false;
  auto whole = lz_edit_distance(*xw, *yw, k);
  if (!whole) return false;
  auto left = lz_edit_distance(*xl, *yl, k), right = lz_edit_distance(*xr, *yr, k);
  return left && right && left->distance + right->distance == whole->distance;
}

}  // namespace qstring
