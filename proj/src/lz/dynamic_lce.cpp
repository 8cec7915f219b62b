#include "lz/dynamic_lce.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace qstring {

namespace fp {
Fingerprint power(std::size_t k) {
  thread_local std::vector<Fingerprint> table{Fingerprint{1, 1}};
  while (table.size() <= k) {
    Fingerprint p = table.back();
    table.push_back({mul1(p.a, kBase1), mul2(p.b, kBase2)});
  }
  return table[k];
}
}  // namespace fp

bool debug_lce_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("QSTRING_DEBUG_LCE");
    return v != nullptr && std::strcmp(v, "1") == 0;
  }();
  return on;
}

DynamicLce::DynamicLce(const Text& t) {
  text_.reserve(t.size());
  for (symbol_t c : t) push_back(c);
}

void DynamicLce::append_copy(std::size_t src, std::size_t len) {
  if (src < 1 || src > text_.size()) throw RangeError("append_copy: source out of range");
  for (std::size_t k = 0; k < len; ++k) push_back(text_[src - 1 + k]);
}

namespace {
constexpr std::size_t kScan = 8;
}

std::size_t DynamicLce::lce_fast(std::size_t i, std::size_t j) const {
  const std::size_t n = text_.size();
  if (i == j) return n + 1 - i;
  const std::size_t cap = n + 1 - std::max(i, j);
  std::size_t m = 0;
  while (m < cap && m < kScan) {
    if (text_[i - 1 + m] != text_[j - 1 + m]) return m;
    ++m;
  }
  if (m == cap) return m;
  // Gallop then binary search on fingerprint equality.
  std::size_t good = m, step = m;
  std::size_t bad = cap + 1;
  while (true) {
    std::size_t probe = std::min(good + step, cap);
    if (hashes_.get(i, probe) == hashes_.get(j, probe)) {
      good = probe;
      if (good == cap) return good;
      step *= 2;
    } else {
      bad = probe;
      break;
    }
  }
  while (bad - good > 1) {
    std::size_t mid = good + (bad - good) / 2;
    if (hashes_.get(i, mid) == hashes_.get(j, mid))
      good = mid;
    else
      bad = mid;
  }
  return good;
}

std::size_t DynamicLce::lcs_fast(std::size_t i, std::size_t j) const {
  if (i == j) return i;
  const std::size_t cap = std::min(i, j);
  std::size_t m = 0;
  while (m < cap && m < kScan) {
    if (text_[i - 1 - m] != text_[j - 1 - m]) return m;
    ++m;
  }
  if (m == cap) return m;
  std::size_t good = m, step = m;
  std::size_t bad = cap + 1;
  while (true) {
    std::size_t probe = std::min(good + step, cap);
    if (hashes_.get(i - probe + 1, probe) == hashes_.get(j - probe + 1, probe)) {
      good = probe;
      if (good == cap) return good;
      step *= 2;
    } else {
      bad = probe;
      break;
    }
  }
  while (bad - good > 1) {
    std::size_t mid = good + (bad - good) / 2;
    if (hashes_.get(i - mid + 1, mid) == hashes_.get(j - mid + 1, mid))
      good = mid;
    else
      bad = mid;
  }
  return good;
}

std::size_t DynamicLce::lce(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > size() + 1 || j > size() + 1) throw RangeError("lce position out of range");
  std::size_t r = lce_fast(i, j);
  if (debug_lce_enabled()) {
    std::size_t m = 0;
    while (std::max(i, j) + m <= size() && text_[i - 1 + m] == text_[j - 1 + m]) ++m;
    if (m != r) throw InvariantError("DynamicLce::lce disagrees with naive scan");
  }
  return r;
}

std::size_t DynamicLce::lcs(std::size_t i, std::size_t j) const {
  if (i > size() || j > size()) throw RangeError("lcs position out of range");
  std::size_t r = lcs_fast(i, j);
  if (debug_lce_enabled()) {
    std::size_t m = 0;
    while (m < std::min(i, j) && text_[i - 1 - m] == text_[j - 1 - m]) ++m;
    if (m != r) throw InvariantError("DynamicLce::lcs disagrees with naive scan");
  }
  return r;
}

}  // namespace qstring
