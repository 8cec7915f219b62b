#pragma once

#include <vector>

#include "common.hpp"

namespace qstring {

/// Polynomial fingerprint over two independent prime moduli.
struct Fingerprint {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

namespace fp {

inline constexpr std::uint64_t kMod1 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kMod2 = (std::uint64_t{1} << 31) - 1;
inline constexpr std::uint64_t kBase1 = 0x1f3a5c7e9b2d4f61ULL % kMod1;
inline constexpr std::uint64_t kBase2 = 1'299'721;

inline std::uint64_t mul1(std::uint64_t x, std::uint64_t y) {
  unsigned __int128 p = static_cast<unsigned __int128>(x) * y;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kMod1);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  return r >= kMod1 ? r - kMod1 : r;
}
inline std::uint64_t mul2(std::uint64_t x, std::uint64_t y) { return (x * y) % kMod2; }

/// Fingerprint of the concatenation: value(left) * B^len(right) + value(right).
Fingerprint power(std::size_t k);

inline Fingerprint extend(Fingerprint f, symbol_t c) {
  std::uint64_t v = static_cast<std::uint64_t>(c) + 1;
  f.a = mul1(f.a, kBase1) + v;
  if (f.a >= kMod1) f.a -= kMod1;
  f.b = (mul2(f.b, kBase2) + v) % kMod2;
  return f;
}

inline Fingerprint concat(Fingerprint left, Fingerprint right, std::size_t right_len) {
  Fingerprint p = power(right_len);
  Fingerprint r;
  r.a = mul1(left.a, p.a) + right.a;
  if (r.a >= kMod1) r.a -= kMod1;
  r.b = (mul2(left.b, p.b) + right.b) % kMod2;
  return r;
}

/// Value of a fragment given prefix values H[start-1] and H[end].
inline Fingerprint cut(Fingerprint before, Fingerprint upto, std::size_t len) {
  Fingerprint p = power(len);
  Fingerprint r;
  r.a = upto.a + kMod1 - mul1(before.a, p.a);
  if (r.a >= kMod1) r.a -= kMod1;
  r.b = (upto.b + kMod2 - mul2(before.b, p.b)) % kMod2;
  return r;
}

}  // namespace fp

/// Prefix fingerprints of a fixed sequence; positions are 1-based.
class PrefixFingerprints {
 public:
  PrefixFingerprints() : h_(1) {}
  template <class It>
  PrefixFingerprints(It first, It last) : h_(1) {
    for (; first != last; ++first) push_back(*first);
  }
  void push_back(symbol_t c) { h_.push_back(fp::extend(h_.back(), c)); }
  void clear() { h_.assign(1, Fingerprint{}); }
  void reserve(std::size_t n) { h_.reserve(n + 1); }
  std::size_t size() const { return h_.size() - 1; }
  Fingerprint get(std::size_t start, std::size_t len) const { return fp::cut(h_[start - 1], h_[start - 1 + len], len); }

 private:
  std::vector<Fingerprint> h_;
};

}  // namespace qstring
