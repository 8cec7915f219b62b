#include "drivers/corpus.hpp"

namespace qstring {

namespace {
symbol_t letter(std::mt19937_64& rng, std::size_t sigma) { return static_cast<symbol_t>('a' + rng() % sigma); }

symbol_t other_letter(std::mt19937_64& rng, std::size_t sigma, symbol_t c) {
  if (sigma < 2) return c;
  symbol_t d = static_cast<symbol_t>('a' + rng() % (sigma - 1));
  return d >= c ? d + 1 : d;
}

void check_sigma(std::size_t sigma) {
  if (sigma < 1 || sigma > 26) throw PreconditionError("corpus: alphabet size must lie in [1..26]");
}
}  // namespace

Text random_letters(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  check_sigma(sigma);
  Text t(n);
  for (auto& c : t) c = letter(rng, sigma);
  return t;
}

Text repeated_block_text(std::mt19937_64& rng, std::size_t n, std::size_t z, std::size_t sigma) {
  if (z == 0) throw PreconditionError("corpus: z must be positive");
  if (n == 0) return {};
  const std::size_t b = (n + z - 1) / z;
  const Text block = random_letters(rng, b, sigma);
  Text t;
  t.reserve(n + b);
  t.insert(t.end(), block.begin(), block.end());
  while (t.size() < n) {
    Text copy = block;
    const std::size_t p = rng() % b;
    copy[p] = other_letter(rng, sigma, copy[p]);
    t.insert(t.end(), copy.begin(), copy.end());
  }
  t.resize(n);
  return t;
}

std::pair<Text, Text> random_edit_pair(std::mt19937_64& rng, std::size_t n, std::size_t k, std::size_t sigma) {
  Text x = random_letters(rng, n, sigma);
  Text y = x;
  for (std::size_t e = 0; e < k; ++e) {
    std::uint64_t op = y.empty() ? 1 : rng() % 3;
    if (op == 0) {
      y.erase(y.begin() + static_cast<std::ptrdiff_t>(rng() % y.size()));
    } else if (op == 1) {
      const std::size_t p = rng() % (y.size() + 1);
      y.insert(y.begin() + static_cast<std::ptrdiff_t>(p), letter(rng, sigma));
    } else {
      const std::size_t p = rng() % y.size();
      y[p] = other_letter(rng, sigma, y[p]);
    }
  }
  return {std::move(x), std::move(y)};
}

}  // namespace qstring
