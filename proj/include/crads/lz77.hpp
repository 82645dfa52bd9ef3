#pragma once

#include <vector>

#include "crads/oracles.hpp"
#include "crads/text.hpp"

namespace crads {

class ByteWriter;
class ByteReader;

struct LzFactor {
  pos_t start = 0;
  pos_t length = 0;
  pos_t source = 0;  // 0 for a novel factor
  Symbol symbol = 0;  // the symbol of a novel factor

  bool novel() const { return source == 0; }
  friend bool operator==(const LzFactor&, const LzFactor&) = default;
};

/// Greedy self-referential LZ77 parse. A symbol without an earlier occurrence is a
/// length-1 novel factor; copy sources always lie inside the text.
class LzFactorization {
 public:
  LzFactorization() = default;
  explicit LzFactorization(std::vector<LzFactor> factors);

  pos_t z() const { return static_cast<pos_t>(factors_.size()); }
  const std::vector<LzFactor>& factors() const { return factors_; }
  const LzFactor& factor(pos_t j) const { return factors_[static_cast<std::size_t>(j - 1)]; }
  /// Factor start positions, increasing.
  std::vector<pos_t> boundaries() const;

  void save(ByteWriter& w) const;
  static LzFactorization load(ByteReader& r);

  friend bool operator==(const LzFactorization&, const LzFactorization&) = default;

 private:
  std::vector<LzFactor> factors_;
};

LzFactorization factorize(const Text& t, const SuffixArrayBundle& b);
LzFactorization factorize(const Text& t);

/// Replays the parse symbol by symbol.
std::vector<Symbol> decompress(const LzFactorization& f);

struct DistinctFactor {
  pos_t start = 0;   // start of its first use
  pos_t length = 0;
  std::vector<pos_t> factor_indices;  // 1-based, increasing
};

/// Distinct factor strings in lexicographic order.
std::vector<DistinctFactor> distinct_factors(const LzFactorization& f, const Text& t);

}  // namespace crads
