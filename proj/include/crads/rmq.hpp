#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace crads {

/// Sparse-table range minimum (or maximum, via Compare) over a fixed array; O(1) queries.
template <typename T, typename Compare = std::less<T>>
class SparseTable {
 public:
  SparseTable() = default;

  explicit SparseTable(std::vector<T> values) {
    levels_.push_back(std::move(values));
    const std::size_t n = levels_[0].size();
    for (std::size_t len = 2; len <= n; len *= 2) {
      const auto& prev = levels_.back();
      std::vector<T> next(n - len + 1);
      for (std::size_t i = 0; i + len <= n; ++i) {
        next[i] = best(prev[i], prev[i + len / 2]);
      }
      levels_.push_back(std::move(next));
    }
  }

  std::size_t size() const { return levels_.empty() ? 0 : levels_[0].size(); }

  /// Best value over the half-open range [lo, hi); requires lo < hi.
  T query(std::size_t lo, std::size_t hi) const {
    const std::size_t k = std::bit_width(hi - lo) - 1;
    return best(levels_[k][lo], levels_[k][hi - (std::size_t{1} << k)]);
  }

 private:
  static T best(const T& a, const T& b) { return Compare{}(b, a) ? b : a; }

  std::vector<std::vector<T>> levels_;
};

}  // namespace crads
