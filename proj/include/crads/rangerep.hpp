#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "crads/rmq.hpp"
#include "crads/text.hpp"

namespace crads {

class ByteWriter;
class ByteReader;

struct GridPoint {
  pos_t x = 0;
  pos_t y = 0;
  pos_t payload = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Static 2D orthogonal range reporting: a range tree over x whose nodes keep their points
/// sorted by y. O(z log z) words, O(log^2 z + k) per query.
class Grid {
 public:
  Grid() = default;
  /// Throws std::invalid_argument on a repeated (x, y).
  explicit Grid(std::vector<GridPoint> points);

  std::size_t size() const { return points_.size(); }
  const std::vector<GridPoint>& points() const { return points_; }

  /// Payloads of the points in [x.sp..x.ep] x [y.sp..y.ep], sorted.
  std::vector<pos_t> query(const Interval& x, const Interval& y) const;

 private:
  std::vector<GridPoint> points_;  // sorted by (x, y)
  std::size_t leaves_ = 0;
  std::vector<std::vector<std::pair<pos_t, pos_t>>> tree_;  // (y, payload) per node
};

struct SourceEntry {
  pos_t src_start = 0;
  pos_t src_end = 0;
  pos_t factor_start = 0;
  friend bool operator==(const SourceEntry&, const SourceEntry&) = default;
};

/// Copy-factor sources, answering "which sources contain [s..e]" queries.
class SourceSet {
 public:
  SourceSet() = default;
  explicit SourceSet(std::vector<SourceEntry> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<SourceEntry>& entries() const { return entries_; }

  /// (factorStart, occStart - srcStart) for every source with srcStart <= occStart and srcEnd >= occEnd.
  std::vector<std::pair<pos_t, pos_t>> query(pos_t occ_start, pos_t occ_end) const;

 private:
  void report(std::size_t lo, std::size_t hi, pos_t occ_start, pos_t occ_end,
              std::vector<std::pair<pos_t, pos_t>>& out) const;

  std::vector<SourceEntry> entries_;  // sorted by src_start
  SparseTable<std::pair<pos_t, pos_t>, std::greater<>> max_end_;
};

}  // namespace crads
