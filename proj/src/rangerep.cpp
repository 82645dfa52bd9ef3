#include "crads/rangerep.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace crads {

Grid::Grid(std::vector<GridPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(),
            [](const GridPoint& a, const GridPoint& b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); });
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].x == points_[i - 1].x && points_[i].y == points_[i - 1].y) {
      throw std::invalid_argument("duplicate grid point");
    }
  }
  leaves_ = 1;
  while (leaves_ < points_.size()) leaves_ *= 2;
  tree_.assign(2 * leaves_, {});
  for (std::size_t i = 0; i < points_.size(); ++i) tree_[leaves_ + i] = {{points_[i].y, points_[i].payload}};
  for (std::size_t v = leaves_ - 1; v >= 1; --v) {
    const auto& a = tree_[2 * v];
    const auto& b = tree_[2 * v + 1];
    tree_[v].resize(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), tree_[v].begin());
  }
}

std::vector<pos_t> Grid::query(const Interval& x, const Interval& y) const {
  std::vector<pos_t> out;
  if (x.empty() || y.empty() || points_.empty()) return out;
  auto lo = static_cast<std::size_t>(std::lower_bound(points_.begin(), points_.end(), x.sp,
                                                      [](const GridPoint& p, pos_t v) { return p.x < v; }) -
                                     points_.begin());
  auto hi = static_cast<std::size_t>(std::upper_bound(points_.begin(), points_.end(), x.ep,
                                                      [](pos_t v, const GridPoint& p) { return v < p.x; }) -
                                     points_.begin());
  auto collect = [&](std::size_t v) {
    const auto& node = tree_[v];
    auto it = std::lower_bound(node.begin(), node.end(), std::pair(y.sp, pos_t{0}),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    for (; it != node.end() && it->first <= y.ep; ++it) out.push_back(it->second);
  };
  for (std::size_t l = lo + leaves_, r = hi + leaves_; l < r; l /= 2, r /= 2) {
    if (l & 1) collect(l++);
    if (r & 1) collect(--r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SourceSet::SourceSet(std::vector<SourceEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.src_start < 1 || e.src_end < e.src_start || e.src_start >= e.factor_start) {
      throw std::invalid_argument("malformed source entry");
    }
  }
  std::sort(entries_.begin(), entries_.end(), [](const SourceEntry& a, const SourceEntry& b) {
    return std::tuple(a.src_start, a.factor_start) < std::tuple(b.src_start, b.factor_start);
  });
  std::vector<std::pair<pos_t, pos_t>> ends;
  for (std::size_t i = 0; i < entries_.size(); ++i) ends.emplace_back(entries_[i].src_end, static_cast<pos_t>(i));
  max_end_ = decltype(max_end_)(std::move(ends));
}

void SourceSet::report(std::size_t lo, std::size_t hi, pos_t occ_start, pos_t occ_end,
                       std::vector<std::pair<pos_t, pos_t>>& out) const {
  if (lo >= hi) return;
  auto [end, idx] = max_end_.query(lo, hi);
  if (end < occ_end) return;
  const auto& e = entries_[static_cast<std::size_t>(idx)];
  out.emplace_back(e.factor_start, occ_start - e.src_start);
  report(lo, static_cast<std::size_t>(idx), occ_start, occ_end, out);
  report(static_cast<std::size_t>(idx) + 1, hi, occ_start, occ_end, out);
}

std::vector<std::pair<pos_t, pos_t>> SourceSet::query(pos_t occ_start, pos_t occ_end) const {
  std::vector<std::pair<pos_t, pos_t>> out;
  auto hi = static_cast<std::size_t>(std::upper_bound(entries_.begin(), entries_.end(), occ_start,
                                                      [](pos_t v, const SourceEntry& e) { return v < e.src_start; }) -
                                     entries_.begin());
  report(0, hi, occ_start, occ_end, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crads
