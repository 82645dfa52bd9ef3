#pragma once

#include <span>
#include <vector>

#include "crads/interval_map.hpp"
#include "crads/lz77.hpp"
#include "crads/rangerep.hpp"
#include "crads/rlbwt.hpp"
#include "crads/text.hpp"

namespace crads {

class IndexFile;

struct LzLocateResult {
  std::vector<pos_t> primary;    // sorted
  std::vector<pos_t> secondary;  // sorted

  std::vector<pos_t> all() const;
};

/// Pattern index over the LZ77 parse and the run-length BWTs of T and rev(T).
class LzRlbwtIndex {
 public:
  LzRlbwtIndex() = default;
  explicit LzRlbwtIndex(const Text& t);

  const RunLengthBwt& rlbwt() const { return fwd_; }
  const RunLengthBwt& rlbwt_rev() const { return rev_; }
  const LzFactorization& parse() const { return parse_; }
  /// BWT_rev rows of the reversed prefixes that end right before each factor, sorted.
  const std::vector<pos_t>& marks() const { return marks_; }
  const FactorIntervalMap& factor_map() const { return factor_map_; }
  const Grid& grid() const { return grid_; }
  const SourceSet& sources() const { return sources_; }

  pos_t count(std::span<const Symbol> p) const { return fwd_.count(p); }
  LzLocateResult locate(std::span<const Symbol> p) const;

  void save(IndexFile& f) const;
  static LzRlbwtIndex load(const IndexFile& f);

  friend bool operator==(const LzRlbwtIndex& a, const LzRlbwtIndex& b) {
    return a.fwd_ == b.fwd_ && a.rev_ == b.rev_ && a.parse_ == b.parse_ && a.marks_ == b.marks_ &&
           a.factor_map_ == b.factor_map_ && a.grid_.points() == b.grid_.points() &&
           a.sources_.entries() == b.sources_.entries();
  }

 private:
  void build_grid_and_sources(const std::vector<pos_t>& x_of_factor);
  /// Marks in [iv.sp..iv.ep] as a 1-based rank range.
  Interval mark_range(const Interval& iv) const;

  RunLengthBwt fwd_;
  RunLengthBwt rev_;
  LzFactorization parse_;
  std::vector<pos_t> marks_;
  std::vector<pos_t> mark_of_factor_;
  std::vector<pos_t> x_of_factor_;
  FactorIntervalMap factor_map_;
  Grid grid_;
  SourceSet sources_;
};

}  // namespace crads
