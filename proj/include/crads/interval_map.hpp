#pragma once

#include <vector>

#include "crads/text.hpp"

namespace crads {

class ByteWriter;
class ByteReader;

/// Maps the BWT interval of a string W to the range of ranks, in the sorted list of
/// labels of a node set, of the labels that have W as a prefix.
///
/// Labels are given by their BWT interval and length. Two labels may share an interval
/// (the shorter is then a prefix of the longer), so the query needs |W| as well.
class FactorIntervalMap {
 public:
  struct Label {
    Interval iv;
    pos_t length = 0;
    friend bool operator==(const Label&, const Label&) = default;
  };

  FactorIntervalMap() = default;
  /// Throws std::invalid_argument on a repeated (interval, length) pair or an interval outside [1..n].
  FactorIntervalMap(std::vector<Label> labels, pos_t n);

  pos_t k() const { return static_cast<pos_t>(labels_.size()); }
  /// Labels in lexicographic order of the strings they stand for.
  const std::vector<Label>& sorted_labels() const { return labels_; }
  /// 1-based rank of a stored label, or 0 when absent.
  pos_t rank_of(const Label& label) const;

  /// Ranks [x..y] of labels extending W, where iv is the interval of W and w_length = |W|.
  Interval query(const Interval& iv, pos_t w_length) const;

  /// Distinct interval starts and the prefix sums of how many labels start at each.
  const std::vector<pos_t>& first_positions() const { return first_; }
  const std::vector<pos_t>& first_sums() const { return first_sums_; }
  const std::vector<pos_t>& last_positions() const { return last_; }
  const std::vector<pos_t>& last_sums() const { return last_sums_; }

  void save(ByteWriter& w) const;
  static FactorIntervalMap load(ByteReader& r);

  friend bool operator==(const FactorIntervalMap& a, const FactorIntervalMap& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }

 private:
  pos_t n_ = 0;
  std::vector<Label> labels_;
  std::vector<pos_t> first_, first_sums_;  // first_sums_[p] = labels starting at first_[0..p-1]
  std::vector<pos_t> last_, last_sums_;
};

}  // namespace crads
