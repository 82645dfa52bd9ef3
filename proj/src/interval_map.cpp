#include "crads/interval_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "crads/index_file.hpp"

namespace crads {

namespace {

auto order_key(const FactorIntervalMap::Label& l) { return std::tuple(l.iv.sp, -l.iv.ep, l.length); }

}  // namespace

FactorIntervalMap::FactorIntervalMap(std::vector<Label> labels, pos_t n) : n_(n), labels_(std::move(labels)) {
  for (const auto& l : labels_) {
    if (l.iv.empty() || l.iv.sp < 1 || l.iv.ep > n) throw std::invalid_argument("label interval outside [1..n]");
  }
  std::sort(labels_.begin(), labels_.end(), [](const Label& a, const Label& b) { return order_key(a) < order_key(b); });
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::invalid_argument("duplicate label interval");
  }
  std::map<pos_t, pos_t> ends;
  first_sums_.push_back(0);
  for (const auto& l : labels_) {
    if (first_.empty() || first_.back() != l.iv.sp) {
      first_.push_back(l.iv.sp);
      first_sums_.push_back(first_sums_.back());
    }
    ++first_sums_.back();
    ++ends[l.iv.ep];
  }
  last_sums_.push_back(0);
  for (auto [ep, count] : ends) {
    last_.push_back(ep);
    last_sums_.push_back(last_sums_.back() + count);
  }
}

pos_t FactorIntervalMap::rank_of(const Label& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const Label& a, const Label& b) { return order_key(a) < order_key(b); });
  return it != labels_.end() && *it == label ? static_cast<pos_t>(it - labels_.begin()) + 1 : 0;
}

Interval FactorIntervalMap::query(const Interval& iv, pos_t w_length) const {
  if (iv.empty() || labels_.empty()) return {};
  auto lo = static_cast<std::size_t>(std::lower_bound(first_.begin(), first_.end(), iv.sp) - first_.begin());
  auto hi = static_cast<std::size_t>(std::upper_bound(first_.begin(), first_.end(), iv.ep) - first_.begin());
  if (hi <= lo) return {};
  pos_t y = first_sums_[hi];
  pos_t x = 1 + first_sums_[lo];
  if (first_[lo] == iv.sp) {
    // Labels starting at sp that end after ep, or end at ep but are shorter, are proper prefixes of W.
    auto begin = labels_.begin() + first_sums_[lo];
    auto end = labels_.begin() + first_sums_[lo + 1];
    Label probe{iv, w_length};
    auto it = std::lower_bound(begin, end, probe, [](const Label& a, const Label& b) { return order_key(a) < order_key(b); });
    x += static_cast<pos_t>(it - begin);
  }
  if (x > y) return {};
  return {x, y};
}

void FactorIntervalMap::save(ByteWriter& w) const {
  w.put(n_);
  w.put(labels_.size());
  for (const auto& l : labels_) {
    w.put(l.iv.sp);
    w.put(l.iv.ep);
    w.put(l.length);
  }
}

FactorIntervalMap FactorIntervalMap::load(ByteReader& r) {
  pos_t n = r.get();
  auto count = r.get();
  if (count < 0 || static_cast<std::uint64_t>(count) > r.remaining() / 24) throw DataError("corrupt interval map");
  std::vector<Label> labels;
  for (std::int64_t k = 0; k < count; ++k) {
    Label l;
    l.iv.sp = r.get();
    l.iv.ep = r.get();
    l.length = r.get();
    labels.push_back(l);
  }
  try {
    return FactorIntervalMap(std::move(labels), n);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("corrupt interval map: ") + e.what());
  }
}

}  // namespace crads
