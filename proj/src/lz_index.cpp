#include "crads/lz_index.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "crads/index_file.hpp"
#include "crads/oracles.hpp"

namespace crads {

std::vector<pos_t> LzLocateResult::all() const {
  std::vector<pos_t> out(primary);
  out.insert(out.end(), secondary.begin(), secondary.end());
  std::sort(out.begin(), out.end());
  return out;
}

LzRlbwtIndex::LzRlbwtIndex(const Text& t) {
  const pos_t n = t.size();
  auto b = build_suffix_array_bundle(t);
  Text rev = reverse_text(t);
  auto rb = build_suffix_array_bundle(rev);
  fwd_ = RunLengthBwt(bwt_from_suffix_array(t, b), t.sigma());
  rev_ = RunLengthBwt(bwt_from_suffix_array(rev, rb), t.sigma());
  parse_ = factorize(t, b);

  std::vector<FactorIntervalMap::Label> labels;
  std::vector<FactorIntervalMap::Label> label_of_factor(static_cast<std::size_t>(parse_.z()));
  for (const auto& d : distinct_factors(parse_, t)) {
    Interval iv = fwd_.interval_of(t.symbols().subspan(static_cast<std::size_t>(d.start - 1), static_cast<std::size_t>(d.length)));
    labels.push_back({iv, d.length});
    for (pos_t j : d.factor_indices) label_of_factor[static_cast<std::size_t>(j - 1)] = labels.back();
  }
  factor_map_ = FactorIntervalMap(std::move(labels), n);

  for (const auto& f : parse_.factors()) {
    mark_of_factor_.push_back(rb.isa[static_cast<std::size_t>(n - f.start + 1)]);
  }
  std::vector<pos_t> x_of_factor;
  for (const auto& label : label_of_factor) x_of_factor.push_back(factor_map_.rank_of(label));
  build_grid_and_sources(x_of_factor);
}

void LzRlbwtIndex::build_grid_and_sources(const std::vector<pos_t>& x_of_factor) {
  x_of_factor_ = x_of_factor;
  marks_ = mark_of_factor_;
  std::sort(marks_.begin(), marks_.end());
  std::vector<GridPoint> points;
  std::vector<SourceEntry> entries;
  for (pos_t j = 1; j <= parse_.z(); ++j) {
    const auto& f = parse_.factor(j);
    pos_t row = mark_of_factor_[static_cast<std::size_t>(j - 1)];
    pos_t y = static_cast<pos_t>(std::lower_bound(marks_.begin(), marks_.end(), row) - marks_.begin()) + 1;
    points.push_back({x_of_factor[static_cast<std::size_t>(j - 1)], y, f.start});
    if (!f.novel()) entries.push_back({f.source, f.source + f.length - 1, f.start});
  }
  grid_ = Grid(std::move(points));
  sources_ = SourceSet(std::move(entries));
}

Interval LzRlbwtIndex::mark_range(const Interval& iv) const {
  if (iv.empty()) return {};
  auto lo = std::lower_bound(marks_.begin(), marks_.end(), iv.sp) - marks_.begin();
  auto hi = std::upper_bound(marks_.begin(), marks_.end(), iv.ep) - marks_.begin();
  return {static_cast<pos_t>(lo) + 1, static_cast<pos_t>(hi)};
}

LzLocateResult LzRlbwtIndex::locate(std::span<const Symbol> p) const {
  LzLocateResult out;
  const auto m = static_cast<pos_t>(p.size());
  if (m == 0 || count(p) == 0) return out;

  // suffix_iv[k-1] = interval of p[k..m]
  std::vector<Interval> suffix_iv(static_cast<std::size_t>(m));
  Interval iv = fwd_.full();
  for (pos_t k = m; k >= 1; --k) {
    iv = fwd_.backward_step(iv, p[static_cast<std::size_t>(k - 1)]);
    suffix_iv[static_cast<std::size_t>(k - 1)] = iv;
  }

  Interval rev_iv = rev_.full();  // interval of rev(p[1..k-1])
  for (pos_t k = 1; k <= m; ++k) {
    Interval y = k == 1 ? Interval{1, static_cast<pos_t>(marks_.size())} : mark_range(rev_iv);
    if (!y.empty()) {
      Interval x = factor_map_.query(suffix_iv[static_cast<std::size_t>(k - 1)], m - k + 1);
      for (pos_t start : grid_.query(x, y)) out.primary.push_back(start - (k - 1));
    }
    rev_iv = rev_.backward_step(rev_iv, p[static_cast<std::size_t>(k - 1)]);
  }
  std::sort(out.primary.begin(), out.primary.end());

  std::unordered_set<pos_t> seen(out.primary.begin(), out.primary.end());
  std::deque<pos_t> queue(out.primary.begin(), out.primary.end());
  while (!queue.empty()) {
    pos_t s = queue.front();
    queue.pop_front();
    for (auto [factor_start, delta] : sources_.query(s, s + m - 1)) {
      pos_t q = factor_start + delta;
      if (seen.insert(q).second) {
        out.secondary.push_back(q);
        queue.push_back(q);
      }
    }
  }
  std::sort(out.secondary.begin(), out.secondary.end());
  return out;
}

void LzRlbwtIndex::save(IndexFile& f) const {
  ByteWriter w;
  fwd_.save(w);
  f.add("LZRL.rlbwt", w.take());
  rev_.save(w);
  f.add("LZRL.rlbwt_rev", w.take());
  parse_.save(w);
  f.add("LZRL.parse", w.take());
  w.put_all(mark_of_factor_);
  f.add("LZRL.marks", w.take());
  factor_map_.save(w);
  f.add("LZRL.factor_map", w.take());
  w.put_all(x_of_factor_);
  f.add("LZRL.grid_x", w.take());
}

LzRlbwtIndex LzRlbwtIndex::load(const IndexFile& f) {
  LzRlbwtIndex x;
  auto read = [&](const char* name, auto&& fn) {
    ByteReader r(f.section(name));
    fn(r);
    if (!r.done()) throw DataError(std::string("trailing bytes in section ") + name);
  };
  read("LZRL.rlbwt", [&](ByteReader& r) { x.fwd_ = RunLengthBwt::load(r); });
  read("LZRL.rlbwt_rev", [&](ByteReader& r) { x.rev_ = RunLengthBwt::load(r); });
  read("LZRL.parse", [&](ByteReader& r) { x.parse_ = LzFactorization::load(r); });
  read("LZRL.marks", [&](ByteReader& r) { x.mark_of_factor_ = r.get_all<pos_t>(); });
  read("LZRL.factor_map", [&](ByteReader& r) { x.factor_map_ = FactorIntervalMap::load(r); });
  std::vector<pos_t> xs;
  read("LZRL.grid_x", [&](ByteReader& r) { xs = r.get_all<pos_t>(); });
  const auto z = static_cast<std::size_t>(x.parse_.z());
  if (x.mark_of_factor_.size() != z || xs.size() != z) throw DataError("LZRL sections disagree on z");
  const pos_t n = x.fwd_.size();
  for (pos_t row : x.mark_of_factor_) {
    if (row < 1 || row > n) throw DataError("mark out of range");
  }
  try {
    x.build_grid_and_sources(xs);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("corrupt LZRL index: ") + e.what());
  }
  return x;
}

}  // namespace crads
