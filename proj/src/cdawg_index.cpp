#include "crads/cdawg_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "crads/index_file.hpp"

namespace crads {

CdawgRlbwtIndex::CdawgRlbwtIndex(const Text& t) {
  auto b = build_suffix_array_bundle(t);
  OracleSuffixTree st(t, b);
  fwd_ = RunLengthBwt(bwt_from_suffix_array(t, b), t.sigma());
  cdawg_ = Cdawg(t, b, st);
}

std::vector<pos_t> CdawgRlbwtIndex::locate(std::span<const Symbol> p, LocateStats* stats) const {
  std::vector<pos_t> out;
  const auto m = static_cast<pos_t>(p.size());
  if (m == 0 || count(p) == 0) return out;

  // i: symbols of p consumed; j: 1-based start of the current string inside the node's repeat.
  int v = cdawg_.source();
  pos_t i = 0, j = 1;
  while (i < m) {
    int a = cdawg_.find_arc(v, p[static_cast<std::size_t>(i)]);
    if (a < 0) throw std::logic_error("blind search left the graph on an occurring pattern");
    const auto& arc = cdawg_.arc(a);
    if (stats != nullptr) ++stats->search_arcs;
    i += arc.right;
    if (arc.target == cdawg_.sink()) {
      out.push_back(arc.pos + j - 1);
      return out;
    }
    j += arc.left;
    v = arc.target;
  }
  std::size_t visited = 0;
  for (auto [pos, offset] : cdawg_.dfs_reachable_sink_arcs(v, j, &visited)) out.push_back(pos + offset - 1);
  if (stats != nullptr) stats->reporting_arcs += visited;
  std::sort(out.begin(), out.end());
  return out;
}

void CdawgRlbwtIndex::save(IndexFile& f) const {
  ByteWriter w;
  fwd_.save(w);
  f.add("CDWG.rlbwt", w.take());
  cdawg_.save(w);
  f.add("CDWG.graph", w.take());
}

CdawgRlbwtIndex CdawgRlbwtIndex::load(const IndexFile& f) {
  ByteReader a(f.section("CDWG.rlbwt"));
  auto fwd = RunLengthBwt::load(a);
  ByteReader b(f.section("CDWG.graph"));
  auto g = Cdawg::load(b);
  if (!a.done() || !b.done()) throw DataError("trailing bytes in CDWG sections");
  if (g.text_size() != fwd.size()) throw DataError("CDWG sections disagree on n");
  return {std::move(fwd), std::move(g)};
}

}  // namespace crads
