#include "crads/cdawg_st.hpp"

#include <stdexcept>

#include "crads/index_file.hpp"

namespace crads {

CdawgSuffixTree::CdawgSuffixTree(const Text& t) {
  auto b = build_suffix_array_bundle(t);
  OracleSuffixTree st(t, b);
  Text rev = reverse_text(t);
  auto rb = build_suffix_array_bundle(rev);
  fwd_ = RunLengthBwt(bwt_from_suffix_array(t, b), t.sigma());
  rev_ = RunLengthBwt(bwt_from_suffix_array(rev, rb), t.sigma());
  cdawg_ = Cdawg(t, b, st);
}

CdawgSuffixTree::CdawgSuffixTree(RunLengthBwt fwd, RunLengthBwt rev, Cdawg g)
    : fwd_(std::move(fwd)), rev_(std::move(rev)), cdawg_(std::move(g)) {}

pos_t CdawgSuffixTree::locate_leaf(const StNodeId& v) const {
  if (!is_leaf(v)) throw std::invalid_argument("locate_leaf on an internal node");
  return text_size() - v.depth + 1;
}

bool CdawgSuffixTree::is_ancestor(const StNodeId& u, const StNodeId& v) const {
  return u.sp <= v.sp && v.ep <= u.ep && u.depth <= v.depth;
}

int CdawgSuffixTree::entering_arc(int node, pos_t depth) const {
  if (depth == 0) return -1;
  const CdawgBoundary* b = cdawg_.boundary_at(node, depth);
  if (b == nullptr) throw std::logic_error("depth outside the class of the node");
  return b->arc;
}

StNodeId CdawgSuffixTree::child_by_arc(const StNodeId& v, int a) const {
  const auto& arc = cdawg_.arc(a);
  pos_t sp = v.sp + arc.child_delta_start;
  return {arc.target, v.depth + arc.right, sp, sp + arc.child_width - 1};
}

std::optional<StNodeId> CdawgSuffixTree::child(const StNodeId& v, Symbol c) const {
  if (is_leaf(v)) return std::nullopt;
  int a = cdawg_.find_arc(v.node, c);
  if (a < 0) return std::nullopt;
  return child_by_arc(v, a);
}

std::optional<StNodeId> CdawgSuffixTree::first_child(const StNodeId& v) const {
  if (is_leaf(v)) return std::nullopt;
  const auto& node = cdawg_.node(v.node);
  if (node.arc_begin == node.arc_end) return std::nullopt;
  return child_by_arc(v, node.arc_begin);
}

std::optional<StNodeId> CdawgSuffixTree::parent(const StNodeId& v) const {
  int a = entering_arc(v.node, v.depth);
  if (a < 0) return std::nullopt;
  const auto& arc = cdawg_.arc(a);
  pos_t sp = v.sp - arc.child_delta_start;
  return StNodeId{arc.source, v.depth - arc.right, sp, sp + cdawg_.node(arc.source).width() - 1};
}

std::optional<StNodeId> CdawgSuffixTree::next_sibling(const StNodeId& v) const {
  int a = entering_arc(v.node, v.depth);
  if (a < 0) return std::nullopt;
  const auto& arc = cdawg_.arc(a);
  if (a + 1 >= cdawg_.node(arc.source).arc_end) return std::nullopt;
  return child_by_arc(*parent(v), a + 1);
}

StNodeId CdawgSuffixTree::suffix_link(const StNodeId& v) const {
  if (v.depth == 0) throw std::invalid_argument("the root has no suffix link");
  if (v.depth == 1 && is_leaf(v)) return root();
  const auto& node = cdawg_.node(v.node);
  if (!is_leaf(v) && v.depth == node.min_depth()) {
    const auto& w = cdawg_.node(node.suffix_link);
    return {node.suffix_link, w.length, w.first, w.last};
  }
  return {v.node, v.depth - 1, fwd_.psi(v.sp), fwd_.psi(v.ep)};
}

std::optional<StNodeId> CdawgSuffixTree::weiner_link(const StNodeId& v, Symbol c) const {
  if (c == kTerminator && v.depth > 0) return std::nullopt;
  Interval iv = fwd_.backward_step({v.sp, v.ep}, c);
  if (iv.empty()) return std::nullopt;
  if (c == kTerminator || is_leaf(v)) return StNodeId{cdawg_.sink(), v.depth + 1, iv.sp, iv.ep};
  const auto& node = cdawg_.node(v.node);
  if (v.depth < node.length) return StNodeId{v.node, v.depth + 1, iv.sp, iv.ep};
  for (auto [sym, target] : node.weiner_links) {
    if (sym == c) return StNodeId{target, cdawg_.node(target).min_depth(), iv.sp, iv.ep};
  }
  // c·label(v) is not right-maximal: its locus hangs below the deepest descendant of v
  // that still covers both extreme occurrences.
  pos_t a = fwd_.psi(iv.sp), b = fwd_.psi(iv.ep);
  StNodeId u = v;
  for (bool descended = true; descended && !is_leaf(u);) {
    descended = false;
    const auto& un = cdawg_.node(u.node);
    for (int arc = un.arc_begin; arc < un.arc_end; ++arc) {
      StNodeId w = child_by_arc(u, arc);
      if (w.sp <= a && b <= w.ep) {
        u = w;
        descended = true;
        break;
      }
    }
  }
  if (u == v) throw std::logic_error("implicit left extension without a deeper locus");
  return weiner_link(u, c);
}

Symbol CdawgSuffixTree::read_edge(int a, pos_t t, EdgeCursor& cursor) const {
  const auto& arc = cdawg_.arc(a);
  if (t < 1 || t > arc.right) throw std::out_of_range("edge offset out of range");
  if (t == 1) return arc.c;
  if (cursor.arc != a || cursor.offset > t - 1) {
    cursor.arc = a;
    cursor.offset = 0;
    cursor.rv = cdawg_.node(arc.source).rev_interval;
  }
  while (cursor.offset < t - 1) {
    Symbol c = cursor.offset == 0 ? arc.c : static_cast<Symbol>(rev_.uniform_symbol(cursor.rv));
    cursor.rv = rev_.backward_step(cursor.rv, c);
    ++cursor.offset;
  }
  int c = rev_.uniform_symbol(cursor.rv);
  if (c < 0) throw std::logic_error("branching inside an edge");
  return static_cast<Symbol>(c);
}

Symbol CdawgSuffixTree::edge_char(const StNodeId& v, pos_t t) const {
  int a = entering_arc(v.node, v.depth);
  if (a < 0) throw std::out_of_range("the root has no entering edge");
  EdgeCursor cursor;
  return read_edge(a, t, cursor);
}

std::optional<LightStNodeId> CdawgSuffixTree::child(const LightStNodeId& v, Symbol c) const {
  if (v.node == cdawg_.sink()) return std::nullopt;
  int a = cdawg_.find_arc(v.node, c);
  if (a < 0) return std::nullopt;
  const auto& arc = cdawg_.arc(a);
  return LightStNodeId{arc.target, v.depth + arc.right};
}

std::optional<LightStNodeId> CdawgSuffixTree::first_child(const LightStNodeId& v) const {
  if (v.node == cdawg_.sink()) return std::nullopt;
  const auto& node = cdawg_.node(v.node);
  if (node.arc_begin == node.arc_end) return std::nullopt;
  const auto& arc = cdawg_.arc(node.arc_begin);
  return LightStNodeId{arc.target, v.depth + arc.right};
}

std::optional<LightStNodeId> CdawgSuffixTree::parent(const LightStNodeId& v) const {
  int a = entering_arc(v.node, v.depth);
  if (a < 0) return std::nullopt;
  const auto& arc = cdawg_.arc(a);
  return LightStNodeId{arc.source, v.depth - arc.right};
}

std::optional<LightStNodeId> CdawgSuffixTree::next_sibling(const LightStNodeId& v) const {
  int a = entering_arc(v.node, v.depth);
  if (a < 0) return std::nullopt;
  const auto& arc = cdawg_.arc(a);
  if (a + 1 >= cdawg_.node(arc.source).arc_end) return std::nullopt;
  const auto& next = cdawg_.arc(a + 1);
  return LightStNodeId{next.target, v.depth - arc.right + next.right};
}

LightStNodeId CdawgSuffixTree::suffix_link(const LightStNodeId& v) const {
  if (v.depth == 0) throw std::invalid_argument("the root has no suffix link");
  if (v.node == cdawg_.sink()) return v.depth == 1 ? light_root() : LightStNodeId{v.node, v.depth - 1};
  const auto& node = cdawg_.node(v.node);
  if (v.depth == node.min_depth()) return {node.suffix_link, cdawg_.node(node.suffix_link).length};
  return {v.node, v.depth - 1};
}

void CdawgSuffixTree::traverse(const std::function<void(const LightStNodeId&)>& visit) const {
  LightStNodeId v = light_root();
  visit(v);
  for (;;) {
    if (auto c = first_child(v)) {
      v = *c;
      visit(v);
      continue;
    }
    for (;;) {
      if (v == light_root()) return;
      if (auto s = next_sibling(v)) {
        v = *s;
        visit(v);
        break;
      }
      v = *parent(v);
    }
  }
}

std::vector<pos_t> CdawgSuffixTree::matching_statistics(std::span<const Symbol> s) const {
  const auto m = static_cast<pos_t>(s.size());
  std::vector<pos_t> ms(static_cast<std::size_t>(m), 0);
  auto at = [&](pos_t k) { return s[static_cast<std::size_t>(k)]; };

  // The match of s[i..] is label(v) followed by len - depth(v) symbols of the edge `arc`.
  StNodeId v = root();
  pos_t len = 0;
  int arc = -1;
  EdgeCursor cursor;
  for (pos_t i = 0; i < m; ++i) {
    while (i + len < m) {
      Symbol a = at(i + len);
      if (len == v.depth) {
        if (is_leaf(v) || a == kTerminator) break;
        arc = cdawg_.find_arc(v.node, a);
        if (arc < 0) break;
      } else if (read_edge(arc, len - v.depth + 1, cursor) != a) {
        break;
      }
      ++len;
      if (len == v.depth + cdawg_.arc(arc).right) v = child_by_arc(v, arc);
    }
    ms[static_cast<std::size_t>(i)] = len;
    if (len == 0) continue;

    if (v.depth > 0) v = suffix_link(v);
    --len;
    // Skip/count down to the deepest node within the remaining match.
    while (v.depth < len) {
      arc = cdawg_.find_arc(v.node, at(i + 1 + v.depth));
      if (v.depth + cdawg_.arc(arc).right > len) break;
      v = child_by_arc(v, arc);
    }
  }
  return ms;
}

// Left extension in `a`; the partner interval shifts by the occurrences of smaller symbols.
BidirectionalState CdawgSuffixTree::extend(const RunLengthBwt& a, const BidirectionalState& st, Symbol c) {
  if (st.empty() || c == kTerminator) return {{}, {}, 0};
  Interval next = a.backward_step(st.fwd, c);
  if (next.empty()) return {{}, {}, 0};
  pos_t smaller = 0;
  for (int x = 0; x < c; ++x) {
    auto s = static_cast<Symbol>(x);
    smaller += a.rank(s, st.fwd.ep) - a.rank(s, st.fwd.sp - 1);
  }
  Interval other{st.rev.sp + smaller, st.rev.sp + smaller + next.width() - 1};
  return {next, other, st.length + 1};
}

BidirectionalState CdawgSuffixTree::extend_left(const BidirectionalState& st, Symbol c) const {
  return extend(fwd_, st, c);
}

BidirectionalState CdawgSuffixTree::extend_right(const BidirectionalState& st, Symbol c) const {
  BidirectionalState flipped{st.rev, st.fwd, st.length};
  auto r = extend(rev_, flipped, c);
  return {r.rev, r.fwd, r.length};
}

void CdawgSuffixTree::save(IndexFile& f) const {
  ByteWriter w;
  fwd_.save(w);
  f.add("ST.rlbwt", w.take());
  rev_.save(w);
  f.add("ST.rlbwt_rev", w.take());
  cdawg_.save(w);
  f.add("ST.graph", w.take());
}

CdawgSuffixTree CdawgSuffixTree::load(const IndexFile& f) {
  ByteReader a(f.section("ST.rlbwt"));
  auto fwd = RunLengthBwt::load(a);
  ByteReader b(f.section("ST.rlbwt_rev"));
  auto rev = RunLengthBwt::load(b);
  ByteReader c(f.section("ST.graph"));
  auto g = Cdawg::load(c);
  if (!a.done() || !b.done() || !c.done()) throw DataError("trailing bytes in ST sections");
  if (fwd.size() != rev.size() || g.text_size() != fwd.size()) throw DataError("ST sections disagree on n");
  return {std::move(fwd), std::move(rev), std::move(g)};
}

}  // namespace crads
