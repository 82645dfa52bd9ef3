#include "crads/cdawg.hpp"

#include <algorithm>
#include <stdexcept>

#include "crads/index_file.hpp"

namespace crads {

namespace {

std::uint64_t pair_key(std::int64_t a, std::int64_t b) {
  return (static_cast<std::uint64_t>(a) << 32) ^ static_cast<std::uint64_t>(b);
}

}  // namespace

Cdawg::Cdawg(const Text& t) {
  auto b = build_suffix_array_bundle(t);
  OracleSuffixTree st(t, b);
  *this = Cdawg(t, b, st);
}

Cdawg::Cdawg(const Text& t, const SuffixArrayBundle& b, const OracleSuffixTree& st) : n_(t.size()) {
  const pos_t n = n_;
  const auto bwt = bwt_from_suffix_array(t, b);
  std::vector<pos_t> changes(static_cast<std::size_t>(n) + 1, 0);
  for (pos_t i = 2; i <= n; ++i) {
    changes[static_cast<std::size_t>(i)] =
        changes[static_cast<std::size_t>(i - 1)] + (bwt[static_cast<std::size_t>(i - 1)] != bwt[static_cast<std::size_t>(i - 2)] ? 1 : 0);
  }
  auto uniform = [&](const OracleNode& v) {
    return changes[static_cast<std::size_t>(v.ep)] == changes[static_cast<std::size_t>(v.sp)];
  };
  auto sa = [&](pos_t row) { return b.sa[static_cast<std::size_t>(row)]; };
  auto isa = [&](pos_t p) { return b.isa[static_cast<std::size_t>(p)]; };
  auto lf = [&](pos_t row) { return sa(row) == 1 ? isa(n) : isa(sa(row) - 1); };

  const auto& st_nodes = st.nodes();
  std::vector<int> internal;
  for (int id = 0; id < static_cast<int>(st_nodes.size()); ++id) {
    if (!st_nodes[static_cast<std::size_t>(id)].leaf) internal.push_back(id);
  }
  std::stable_sort(internal.begin(), internal.end(), [&](int x, int y) {
    return st.node(x).depth > st.node(y).depth;
  });

  // A node that is not left-maximal joins the class of its unique left extension.
  std::vector<int> rep_of(st_nodes.size(), -1);
  for (int id : internal) {
    const auto& v = st.node(id);
    if (id == st.root() || !uniform(v)) {
      rep_of[static_cast<std::size_t>(id)] = id;
      continue;
    }
    int ext = st.find_internal({lf(v.sp), lf(v.ep)});
    if (ext < 0 || st.node(ext).depth != v.depth + 1) throw std::logic_error("left extension is not a tree node");
    rep_of[static_cast<std::size_t>(id)] = rep_of[static_cast<std::size_t>(ext)];
  }

  std::vector<int> class_of_rep(st_nodes.size(), -1);
  std::vector<int> rep_ids;
  for (int id = 0; id < static_cast<int>(st_nodes.size()); ++id) {
    if (rep_of[static_cast<std::size_t>(id)] == id) {
      class_of_rep[static_cast<std::size_t>(id)] = static_cast<int>(rep_ids.size());
      rep_ids.push_back(id);
    }
  }
  const int classes = static_cast<int>(rep_ids.size());
  const int sink_id = classes;
  auto class_of = [&](int id) {
    return st.node(id).leaf ? sink_id : class_of_rep[static_cast<std::size_t>(rep_of[static_cast<std::size_t>(id)])];
  };

  nodes_.assign(static_cast<std::size_t>(classes) + 1, {});
  std::vector<int> shortest(static_cast<std::size_t>(classes), -1);
  for (int id : internal) {
    int c = class_of(id);
    auto& node = nodes_[static_cast<std::size_t>(c)];
    ++node.size;
    int& s = shortest[static_cast<std::size_t>(c)];
    if (s < 0 || st.node(id).depth < st.node(s).depth) s = id;
  }
  for (int c = 0; c < classes; ++c) {
    const auto& rep = st.node(rep_ids[static_cast<std::size_t>(c)]);
    auto& node = nodes_[static_cast<std::size_t>(c)];
    node.length = rep.depth;
    node.first = rep.sp;
    node.last = rep.ep;
  }
  auto& sink_node = nodes_.back();
  sink_node.length = n;
  sink_node.size = n;
  sink_node.first = sink_node.last = isa(1);
  sink_node.suffix_link = source();

  for (int c = 0; c < classes; ++c) {
    const auto& u = st.node(rep_ids[static_cast<std::size_t>(c)]);
    auto& node = nodes_[static_cast<std::size_t>(c)];
    node.arc_begin = static_cast<int>(arcs_.size());
    for (int child : u.children) {
      const auto& w = st.node(child);
      CdawgArc a;
      a.source = c;
      a.target = class_of(child);
      a.c = t[sa(w.sp) + u.depth];
      a.right = w.depth - u.depth;
      a.left = nodes_[static_cast<std::size_t>(a.target)].length - u.depth - a.right;
      a.pos = w.leaf ? w.leaf_position : 0;
      a.child_delta_start = w.sp - u.sp;
      a.child_width = w.ep - w.sp + 1;
      arcs_.push_back(a);
    }
    node.arc_end = static_cast<int>(arcs_.size());
  }
  sink_node.arc_begin = sink_node.arc_end = static_cast<int>(arcs_.size());

  // Class links go through the shortest member, whose suffix is left-maximal.
  for (int c = 1; c < classes; ++c) {
    int m = shortest[static_cast<std::size_t>(c)];
    int target = class_of(st.node(m).suffix_link);
    nodes_[static_cast<std::size_t>(c)].suffix_link = target;
    nodes_[static_cast<std::size_t>(target)].weiner_links.emplace_back(t[sa(st.node(m).sp)], c);
  }
  for (auto& node : nodes_) std::sort(node.weiner_links.begin(), node.weiner_links.end());

  Text rev = reverse_text(t);
  auto rb = build_suffix_array_bundle(rev);
  LcpIntervals rev_intervals(rb);
  for (int c = 0; c < classes; ++c) {
    auto& node = nodes_[static_cast<std::size_t>(c)];
    if (node.length == 0) {
      node.rev_interval = {1, n};
      continue;
    }
    pos_t s = sa(node.first);
    pos_t row = rb.isa[static_cast<std::size_t>(n - s - node.length + 1)];
    node.rev_interval = rev_intervals.enclosing(row, node.length);
    if (node.rev_interval.width() != node.width()) throw std::logic_error("reverse interval width mismatch");
  }

  index();
  compute_boundaries();
}

void Cdawg::index() {
  arc_index_.clear();
  node_index_.clear();
  for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
    const auto& arc = arcs_[static_cast<std::size_t>(a)];
    arc_index_.emplace(pair_key(arc.source, arc.c), a);
  }
  for (int v = 0; v < sink(); ++v) node_index_.emplace(pair_key(node(v).first, node(v).last), v);
}

void Cdawg::compute_boundaries() {
  for (auto& node : nodes_) node.boundaries.clear();
  for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
    const auto& arc = arcs_[static_cast<std::size_t>(a)];
    const auto& u = node(arc.source);
    nodes_[static_cast<std::size_t>(arc.target)].boundaries.push_back({u.min_depth() + arc.right, u.length + arc.right, a});
  }
  for (int v = 1; v < static_cast<int>(nodes_.size()); ++v) {
    auto& node = nodes_[static_cast<std::size_t>(v)];
    std::sort(node.boundaries.begin(), node.boundaries.end(),
              [](const CdawgBoundary& x, const CdawgBoundary& y) { return x.min_depth < y.min_depth; });
    pos_t expect = node.min_depth();
    for (const auto& block : node.boundaries) {
      if (block.min_depth != expect) throw std::logic_error("in-arc blocks do not partition the class");
      expect = block.max_depth + 1;
    }
    if (expect != node.length + 1) throw std::logic_error("in-arc blocks do not cover the class");
  }
}

std::span<const CdawgArc> Cdawg::out_arcs(int v) const {
  const auto& x = node(v);
  return std::span(arcs_).subspan(static_cast<std::size_t>(x.arc_begin), static_cast<std::size_t>(x.arc_end - x.arc_begin));
}

int Cdawg::find_arc(int v, Symbol c) const {
  auto it = arc_index_.find(pair_key(v, c));
  return it == arc_index_.end() ? -1 : it->second;
}

int Cdawg::find_node(const Interval& iv) const {
  auto it = node_index_.find(pair_key(iv.sp, iv.ep));
  return it == node_index_.end() ? -1 : it->second;
}

const CdawgBoundary* Cdawg::boundary_at(int v, pos_t d) const {
  const auto& blocks = node(v).boundaries;
  auto it = std::upper_bound(blocks.begin(), blocks.end(), d,
                             [](pos_t x, const CdawgBoundary& b) { return x < b.min_depth; });
  if (it == blocks.begin()) return nullptr;
  --it;
  return d <= it->max_depth ? &*it : nullptr;
}

std::vector<std::pair<pos_t, pos_t>> Cdawg::dfs_reachable_sink_arcs(int v, pos_t j, std::size_t* visited) const {
  std::vector<std::pair<pos_t, pos_t>> out;
  std::vector<std::pair<int, pos_t>> stack{{v, j}};
  while (!stack.empty()) {
    auto [u, offset] = stack.back();
    stack.pop_back();
    for (const auto& arc : out_arcs(u)) {
      if (visited != nullptr) ++*visited;
      if (arc.target == sink()) {
        out.emplace_back(arc.pos, offset);
      } else {
        stack.emplace_back(arc.target, offset + arc.left);
      }
    }
  }
  return out;
}

void Cdawg::save(ByteWriter& w) const {
  w.put(n_);
  w.put(nodes_.size());
  for (const auto& v : nodes_) {
    w.put(v.length);
    w.put(v.size);
    w.put(v.first);
    w.put(v.last);
    w.put(v.suffix_link);
    w.put(v.rev_interval.sp);
    w.put(v.rev_interval.ep);
    w.put(v.arc_begin);
    w.put(v.arc_end);
    w.put(v.weiner_links.size());
    for (auto [c, target] : v.weiner_links) {
      w.put(c);
      w.put(target);
    }
  }
  w.put(arcs_.size());
  for (const auto& a : arcs_) {
    w.put(a.source);
    w.put(a.target);
    w.put(a.c);
    w.put(a.right);
    w.put(a.left);
    w.put(a.pos);
    w.put(a.child_delta_start);
    w.put(a.child_width);
  }
}

Cdawg Cdawg::load(ByteReader& r) {
  Cdawg g;
  g.n_ = r.get();
  auto node_count = r.get();
  if (node_count < 1 || static_cast<std::uint64_t>(node_count) > r.remaining() / 80) throw DataError("corrupt node table");
  g.nodes_.resize(static_cast<std::size_t>(node_count));
  for (auto& v : g.nodes_) {
    v.length = r.get();
    v.size = r.get();
    v.first = r.get();
    v.last = r.get();
    v.suffix_link = static_cast<int>(r.get());
    v.rev_interval.sp = r.get();
    v.rev_interval.ep = r.get();
    v.arc_begin = static_cast<int>(r.get());
    v.arc_end = static_cast<int>(r.get());
    auto links = r.get();
    if (links < 0 || links > 256) throw DataError("corrupt link table");
    for (std::int64_t k = 0; k < links; ++k) {
      auto c = static_cast<Symbol>(r.get());
      auto target = static_cast<int>(r.get());
      if (target < 0 || target >= node_count) throw DataError("link target out of range");
      v.weiner_links.emplace_back(c, target);
    }
  }
  auto arc_count = r.get();
  if (arc_count < 0 || static_cast<std::uint64_t>(arc_count) > r.remaining() / 64) throw DataError("corrupt arc table");
  g.arcs_.resize(static_cast<std::size_t>(arc_count));
  for (auto& a : g.arcs_) {
    a.source = static_cast<int>(r.get());
    a.target = static_cast<int>(r.get());
    a.c = static_cast<Symbol>(r.get());
    a.right = r.get();
    a.left = r.get();
    a.pos = r.get();
    a.child_delta_start = r.get();
    a.child_width = r.get();
    if (a.source < 0 || a.source >= node_count || a.target < 0 || a.target >= node_count) {
      throw DataError("arc endpoint out of range");
    }
  }
  for (const auto& v : g.nodes_) {
    if (v.arc_begin < 0 || v.arc_begin > v.arc_end || v.arc_end > arc_count) throw DataError("corrupt arc range");
  }
  g.index();
  try {
    g.compute_boundaries();
  } catch (const std::logic_error& e) {
    throw DataError(std::string("corrupt graph: ") + e.what());
  }
  return g;
}

}  // namespace crads
