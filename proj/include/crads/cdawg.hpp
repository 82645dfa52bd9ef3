#pragma once

#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "crads/oracles.hpp"
#include "crads/text.hpp"

namespace crads {

class ByteWriter;
class ByteReader;

struct CdawgArc {
  int source = 0;
  int target = 0;
  Symbol c = 0;
  pos_t right = 0;
  pos_t left = 0;
  pos_t pos = 0;  // sink arcs: start of W·c in the text, W the source's maximal repeat
  pos_t child_delta_start = 0;
  pos_t child_width = 0;

  friend bool operator==(const CdawgArc&, const CdawgArc&) = default;
};

/// In-arc block of a node: members (or, for the sink, leaves) of string depth
/// [min_depth..max_depth] have their tree parent in the arc's source class.
struct CdawgBoundary {
  pos_t min_depth = 0;
  pos_t max_depth = 0;
  int arc = 0;

  friend bool operator==(const CdawgBoundary&, const CdawgBoundary&) = default;
};

struct CdawgNode {
  pos_t length = 0;  // length of the maximal repeat
  pos_t size = 0;    // number of suffix-tree nodes in the class
  pos_t first = 0;   // BWT interval of the maximal repeat
  pos_t last = 0;
  int suffix_link = -1;
  std::vector<std::pair<Symbol, int>> weiner_links;  // sorted by symbol
  Interval rev_interval;                              // of the reversed repeat in BWT_rev
  std::vector<CdawgBoundary> boundaries;              // sorted by depth
  int arc_begin = 0;                                  // out-arcs are arcs[arc_begin..arc_end), by symbol
  int arc_end = 0;

  pos_t min_depth() const { return length - size + 1; }
  pos_t width() const { return last - first + 1; }
  friend bool operator==(const CdawgNode&, const CdawgNode&) = default;
};

/// Compact directed acyclic word graph. Node 0 is the source (the empty repeat); the sink is last.
class Cdawg {
 public:
  Cdawg() = default;
  Cdawg(const Text& t, const SuffixArrayBundle& b, const OracleSuffixTree& st);
  explicit Cdawg(const Text& t);

  pos_t text_size() const { return n_; }
  int source() const { return 0; }
  int sink() const { return static_cast<int>(nodes_.size()) - 1; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<CdawgNode>& nodes() const { return nodes_; }
  const std::vector<CdawgArc>& arcs() const { return arcs_; }
  const CdawgNode& node(int v) const { return nodes_[static_cast<std::size_t>(v)]; }
  const CdawgArc& arc(int a) const { return arcs_[static_cast<std::size_t>(a)]; }
  std::span<const CdawgArc> out_arcs(int v) const;

  /// Arc leaving v whose label starts with c, or -1.
  int find_arc(int v, Symbol c) const;
  /// Node whose maximal repeat has BWT interval iv, or -1.
  int find_node(const Interval& iv) const;
  /// In-arc block of v covering string depth d, or nullptr.
  const CdawgBoundary* boundary_at(int v, pos_t d) const;

  /// (pos, j) for every sink arc reachable from v, with j accumulated from the given offset.
  std::vector<std::pair<pos_t, pos_t>> dfs_reachable_sink_arcs(int v, pos_t j, std::size_t* visited = nullptr) const;

  void save(ByteWriter& w) const;
  static Cdawg load(ByteReader& r);

  friend bool operator==(const Cdawg& a, const Cdawg& b) {
    return a.n_ == b.n_ && a.nodes_ == b.nodes_ && a.arcs_ == b.arcs_;
  }

 private:
  void index();
  void compute_boundaries();

  pos_t n_ = 0;
  std::vector<CdawgNode> nodes_;
  std::vector<CdawgArc> arcs_;
  std::unordered_map<std::uint64_t, int> arc_index_;
  std::unordered_map<std::uint64_t, int> node_index_;
};

}  // namespace crads
