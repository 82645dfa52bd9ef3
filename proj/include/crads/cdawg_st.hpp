#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "crads/cdawg.hpp"
#include "crads/rlbwt.hpp"

namespace crads {

class IndexFile;

/// Suffix-tree node: the graph node of its class, its string depth, and its BWT interval.
/// A leaf is (sink, n - start + 1, [row..row]).
struct StNodeId {
  int node = 0;
  pos_t depth = 0;
  pos_t sp = 1;
  pos_t ep = 0;
  friend bool operator==(const StNodeId&, const StNodeId&) = default;
};

/// The same handle without the interval.
struct LightStNodeId {
  int node = 0;
  pos_t depth = 0;
  friend bool operator==(const LightStNodeId&, const LightStNodeId&) = default;
};

/// Intervals of W in BWT_T and of rev(W) in BWT_rev.
struct BidirectionalState {
  Interval fwd;
  Interval rev;
  pos_t length = 0;

  bool empty() const { return fwd.empty(); }
  friend bool operator==(const BidirectionalState&, const BidirectionalState&) = default;
};

/// Suffix tree of T represented by CDAWG_T, RLBWT_T and RLBWT_rev(T).
/// Navigation returns std::nullopt where the tree has no such node.
class CdawgSuffixTree {
 public:
  CdawgSuffixTree() = default;
  explicit CdawgSuffixTree(const Text& t);
  CdawgSuffixTree(RunLengthBwt fwd, RunLengthBwt rev, Cdawg g);

  const Cdawg& cdawg() const { return cdawg_; }
  const RunLengthBwt& rlbwt() const { return fwd_; }
  const RunLengthBwt& rlbwt_rev() const { return rev_; }
  pos_t text_size() const { return fwd_.size(); }

  StNodeId root() const { return {cdawg_.source(), 0, 1, fwd_.size()}; }
  pos_t string_depth(const StNodeId& v) const { return v.depth; }
  pos_t n_leaves(const StNodeId& v) const { return v.ep - v.sp + 1; }
  bool is_leaf(const StNodeId& v) const { return v.node == cdawg_.sink(); }
  /// Start of the suffix of a leaf; throws std::invalid_argument on an internal node.
  pos_t locate_leaf(const StNodeId& v) const;
  bool is_ancestor(const StNodeId& u, const StNodeId& v) const;

  std::optional<StNodeId> child(const StNodeId& v, Symbol c) const;
  std::optional<StNodeId> first_child(const StNodeId& v) const;
  std::optional<StNodeId> parent(const StNodeId& v) const;
  std::optional<StNodeId> next_sibling(const StNodeId& v) const;
  /// Throws std::invalid_argument on the root.
  StNodeId suffix_link(const StNodeId& v) const;
  /// Locus of c·label(v), or nullopt when c·label(v) does not occur.
  std::optional<StNodeId> weiner_link(const StNodeId& v, Symbol c) const;
  /// t-th symbol of the edge entering v; throws std::out_of_range outside [1..edge length].
  Symbol edge_char(const StNodeId& v, pos_t t) const;

  LightStNodeId light(const StNodeId& v) const { return {v.node, v.depth}; }
  LightStNodeId light_root() const { return {cdawg_.source(), 0}; }
  std::optional<LightStNodeId> child(const LightStNodeId& v, Symbol c) const;
  std::optional<LightStNodeId> first_child(const LightStNodeId& v) const;
  std::optional<LightStNodeId> parent(const LightStNodeId& v) const;
  std::optional<LightStNodeId> next_sibling(const LightStNodeId& v) const;
  LightStNodeId suffix_link(const LightStNodeId& v) const;

  /// Preorder over every node, internal and leaf, keeping only the current handle.
  void traverse(const std::function<void(const LightStNodeId&)>& visit) const;

  std::vector<pos_t> matching_statistics(std::span<const Symbol> s) const;

  BidirectionalState empty_string_state() const { return {fwd_.full(), rev_.full(), 0}; }
  BidirectionalState extend_left(const BidirectionalState& st, Symbol c) const;
  BidirectionalState extend_right(const BidirectionalState& st, Symbol c) const;

  void save(IndexFile& f) const;
  static CdawgSuffixTree load(const IndexFile& f);

  friend bool operator==(const CdawgSuffixTree&, const CdawgSuffixTree&) = default;

 private:
  struct EdgeCursor {
    int arc = -1;
    pos_t offset = 0;  // edge symbols already consumed into rv
    Interval rv;
  };

  StNodeId child_by_arc(const StNodeId& v, int arc) const;
  /// Arc entering the node, or -1 for the root.
  int entering_arc(int node, pos_t depth) const;
  Symbol read_edge(int arc, pos_t t, EdgeCursor& cursor) const;
  static BidirectionalState extend(const RunLengthBwt& a, const BidirectionalState& st, Symbol c);

  RunLengthBwt fwd_;
  RunLengthBwt rev_;
  Cdawg cdawg_;
};

}  // namespace crads
