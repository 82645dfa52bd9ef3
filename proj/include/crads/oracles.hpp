#pragma once

// Desk-scale ground truth: suffix arrays, an explicit suffix tree, and brute-force
// reference answers that the compressed structures are checked against.

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "crads/rmq.hpp"
#include "crads/text.hpp"

namespace crads {

/// Suffix array, inverse, and LCP array. All three are 1-based: index 0 is unused.
/// lcp[i] is the longest common prefix of the suffixes at rows i-1 and i; lcp[1] = 0.
struct SuffixArrayBundle {
  std::vector<pos_t> sa;
  std::vector<pos_t> isa;
  std::vector<pos_t> lcp;

  pos_t size() const { return static_cast<pos_t>(sa.size()) - 1; }
};

SuffixArrayBundle build_suffix_array_bundle(const Text& t);

/// BWT[i] = T[sa[i]-1], with T[0] read as T[n]. Returned 0-based (element i-1 is BWT[i]).
std::vector<Symbol> bwt_from_suffix_array(const Text& t, const SuffixArrayBundle& b);

/// Answers "interval of the maximal LCP run around a row" queries in O(log n).
class LcpIntervals {
 public:
  LcpIntervals() = default;
  explicit LcpIntervals(const SuffixArrayBundle& b);

  /// Interval of the length-`len` prefix of the suffix at `row`.
  Interval enclosing(pos_t row, pos_t len) const;
  /// Longest common prefix of the suffixes at rows a < b.
  pos_t lcp_between(pos_t a, pos_t b) const;

 private:
  pos_t n_ = 0;
  SparseTable<pos_t> min_lcp_;  // over lcp[1..n], 0-based storage
};

struct OracleNode {
  pos_t depth = 0;
  pos_t sp = 0;
  pos_t ep = 0;
  int parent = -1;
  std::vector<int> children;  // ordered by first edge symbol
  int suffix_link = -1;       // internal nodes of positive depth only
  bool leaf = false;
  pos_t leaf_position = 0;    // text position of the suffix, leaves only
};

/// Explicit suffix tree built from suffix-array intervals. Node 0 is the root.
class OracleSuffixTree {
 public:
  OracleSuffixTree() = default;
  OracleSuffixTree(const Text& t, const SuffixArrayBundle& b);

  int root() const { return 0; }
  const std::vector<OracleNode>& nodes() const { return nodes_; }
  const OracleNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }

  /// Internal node whose interval is exactly iv, or -1.
  int find_internal(const Interval& iv) const;
  int leaf_of_position(pos_t p) const { return leaf_of_pos_[static_cast<std::size_t>(p)]; }
  int leaf_of_row(pos_t row) const { return leaf_of_pos_[static_cast<std::size_t>(sa_[static_cast<std::size_t>(row)])]; }

  /// First symbol of the label of the edge entering `id`.
  Symbol edge_symbol(int id) const;
  /// Full path label of a node.
  std::vector<Symbol> label(int id) const;
  /// Deepest node on the root path of `id` whose depth is <= d.
  int ancestor_at_most(int id, pos_t d) const;

  std::size_t internal_count() const { return internal_count_; }

 private:
  const Text* text_ = nullptr;
  std::vector<OracleNode> nodes_;
  std::vector<pos_t> sa_;
  std::vector<int> leaf_of_pos_;
  std::unordered_map<std::uint64_t, int> by_interval_;
  std::size_t internal_count_ = 0;
};

struct WeinerLinkSets {
  std::set<std::tuple<int, Symbol, int>> explicit_links;  // (source, symbol, target)
  std::set<std::pair<int, Symbol>> implicit_links;        // (source, symbol)
};

/// Classifies every left extension aℓ(v) of every internal node v (a taken from the
/// circular text) as explicit (aℓ(v) is right-maximal) or implicit.
WeinerLinkSets enumerate_weiner_links(const OracleSuffixTree& st, const Text& t, const SuffixArrayBundle& b);

/// Interval [sp..ep] contains at least two distinct BWT symbols, i.e. the label is left-maximal.
bool is_left_maximal(std::span<const Symbol> bwt, const Interval& iv);

// ---- brute force -----------------------------------------------------------

std::vector<pos_t> naive_occurrences(const Text& t, std::span<const Symbol> p);

/// Maximal repeats over the circular text, the empty string included.
std::vector<std::vector<Symbol>> naive_maximal_repeats(const Text& t);

std::vector<pos_t> naive_matching_statistics(const Text& t, std::span<const Symbol> s);

/// Starting positions of the greedy LZ77 factors, by direct scanning.
std::vector<pos_t> naive_lz_starts(const Text& t);

struct MeasureReport {
  pos_t n = 0;
  int sigma = 0;
  pos_t n_maximal_repeats = 0;  // |M|, root counted
  pos_t e = 0;                  // |E^r| + |F^r|
  pos_t e_left = 0;             // same on the reverse text
  pos_t r = 0;
  pos_t r_rev = 0;
  pos_t z = 0;
  pos_t z_rev = 0;
  pos_t e_explicit = 0;         // |E^r|
  pos_t f_implicit = 0;         // |F^r|

  friend bool operator==(const MeasureReport&, const MeasureReport&) = default;
};

/// Substring statistics of a text, computed by enumeration. Intended for n up to a few hundred.
class BruteForceRepeats {
 public:
  explicit BruteForceRepeats(const Text& t);

  struct Entry {
    std::vector<Symbol> str;
    std::vector<pos_t> occurrences;  // linear starting positions
    std::vector<Symbol> left;        // distinct preceding symbols (circular), sorted
    std::vector<Symbol> right;       // distinct following symbols, sorted
  };

  /// Repeats (at least two occurrences) of the payload, the empty string included.
  const std::vector<Entry>& repeats() const { return repeats_; }
  std::vector<const Entry*> maximal_repeats() const;
  /// Maximal repeats W such that no WV, V nonempty, is left-maximal.
  std::vector<const Entry*> rightmost_maximal_repeats() const;

  /// Counts (|E^r|, |F^r|): right extensions of maximal repeats whose locus is / is not a maximal repeat.
  std::pair<pos_t, pos_t> extension_classes() const;

  /// Left-hand side of the run-count lower bound.
  pos_t run_lower_bound() const;

  const Entry* find(std::span<const Symbol> w) const;

 private:
  bool left_maximal(std::span<const Symbol> w) const;
  std::vector<Symbol> locus_of(std::vector<Symbol> w) const;

  const Text& text_;
  std::vector<Entry> repeats_;
  std::map<std::vector<Symbol>, std::size_t> index_;
};

pos_t count_runs(std::span<const Symbol> seq);

/// All measure fields computed by brute force on small texts.
MeasureReport naive_measures(const Text& t);

/// The same report computed through the oracle suffix trees of T and rev(T); scales to
/// texts of a few hundred thousand symbols.
MeasureReport tree_measures(const Text& t);

/// |E^r|, |F^r| via explicit/implicit Weiner links leaving maximal-repeat nodes of ST_rev(T).
std::pair<pos_t, pos_t> weiner_link_classes_of_reverse(const Text& t);

}  // namespace crads
