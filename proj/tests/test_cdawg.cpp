#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "corpus.hpp"
#include "crads/cdawg.hpp"
#include "crads/oracles.hpp"
#include "crads/rlbwt.hpp"

using namespace crads;
using corpus::sym;
using corpus::text;

namespace {

bool node_interval_contains(const CdawgNode& v, const Interval& iv) { return Interval{v.first, v.last}.contains(iv); }

struct Built {
  Text t;
  SuffixArrayBundle b;
  std::vector<Symbol> bwt;
  RunLengthBwt rl;
  OracleSuffixTree st;
  Cdawg g;
  explicit Built(const Text& x)
      : t(x), b(build_suffix_array_bundle(t)), bwt(bwt_from_suffix_array(t, b)), rl(bwt, t.sigma()), st(t, b), g(t, b, st) {}
};

Interval extend_uniformly(const RunLengthBwt& rl, Interval iv, pos_t steps) {
  for (pos_t k = 0; k < steps; ++k) {
    int c = rl.uniform_symbol(iv);
    REQUIRE(c >= 0);
    iv = rl.backward_step(iv, static_cast<Symbol>(c));
  }
  return iv;
}

// Oracle node holding the suffix of length d of the repeat of v.
int member_at_depth(const Built& x, int v, pos_t d) {
  const auto& node = x.g.node(v);
  pos_t start = x.b.sa[static_cast<std::size_t>(node.first)] + (node.length - d);
  int leaf = x.st.leaf_of_position(start);
  int id = x.st.ancestor_at_most(leaf, d);
  REQUIRE(x.st.node(id).depth == d);
  return id;
}

void check_structure(const Built& x) {
  const auto& g = x.g;
  const pos_t n = x.t.size();
  const int sink = g.sink();
  REQUIRE(g.node(0).length == 0);
  REQUIRE(g.node(0).first == 1);
  REQUIRE(g.node(0).last == n);
  REQUIRE(g.node(sink).length == n);
  REQUIRE(g.node(sink).size == n);
  REQUIRE(g.node(sink).first == x.b.isa[1]);

  pos_t members = 0;
  for (int v = 0; v < static_cast<int>(g.node_count()); ++v) {
    const auto& node = g.node(v);
    if (v != sink) {
      int id = x.st.find_internal({node.first, node.last});
      REQUIRE(id >= 0);
      REQUIRE(x.st.node(id).depth == node.length);
      REQUIRE((v == 0 || is_left_maximal(x.bwt, {node.first, node.last})));
      REQUIRE(g.find_node({node.first, node.last}) == v);
      members += node.size;
    }
    if (v != 0) {
      REQUIRE(g.node(node.suffix_link).length == node.min_depth() - 1);
    }
    for (auto [c, w] : node.weiner_links) {
      REQUIRE(g.node(w).suffix_link == v);
      REQUIRE(g.node(w).min_depth() == node.length + 1);
      REQUIRE(x.rl.backward_step({node.first, node.last}, c).width() == g.node(w).width());
    }

    Symbol prev = 0;
    bool first_arc = true;
    for (const auto& arc : g.out_arcs(v)) {
      REQUIRE(arc.source == v);
      REQUIRE((first_arc || arc.c > prev));
      first_arc = false;
      prev = arc.c;
      const auto& target = g.node(arc.target);
      REQUIRE(arc.right >= 1);
      REQUIRE(node.length + arc.right + arc.left == target.length);
      Interval child{node.first + arc.child_delta_start, node.first + arc.child_delta_start + arc.child_width - 1};
      REQUIRE(node_interval_contains(node, child));
      REQUIRE(x.t[x.b.sa[static_cast<std::size_t>(child.sp)] + node.length] == arc.c);
      REQUIRE(extend_uniformly(x.rl, child, arc.left) == Interval{target.first, target.last});
      if (arc.target == sink) {
        REQUIRE(child.width() == 1);
        REQUIRE(arc.pos == x.b.sa[static_cast<std::size_t>(child.sp)]);
      } else {
        int id = x.st.find_internal(child);
        REQUIRE(id >= 0);
        REQUIRE(x.st.node(id).depth == node.length + arc.right);
      }
    }
  }
  REQUIRE(members == static_cast<pos_t>(x.st.internal_count()));
}

}  // namespace



TEST_SUITE("cdawg") {
  TEST_CASE("0000") {
    Built x(text("0000"));
    CHECK(x.g.node_count() == 5);
    CHECK(x.g.arc_count() == 8);
    check_structure(x);
    const auto& last = x.g.node(3);
    CHECK(last.length == 3);
    int a = x.g.find_arc(3, 1);
    REQUIRE(a >= 0);
    CHECK(x.g.arc(a).target == x.g.sink());
    CHECK(x.g.arc(a).right == 2);
    CHECK(x.g.arc(a).pos == 1);
  }

  TEST_CASE("small shapes") {
    Built b(text("banana"));
    check_structure(b);
    int ana = b.g.find_node(b.rl.interval_of(sym(b.t, "ana")));
    REQUIRE(ana > 0);
    CHECK(b.g.node(ana).size == 2);
    CHECK(b.g.node(ana).min_depth() == 2);
    CHECK(b.g.find_node(b.rl.interval_of(sym(b.t, "na"))) == -1);

    Built one(text("0"));
    CHECK(one.g.node_count() == 2);
    CHECK(one.g.arc_count() == 2);
    check_structure(one);

    Built term(Text(std::vector<Symbol>{0}, SymbolMap()));
    CHECK(term.g.node_count() == 2);
    CHECK(term.g.arc_count() == 1);
  }

  TEST_CASE("Fibonacci string") {
    Built f(text(corpus::fibonacci(13)));
    REQUIRE(f.t.size() == 234);
    auto m = naive_measures(f.t);
    CHECK(static_cast<pos_t>(f.g.node_count()) == m.n_maximal_repeats + 1);
    CHECK(f.g.node_count() == 16);
    CHECK(f.g.arc_count() >= std::log2(234.0) / 2);
  }

  TEST_CASE("sizes equal maximal repeats and right extensions") {
    auto texts = corpus::random_texts(71, 120, 1, 90);
    for (const auto& s : corpus::structured_texts()) texts.push_back(s);
    for (const auto& t : texts) {
      Built x(t);
      auto m = naive_measures(t);
      CHECK(static_cast<pos_t>(x.g.node_count()) == m.n_maximal_repeats + 1);
      CHECK(static_cast<pos_t>(x.g.arc_count()) == m.e);
      if (t.size() > 1) CHECK(static_cast<double>(x.g.arc_count()) >= std::log2(static_cast<double>(t.size())) / 2);
      check_structure(x);
    }
  }

  TEST_CASE("in-arc blocks name the tree parent") {
    auto texts = corpus::random_texts(72, 60, 2, 120);
    for (const auto& s : corpus::structured_texts()) texts.push_back(s);
    for (const auto& t : texts) {
      Built x(t);
      const auto& g = x.g;
      for (int v = 1; v < g.sink(); ++v) {
        const auto& node = g.node(v);
        CHECK(g.boundary_at(v, node.min_depth() - 1) == nullptr);
        CHECK(g.boundary_at(v, node.length + 1) == nullptr);
        for (pos_t d = node.min_depth(); d <= node.length; ++d) {
          const auto* block = g.boundary_at(v, d);
          REQUIRE(block != nullptr);
          const auto& arc = g.arc(block->arc);
          REQUIRE(arc.target == v);
          int id = member_at_depth(x, v, d);
          int parent = x.st.node(id).parent;
          const auto& u = g.node(arc.source);
          REQUIRE(x.st.node(parent).depth == d - arc.right);
          Interval piv{x.st.node(parent).sp, x.st.node(parent).ep};
          REQUIRE(extend_uniformly(x.rl, piv, u.length - x.st.node(parent).depth) == Interval{u.first, u.last});
        }
      }
      for (pos_t d = 1; d <= t.size(); ++d) {
        const auto* block = g.boundary_at(g.sink(), d);
        REQUIRE(block != nullptr);
        int leaf = x.st.leaf_of_position(t.size() - d + 1);
        REQUIRE(x.st.node(x.st.node(leaf).parent).depth == d - g.arc(block->arc).right);
      }
    }
  }

  TEST_CASE("reachable sink arcs enumerate occurrences") {
    auto texts = corpus::random_texts(73, 60, 1, 100);
    for (const auto& s : corpus::structured_texts()) texts.push_back(s);
    for (const auto& t : texts) {
      Built x(t);
      for (int v = 0; v < x.g.sink(); ++v) {
        const auto& node = x.g.node(v);
        std::size_t visited = 0;
        std::vector<pos_t> got;
        for (auto [pos, j] : x.g.dfs_reachable_sink_arcs(v, 1, &visited)) got.push_back(pos + j - 1);
        std::sort(got.begin(), got.end());
        auto expect = naive_occurrences(t, x.st.label(x.st.find_internal({node.first, node.last})));
        REQUIRE(got == expect);
        REQUIRE(visited <= 2 * got.size());
      }
    }
  }
}
