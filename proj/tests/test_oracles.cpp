#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "corpus.hpp"
#include "crads/oracles.hpp"

using namespace crads;
using corpus::sym;
using corpus::text;

namespace {


// Right-maximal substrings of the payload, ε included, by direct enumeration.
std::set<std::vector<Symbol>> right_maximal_set(const Text& t) {
  std::set<std::vector<Symbol>> out{{}};
  const pos_t n = t.size();
  for (pos_t len = 1; len < n; ++len) {
    std::map<std::vector<Symbol>, std::set<Symbol>> follow;
    for (pos_t s = 1; s + len - 1 <= n - 1; ++s) {
      std::vector<Symbol> w(t.symbols().begin() + (s - 1), t.symbols().begin() + (s - 1 + len));
      follow[w].insert(t[s + len]);
    }
    for (const auto& [w, f] : follow) {
      if (f.size() > 1) out.insert(w);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("suffix array of small texts") {
    auto b = build_suffix_array_bundle(text("0000"));
    CHECK(std::vector<pos_t>(b.sa.begin() + 1, b.sa.end()) == std::vector<pos_t>{5, 4, 3, 2, 1});
    CHECK(std::vector<pos_t>(b.lcp.begin() + 1, b.lcp.end()) == std::vector<pos_t>{0, 0, 1, 2, 3});

    Text single(std::vector<Symbol>{0}, SymbolMap());
    auto s = build_suffix_array_bundle(single);
    CHECK(s.size() == 1);
    CHECK(s.sa[1] == 1);
  }

  TEST_CASE("suffix array sorted pairwise with exact LCP on random texts") {
    for (const auto& t : corpus::random_texts(21, 30, 2, 512)) {
      auto b = build_suffix_array_bundle(t);
      const pos_t n = t.size();
      auto suffix = [&](pos_t p) { return std::vector<Symbol>(t.symbols().begin() + (p - 1), t.symbols().end()); };
      for (pos_t i = 2; i <= n; ++i) {
        auto a = suffix(b.sa[static_cast<std::size_t>(i - 1)]), c = suffix(b.sa[static_cast<std::size_t>(i)]);
        REQUIRE(a < c);
        pos_t l = 0;
        while (l < static_cast<pos_t>(std::min(a.size(), c.size())) && a[static_cast<std::size_t>(l)] == c[static_cast<std::size_t>(l)]) ++l;
        REQUIRE(b.lcp[static_cast<std::size_t>(i)] == l);
      }
      for (pos_t p = 1; p <= n; ++p) REQUIRE(b.sa[static_cast<std::size_t>(b.isa[static_cast<std::size_t>(p)])] == p);
    }
  }

  TEST_CASE("bwt rows") {
    Text z = text("0000");
    CHECK(bwt_from_suffix_array(z, build_suffix_array_bundle(z)) == std::vector<Symbol>{1, 1, 1, 1, 0});
    Text b = text("banana");
    auto bwt = bwt_from_suffix_array(b, build_suffix_array_bundle(b));
    CHECK(b.decode(bwt) == "annb$aa");
    Text db = text(corpus::de_bruijn(3));
    CHECK(db.size() == 11);
    CHECK(count_runs(bwt_from_suffix_array(db, build_suffix_array_bundle(db))) >= 8);
  }

  TEST_CASE("suffix tree internal nodes are the right-maximal substrings") {
    Text z = text("0000");
    OracleSuffixTree st(z, build_suffix_array_bundle(z));
    CHECK(st.internal_count() == 4);
    std::set<std::vector<Symbol>> labels;
    for (int id = 0; id < static_cast<int>(st.nodes().size()); ++id) {
      if (!st.node(id).leaf) labels.insert(st.label(id));
    }
    CHECK(labels == std::set<std::vector<Symbol>>{{}, {1}, {1, 1}, {1, 1, 1}});

    Text b = text("banana");
    OracleSuffixTree bt(b, build_suffix_array_bundle(b));
    CHECK(bt.internal_count() == 4);

    Text d = text("abcdefg");
    OracleSuffixTree dt(d, build_suffix_array_bundle(d));
    CHECK(dt.internal_count() == 1);
    CHECK(dt.node(dt.root()).children.size() == 8);

    auto texts = corpus::random_texts(22, 60, 2, 120);
    for (const auto& s : corpus::structured_texts()) texts.push_back(s);
    for (const auto& t : texts) {
      auto bundle = build_suffix_array_bundle(t);
      OracleSuffixTree tree(t, bundle);
      std::set<std::vector<Symbol>> got;
      for (int id = 0; id < static_cast<int>(tree.nodes().size()); ++id) {
        const auto& v = tree.node(id);
        if (v.leaf) {
          REQUIRE(v.depth == t.size() - v.leaf_position + 1);
          continue;
        }
        got.insert(tree.label(id));
        // Children tile the parent interval in order.
        pos_t expect = v.sp;
        Symbol prev = 0;
        bool first = true;
        for (int c : v.children) {
          REQUIRE(tree.node(c).sp == expect);
          expect = tree.node(c).ep + 1;
          Symbol e = tree.edge_symbol(c);
          if (!first) REQUIRE(prev < e);
          prev = e;
          first = false;
        }
        REQUIRE(expect == v.ep + 1);
        if (v.depth > 0) {
          auto l = tree.label(id);
          REQUIRE(tree.label(v.suffix_link) == std::vector<Symbol>(l.begin() + 1, l.end()));
        }
      }
      REQUIRE(got == right_maximal_set(t));
    }
  }

  TEST_CASE("Weiner links of 0000") {
    Text z = text("0000");
    auto b = build_suffix_array_bundle(z);
    OracleSuffixTree st(z, b);
    auto links = enumerate_weiner_links(st, z, b);
    int n00 = st.find_internal({3, 5});
    int n000 = st.find_internal({4, 5});
    REQUIRE(n00 >= 0);
    REQUIRE(st.node(n00).depth == 2);
    CHECK(links.explicit_links.count({n00, Symbol{1}, n000}) == 1);
    CHECK(links.implicit_links.count({n00, Symbol{0}}) == 1);

    // Every depth-1 internal node is an explicit link target of the root.
    for (const auto& t : corpus::random_texts(23, 20, 2, 60)) {
      auto bb = build_suffix_array_bundle(t);
      OracleSuffixTree tree(t, bb);
      auto l = enumerate_weiner_links(tree, t, bb);
      for (int c : tree.node(tree.root()).children) {
        if (!tree.node(c).leaf && tree.node(c).depth == 1) {
          CHECK(l.explicit_links.count({tree.root(), tree.edge_symbol(c), c}) == 1);
        }
      }
    }
  }

  TEST_CASE("naive occurrences and matching statistics") {
    Text b = text("banana");
    CHECK(naive_occurrences(b, sym(b, "an")) == std::vector<pos_t>{2, 4});
    CHECK(naive_occurrences(b, {}) == std::vector<pos_t>{1, 2, 3, 4, 5, 6, 7});
    CHECK(naive_occurrences(b, std::vector<Symbol>{3, 3}).empty());
    CHECK(naive_matching_statistics(b, sym(b, "nan")) == std::vector<pos_t>{3, 2, 1});
    CHECK(naive_matching_statistics(b, sym(b, "anana")) == std::vector<pos_t>{5, 4, 3, 2, 1});
    CHECK(naive_matching_statistics(b, std::vector<Symbol>{4, 4}) == std::vector<pos_t>{0, 0});
  }

  TEST_CASE("maximal repeats, root counted") {
    Text f = text("010010001");
    auto reps = naive_maximal_repeats(f);
    std::set<std::string> got;
    for (const auto& w : reps) got.insert(f.decode(w));
    CHECK(got == std::set<std::string>{"", "0", "00", "01", "001", "0100"});

    Text z = text("0000");
    std::set<std::string> zs;
    for (const auto& w : naive_maximal_repeats(z)) zs.insert(z.decode(w));
    CHECK(zs == std::set<std::string>{"", "0", "00", "000"});

    Text d = text("abcdefg");
    auto ds = naive_maximal_repeats(d);
    REQUIRE(ds.size() == 1);
    CHECK(ds.front().empty());
  }

  TEST_CASE("brute-force measures") {
    auto m = naive_measures(text("0000"));
    CHECK(m.r == 2);
    CHECK(m.z == 3);
    CHECK(m.n_maximal_repeats == 4);
    CHECK(m.e == 8);
    CHECK(m.e_explicit == 3);
    CHECK(m.f_implicit == 5);

    auto f = naive_measures(text("010010001"));
    CHECK(f.z == 6);
    CHECK(f.n_maximal_repeats == 6);

    auto v = naive_measures(text(corpus::zero_one_family(3, true)));
    CHECK(v.r == 8);
    CHECK(naive_measures(text(corpus::zero_one_family(3))).r == 6);

    Text single(std::vector<Symbol>{0}, SymbolMap());
    auto s = naive_measures(single);
    CHECK(s.n_maximal_repeats == 1);
    CHECK(s.e == 1);
    CHECK(s.r == 1);
    CHECK(s.z == 1);
  }

  TEST_CASE("tree measures agree with enumeration") {
    auto texts = corpus::random_texts(24, 80, 2, 120);
    for (const auto& s : corpus::structured_texts()) texts.push_back(s);
    for (const auto& t : texts) REQUIRE(tree_measures(t) == naive_measures(t));
  }

  TEST_CASE("measure chain properties") {
    auto texts = corpus::random_texts(25, 80, 2, 120);
    for (const auto& s : corpus::structured_texts()) texts.push_back(s);
    for (const auto& t : texts) {
      BruteForceRepeats brute(t);
      auto m = naive_measures(t);
      REQUIRE(brute.run_lower_bound() <= m.r);
      REQUIRE(m.r <= m.f_implicit);
      REQUIRE(m.z <= m.e);
      auto [ex, im] = weiner_link_classes_of_reverse(t);
      REQUIRE(ex == m.e_explicit);
      REQUIRE(im == m.f_implicit);
    }
  }
}
