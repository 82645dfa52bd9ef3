#include <doctest.h>

#include <algorithm>
#include <deque>
#include <random>

#include "corpus.hpp"
#include "crads/cdawg_st.hpp"
#include "crads/oracles.hpp"
#include "st_checks.hpp"

using namespace crads;
using corpus::sym;
using corpus::text;

namespace {

using stcheck::Pair;

void check_all(const Pair& x) { REQUIRE(stcheck::check_suffix_tree(x) == ""); }

std::vector<Symbol> reversed(std::vector<Symbol> w) {
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

TEST_SUITE("cdawgst") {
  TEST_CASE("traversal sizes") {
    auto count = [](const Text& t) {
      CdawgSuffixTree st(t);
      int k = 0;
      st.traverse([&](const LightStNodeId&) { ++k; });
      return k;
    };
    CHECK(count(text("0000")) == 9);
    CHECK(count(text("banana")) == 11);
    CHECK(count(Text(std::vector<Symbol>{0}, SymbolMap())) == 2);
  }

  TEST_CASE("small trees") {
    Pair z(text("0000"));
    check_all(z);
    auto zz = z.st.child(z.st.root(), 1);
    REQUIRE(zz.has_value());
    CHECK(zz->depth == 1);
    CHECK(z.st.weiner_link(*zz, 1)->depth == 2);
    Pair b(text("banana"));
    check_all(b);
    Pair one(Text(std::vector<Symbol>{0}, SymbolMap()));
    check_all(one);
  }

  TEST_CASE("every operation against the oracle tree") {
    auto texts = corpus::random_texts(101, 120, 1, 90);
    for (const auto& s : corpus::structured_texts()) texts.push_back(s);
    for (const auto& t : texts) check_all(Pair(t));
  }

  TEST_CASE("matching statistics") {
    Text b = text("banana");
    CdawgSuffixTree bst(b);
    CHECK(bst.matching_statistics(sym(b, "nan")) == std::vector<pos_t>{3, 2, 1});
    std::mt19937_64 rng(102);
    for (const auto& t : corpus::random_texts(103, 80, 1, 120)) {
      CdawgSuffixTree st(t);
      for (int q = 0; q < 8; ++q) {
        std::uniform_int_distribution<int> len(0, 40), c(1, std::max(1, t.sigma()));
        std::vector<Symbol> s(static_cast<std::size_t>(len(rng)));
        for (auto& x : s) x = static_cast<Symbol>(c(rng));
        REQUIRE(st.matching_statistics(s) == naive_matching_statistics(t, s));
      }
    }
  }

  TEST_CASE("bidirectional extension") {
    std::mt19937_64 rng(104);
    for (const auto& t : corpus::random_texts(105, 60, 2, 120)) {
      CdawgSuffixTree st(t);
      for (int q = 0; q < 10; ++q) {
        std::uniform_int_distribution<pos_t> len(1, std::min<pos_t>(10, t.size() - 1));
        pos_t m = len(rng);
        std::uniform_int_distribution<pos_t> start(1, t.size() - m);
        pos_t s = start(rng);
        std::vector<Symbol> w(t.symbols().begin() + (s - 1), t.symbols().begin() + (s - 1 + m));
        std::uniform_int_distribution<pos_t> split(0, m);
        pos_t k = split(rng);
        auto state = st.empty_string_state();
        std::deque<Symbol> built;
        pos_t lo = k, hi = k;
        std::bernoulli_distribution left(0.5);
        while (lo > 0 || hi < m) {
          if (lo > 0 && (hi == m || left(rng))) {
            --lo;
            state = st.extend_left(state, w[static_cast<std::size_t>(lo)]);
          } else {
            state = st.extend_right(state, w[static_cast<std::size_t>(hi)]);
            ++hi;
          }
          std::vector<Symbol> cur(w.begin() + lo, w.begin() + hi);
          REQUIRE(state.length == hi - lo);
          REQUIRE(state.fwd == st.rlbwt().interval_of(cur));
          REQUIRE(state.rev == st.rlbwt_rev().interval_of(reversed(cur)));
          REQUIRE(state.fwd.width() == state.rev.width());
        }
        std::uniform_int_distribution<int> c(1, t.sigma());
        Symbol a = static_cast<Symbol>(c(rng)), z = static_cast<Symbol>(c(rng));
        auto lr = st.extend_right(st.extend_left(state, a), z);
        auto rl = st.extend_left(st.extend_right(state, z), a);
        REQUIRE(lr == rl);
        if (lr.empty()) REQUIRE(rl.rev.empty());
      }
    }
  }
}
