#include <doctest.h>

#include "corpus.hpp"
#include "crads/oracles.hpp"
#include "crads/rlbwt.hpp"

using namespace crads;
using corpus::sym;
using corpus::text;

namespace {

RunLengthBwt rlbwt_of(const Text& t) {
  return RunLengthBwt(bwt_from_suffix_array(t, build_suffix_array_bundle(t)), t.sigma());
}

}  // namespace

TEST_SUITE("rlbwt") {
  TEST_CASE("runs") {
    RunLengthBwt z(std::vector<Symbol>{1, 1, 1, 1, 0}, 1);
    CHECK(z.runs() == std::vector<RunLengthBwt::Run>{{1, 1, 4}, {0, 5, 5}});
    CHECK(z.run_count() == 2);
    RunLengthBwt d(std::vector<Symbol>{3, 1, 2, 0, 4}, 4);
    CHECK(d.run_count() == 5);
    Text b = text("banana");
    CHECK(rlbwt_of(b).run_count() == 5);
  }

  TEST_CASE("rank, select and access on small inputs") {
    RunLengthBwt z(std::vector<Symbol>{1, 1, 1, 1, 0}, 1);
    CHECK(z.rank(1, 0) == 0);
    CHECK(z.rank(1, 3) == 3);
    CHECK(z.char_at(1) == 1);
    CHECK(z.char_at(4) == 1);
    CHECK(z.char_at(5) == 0);
    RunLengthBwt one(std::vector<Symbol>{2, 2, 2}, 2);
    CHECK(one.char_at(1) == 2);

    Text b = text("banana");
    auto x = rlbwt_of(b);
    CHECK(x.select(1, 3) == 7);
    CHECK_THROWS_AS(x.select(1, 4), std::out_of_range);
    CHECK_THROWS_AS(x.select(1, 0), std::out_of_range);
  }

  TEST_CASE("exhaustive agreement with the plain BWT") {
    for (const auto& t : corpus::random_texts(31, 100, 2, 512, {1, 2, 3, 4, 8})) {
      auto bwt = bwt_from_suffix_array(t, build_suffix_array_bundle(t));
      RunLengthBwt x(bwt, t.sigma());
      REQUIRE(x.run_count() == count_runs(bwt));
      pos_t covered = 0;
      for (std::size_t k = 0; k < x.runs().size(); ++k) {
        const auto& r = x.runs()[k];
        REQUIRE(r.sp == covered + 1);
        covered = r.ep;
        if (k > 0) REQUIRE(x.runs()[k - 1].c != r.c);
      }
      REQUIRE(covered == t.size());
      for (int c = 0; c <= t.sigma(); ++c) {
        pos_t count = 0;
        for (pos_t i = 1; i <= t.size(); ++i) {
          bool hit = bwt[static_cast<std::size_t>(i - 1)] == c;
          count += hit ? 1 : 0;
          REQUIRE(x.rank(static_cast<Symbol>(c), i) == count);
          if (hit) REQUIRE(x.select(static_cast<Symbol>(c), count) == i);
        }
        REQUIRE(x.C(static_cast<Symbol>(c) + 1) - x.C(static_cast<Symbol>(c)) == count);
      }
      for (pos_t i = 1; i <= t.size(); ++i) REQUIRE(x.char_at(i) == bwt[static_cast<std::size_t>(i - 1)]);
    }
  }

  TEST_CASE("LF is a permutation inverted by psi") {
    for (const auto& t : corpus::random_texts(32, 100, 2, 300)) {
      auto x = rlbwt_of(t);
      std::vector<bool> seen(static_cast<std::size_t>(t.size()) + 1, false);
      for (pos_t p = 1; p <= t.size(); ++p) {
        pos_t q = x.lf(p);
        REQUIRE(q >= 1);
        REQUIRE(q <= t.size());
        REQUIRE_FALSE(seen[static_cast<std::size_t>(q)]);
        seen[static_cast<std::size_t>(q)] = true;
        REQUIRE(x.psi(q) == p);
        REQUIRE(x.lf(x.psi(p)) == p);
      }
    }
  }

  TEST_CASE("backward search and counting") {
    Text b = text("banana");
    auto x = rlbwt_of(b);
    CHECK(x.backward_step(x.full(), 3).width() == 2);
    CHECK(x.interval_of(sym(b, "an")).width() == 2);
    auto bundle = build_suffix_array_bundle(b);
    Interval an = x.interval_of(sym(b, "an"));
    for (pos_t r = an.sp; r <= an.ep; ++r) {
      pos_t s = bundle.sa[static_cast<std::size_t>(r)];
      CHECK((s == 2 || s == 4));
    }
    CHECK(x.backward_step(x.full(), 4).empty());
    CHECK(x.count(sym(b, "an")) == 2);
    CHECK(x.count({}) == b.size());
    CHECK(x.count(sym(b, "nab")) == 0);

    std::mt19937_64 rng(33);
    for (const auto& t : corpus::random_texts(34, 50, 2, 200)) {
      auto rl = rlbwt_of(t);
      for (const auto& p : corpus::fuzz_patterns(rng, t, 20, 10)) {
        REQUIRE(rl.count(p) == static_cast<pos_t>(naive_occurrences(t, p).size()));
      }
    }
  }

  TEST_CASE("uniform symbol of an interval") {
    RunLengthBwt x(std::vector<Symbol>{1, 1, 2, 2, 2, 0}, 2);
    CHECK(x.uniform_symbol({1, 2}) == 1);
    CHECK(x.uniform_symbol({3, 5}) == 2);
    CHECK(x.uniform_symbol({2, 3}) == -1);
  }
}
