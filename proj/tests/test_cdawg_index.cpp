#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "crads/cdawg_index.hpp"
#include "crads/oracles.hpp"

using namespace crads;
using corpus::sym;
using corpus::text;

namespace {

void check_pattern(const CdawgRlbwtIndex& idx, const Text& t, const std::vector<Symbol>& p) {
  auto expect = naive_occurrences(t, p);
  LocateStats stats;
  REQUIRE(idx.locate(p, &stats) == expect);
  REQUIRE(idx.count(p) == static_cast<pos_t>(expect.size()));
  REQUIRE(stats.search_arcs <= p.size());
  REQUIRE(stats.reporting_arcs <= 2 * expect.size());
}

}  // namespace

TEST_SUITE("cdawgindex") {
  TEST_CASE("small texts") {
    Text b = text("banana");
    CdawgRlbwtIndex bi(b);
    CHECK(bi.locate(sym(b, "an")) == std::vector<pos_t>{2, 4});
    CHECK(bi.locate(sym(b, "banana")) == std::vector<pos_t>{1});
    CHECK(bi.locate(sym(b, "nab")).empty());

    Text z = text("0000");
    CdawgRlbwtIndex zi(z);
    CHECK(zi.locate(sym(z, "0000")) == std::vector<pos_t>{1});
    CHECK(zi.locate(sym(z, "0")) == std::vector<pos_t>{1, 2, 3, 4});
  }

  TEST_CASE("locate matches brute force") {
    std::mt19937_64 rng(91);
    auto texts = corpus::random_texts(92, 150, 1, 160);
    for (const auto& s : corpus::structured_texts()) texts.push_back(s);
    for (const auto& t : texts) {
      CdawgRlbwtIndex idx(t);
      for (const auto& p : corpus::fuzz_patterns(rng, t, 25, 12)) check_pattern(idx, t, p);
    }
  }

  TEST_CASE("repetitive inputs") {
    std::mt19937_64 rng(93);
    std::string s;
    for (const auto& c : corpus::mutated_copies(94, 300, 6, 0.02)) s += c;
    Text t = text(s);
    CdawgRlbwtIndex idx(t);
    for (const auto& p : corpus::fuzz_patterns(rng, t, 200, 40)) check_pattern(idx, t, p);
  }
}
