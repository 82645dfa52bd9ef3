#include "crads/selftest.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "crads/cdawg_index.hpp"
#include "crads/cdawg_st.hpp"
#include "crads/lz_index.hpp"
#include "crads/oracles.hpp"

namespace crads {

Text random_text(std::mt19937_64& rng, pos_t n, int sigma) {
  static constexpr char kLetters[] = "ACGTBDEFHIJKLMNOPQRSUVWXYZ";
  const auto len = static_cast<std::size_t>(std::max<pos_t>(n - 1, 1));
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string s(len, 'A');
  for (auto& ch : s) ch = kLetters[pick(rng)];
  if (static_cast<std::size_t>(sigma) <= len) {
    std::vector<std::size_t> slots(len);
    for (std::size_t i = 0; i < len; ++i) slots[i] = i;
    std::shuffle(slots.begin(), slots.end(), rng);
    for (int c = 0; c < sigma; ++c) s[slots[static_cast<std::size_t>(c)]] = kLetters[c];
  }
  return ingest_plain(s);
}

namespace {

void check_case(const Text& t, std::mt19937_64& rng, const std::function<void(const std::string&)>& fail) {
  auto b = build_suffix_array_bundle(t);
  auto bwt = bwt_from_suffix_array(t, b);
  RunLengthBwt rl(bwt, t.sigma());
  bool rank_ok = true;
  for (int c = 0; c <= t.sigma() && rank_ok; ++c) {
    pos_t count = 0;
    for (pos_t i = 1; i <= t.size(); ++i) {
      count += bwt[static_cast<std::size_t>(i - 1)] == c ? 1 : 0;
      if (rl.rank(static_cast<Symbol>(c), i) != count) {
        rank_ok = false;
        break;
      }
    }
  }
  if (!rank_ok) fail("rlbwt rank differs from the plain BWT");

  LzRlbwtIndex lz(t);
  CdawgRlbwtIndex cd(t);
  CdawgSuffixTree st(t);
  std::uniform_int_distribution<pos_t> start(1, std::max<pos_t>(t.size() - 1, 1));
  std::uniform_int_distribution<pos_t> len(1, 8);
  for (int q = 0; q < 20; ++q) {
    pos_t s = start(rng), m = std::min(len(rng), t.size() - s);
    if (m < 1) continue;
    std::vector<Symbol> p(t.symbols().begin() + (s - 1), t.symbols().begin() + (s - 1 + m));
    auto expect = naive_occurrences(t, p);
    if (rl.count(p) != static_cast<pos_t>(expect.size())) fail("count mismatch");
    if (lz.locate(p).all() != expect) fail("lz-rlbwt locate mismatch");
    if (cd.locate(p) != expect) fail("cdawg locate mismatch");
    if (st.matching_statistics(p) != naive_matching_statistics(t, p)) fail("matching statistics mismatch");
  }
}

}  // namespace

int run_selftest(const SelftestOptions& opt, std::ostream& log) {
  int failures = 0;
  for (int it = 0; it < opt.iterations; ++it) {
    const std::uint64_t case_seed = opt.seed + static_cast<std::uint64_t>(it);
    std::mt19937_64 rng(case_seed);
    Text t = random_text(rng, opt.n, opt.sigma);
    auto fail = [&](const std::string& what) {
      ++failures;
      log << "FAIL seed=" << case_seed << " n=" << t.size() << " sigma=" << t.sigma() << ": " << what << '\n';
    };
    try {
      check_case(t, rng, fail);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
  }
  return failures;
}

}  // namespace crads
