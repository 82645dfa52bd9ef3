#include "crads/lz77.hpp"
#include "crads/oracles.hpp"

namespace crads {

namespace {

struct SideMeasures {
  pos_t maximal = 0;
  pos_t e_explicit = 0;
  pos_t f_implicit = 0;
  pos_t r = 0;
  pos_t z = 0;
};

SideMeasures side_measures(const Text& t) {
  auto b = build_suffix_array_bundle(t);
  OracleSuffixTree st(t, b);
  auto bwt = bwt_from_suffix_array(t, b);
  std::vector<pos_t> changes(bwt.size() + 1, 0);
  for (std::size_t i = 2; i <= bwt.size(); ++i) changes[i] = changes[i - 1] + (bwt[i - 1] != bwt[i - 2] ? 1 : 0);
  auto maximal = [&](int id) {
    const auto& v = st.node(id);
    if (v.leaf) return false;
    return id == st.root() || changes[static_cast<std::size_t>(v.ep)] != changes[static_cast<std::size_t>(v.sp)];
  };
  SideMeasures m;
  for (int id = 0; id < static_cast<int>(st.nodes().size()); ++id) {
    if (!maximal(id)) continue;
    ++m.maximal;
    for (int child : st.node(id).children) (maximal(child) ? m.e_explicit : m.f_implicit) += 1;
  }
  m.r = count_runs(bwt);
  m.z = factorize(t, b).z();
  return m;
}

}  // namespace

MeasureReport tree_measures(const Text& t) {
  auto fwd = side_measures(t);
  auto rev = side_measures(reverse_text(t));
  MeasureReport m;
  m.n = t.size();
  m.sigma = t.sigma();
  m.n_maximal_repeats = fwd.maximal;
  m.e_explicit = fwd.e_explicit;
  m.f_implicit = fwd.f_implicit;
  m.e = fwd.e_explicit + fwd.f_implicit;
  m.e_left = rev.e_explicit + rev.f_implicit;
  m.r = fwd.r;
  m.r_rev = rev.r;
  m.z = fwd.z;
  m.z_rev = rev.z;
  return m;
}

}  // namespace crads
