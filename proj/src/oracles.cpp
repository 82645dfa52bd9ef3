#include "crads/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace crads {

namespace {

std::uint64_t interval_key(pos_t sp, pos_t ep) {
  return (static_cast<std::uint64_t>(sp) << 32) ^ static_cast<std::uint64_t>(ep);
}

}  // namespace

SuffixArrayBundle build_suffix_array_bundle(const Text& t) {
  const auto n = static_cast<std::size_t>(t.size());
  const auto text = t.symbols();
  std::vector<pos_t> sa(n), rank(n), next(n);
  std::iota(sa.begin(), sa.end(), 0);
  for (std::size_t i = 0; i < n; ++i) rank[i] = text[i];

  // Prefix doubling; the unique smallest terminator makes every suffix distinct.
  for (std::size_t k = 1;; k *= 2) {
    auto key = [&](pos_t i) {
      auto j = static_cast<std::size_t>(i) + k;
      return std::pair(rank[static_cast<std::size_t>(i)], j < n ? rank[j] : pos_t{-1});
    };
    std::sort(sa.begin(), sa.end(), [&](pos_t a, pos_t b) { return key(a) < key(b); });
    next[static_cast<std::size_t>(sa[0])] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      next[static_cast<std::size_t>(sa[i])] =
          next[static_cast<std::size_t>(sa[i - 1])] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    }
    rank.swap(next);
    if (rank[static_cast<std::size_t>(sa[n - 1])] == static_cast<pos_t>(n - 1)) break;
  }

  SuffixArrayBundle b;
  b.sa.assign(n + 1, 0);
  b.isa.assign(n + 1, 0);
  b.lcp.assign(n + 1, 0);
  for (std::size_t r = 0; r < n; ++r) {
    b.sa[r + 1] = sa[r] + 1;
    b.isa[static_cast<std::size_t>(sa[r]) + 1] = static_cast<pos_t>(r + 1);
  }
  // Kasai et al.
  pos_t h = 0;
  for (pos_t p = 1; p <= static_cast<pos_t>(n); ++p) {
    pos_t row = b.isa[static_cast<std::size_t>(p)];
    if (row > 1) {
      pos_t q = b.sa[static_cast<std::size_t>(row - 1)];
      while (p + h <= static_cast<pos_t>(n) && q + h <= static_cast<pos_t>(n) && t[p + h] == t[q + h]) ++h;
      b.lcp[static_cast<std::size_t>(row)] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  return b;
}

std::vector<Symbol> bwt_from_suffix_array(const Text& t, const SuffixArrayBundle& b) {
  const pos_t n = t.size();
  std::vector<Symbol> bwt(static_cast<std::size_t>(n));
  for (pos_t i = 1; i <= n; ++i) {
    pos_t p = b.sa[static_cast<std::size_t>(i)];
    bwt[static_cast<std::size_t>(i - 1)] = p == 1 ? t[n] : t[p - 1];
  }
  return bwt;
}

LcpIntervals::LcpIntervals(const SuffixArrayBundle& b)
    : n_(b.size()), min_lcp_(std::vector<pos_t>(b.lcp.begin() + 1, b.lcp.end())) {}

pos_t LcpIntervals::lcp_between(pos_t a, pos_t b) const {
  // min over lcp[a+1..b]; lcp[r] lives at storage index r-1.
  return min_lcp_.query(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

Interval LcpIntervals::enclosing(pos_t row, pos_t len) const {
  if (len == 0) return {1, n_};
  pos_t lo = 1, hi = row;  // smallest s with lcp_between(s, row) >= len
  while (lo < hi) {
    pos_t mid = lo + (hi - lo) / 2;
    if (lcp_between(mid, row) >= len) hi = mid; else lo = mid + 1;
  }
  pos_t sp = lo;
  lo = row, hi = n_;  // largest e with lcp_between(row, e) >= len
  while (lo < hi) {
    pos_t mid = lo + (hi - lo + 1) / 2;
    if (lcp_between(row, mid) >= len) lo = mid; else hi = mid - 1;
  }
  return {sp, lo};
}

OracleSuffixTree::OracleSuffixTree(const Text& t, const SuffixArrayBundle& b) : text_(&t), sa_(b.sa) {
  const pos_t n = t.size();
  leaf_of_pos_.assign(static_cast<std::size_t>(n) + 1, -1);
  auto make = [&](pos_t depth, pos_t sp, bool leaf) {
    OracleNode node;
    node.depth = depth;
    node.sp = sp;
    node.ep = leaf ? sp : 0;
    node.leaf = leaf;
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  };
  auto attach = [&](int parent, int child) {
    nodes_[static_cast<std::size_t>(parent)].children.push_back(child);
    nodes_[static_cast<std::size_t>(child)].parent = parent;
  };

  std::vector<int> stack{make(0, 1, false)};
  auto depth_of = [&](int id) { return nodes_[static_cast<std::size_t>(id)].depth; };
  for (pos_t i = 1; i <= n; ++i) {
    pos_t h = i == 1 ? 0 : b.lcp[static_cast<std::size_t>(i)];
    while (depth_of(stack.back()) > h) {
      int x = stack.back();
      stack.pop_back();
      if (!nodes_[static_cast<std::size_t>(x)].leaf) nodes_[static_cast<std::size_t>(x)].ep = i - 1;
      if (depth_of(stack.back()) >= h) {
        attach(stack.back(), x);
      } else {
        int v = make(h, nodes_[static_cast<std::size_t>(x)].sp, false);
        attach(v, x);
        stack.push_back(v);
        break;
      }
    }
    pos_t p = b.sa[static_cast<std::size_t>(i)];
    int leaf = make(n - p + 1, i, true);
    nodes_[static_cast<std::size_t>(leaf)].leaf_position = p;
    leaf_of_pos_[static_cast<std::size_t>(p)] = leaf;
    stack.push_back(leaf);
  }
  while (stack.size() > 1) {
    int x = stack.back();
    stack.pop_back();
    if (!nodes_[static_cast<std::size_t>(x)].leaf) nodes_[static_cast<std::size_t>(x)].ep = n;
    attach(stack.back(), x);
  }
  nodes_[0].ep = n;

  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const auto& v = nodes_[id];
    if (!v.leaf) {
      ++internal_count_;
      by_interval_.emplace(interval_key(v.sp, v.ep), static_cast<int>(id));
    }
  }

  LcpIntervals intervals(b);
  for (auto& v : nodes_) {
    if (v.leaf || v.depth == 0) continue;
    pos_t row = b.isa[static_cast<std::size_t>(b.sa[static_cast<std::size_t>(v.sp)] + 1)];
    Interval target = intervals.enclosing(row, v.depth - 1);
    v.suffix_link = find_internal(target);
  }
}

int OracleSuffixTree::find_internal(const Interval& iv) const {
  auto it = by_interval_.find(interval_key(iv.sp, iv.ep));
  return it == by_interval_.end() ? -1 : it->second;
}

Symbol OracleSuffixTree::edge_symbol(int id) const {
  const auto& v = node(id);
  const auto& parent = node(v.parent);
  return (*text_)[sa_[static_cast<std::size_t>(v.sp)] + parent.depth];
}

std::vector<Symbol> OracleSuffixTree::label(int id) const {
  const auto& v = node(id);
  pos_t start = sa_[static_cast<std::size_t>(v.sp)];
  auto all = text_->symbols();
  return {all.begin() + (start - 1), all.begin() + (start - 1 + v.depth)};
}

int OracleSuffixTree::ancestor_at_most(int id, pos_t d) const {
  while (node(id).depth > d) id = node(id).parent;
  return id;
}

bool is_left_maximal(std::span<const Symbol> bwt, const Interval& iv) {
  if (iv.empty()) return false;
  Symbol c = bwt[static_cast<std::size_t>(iv.sp - 1)];
  for (pos_t i = iv.sp + 1; i <= iv.ep; ++i) {
    if (bwt[static_cast<std::size_t>(i - 1)] != c) return true;
  }
  return false;
}

WeinerLinkSets enumerate_weiner_links(const OracleSuffixTree& st, const Text& t, const SuffixArrayBundle& b) {
  const pos_t n = t.size();
  const int sigma = t.sigma();
  const auto bwt = bwt_from_suffix_array(t, b);
  std::vector<std::vector<pos_t>> occ(static_cast<std::size_t>(sigma) + 1, std::vector<pos_t>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<pos_t> C(static_cast<std::size_t>(sigma) + 2, 0);
  for (pos_t i = 1; i <= n; ++i) {
    for (int c = 0; c <= sigma; ++c) occ[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] = occ[static_cast<std::size_t>(c)][static_cast<std::size_t>(i - 1)];
    ++occ[bwt[static_cast<std::size_t>(i - 1)]][static_cast<std::size_t>(i)];
    ++C[static_cast<std::size_t>(t[i]) + 1];
  }
  for (int c = 1; c <= sigma + 1; ++c) C[static_cast<std::size_t>(c)] += C[static_cast<std::size_t>(c - 1)];

  WeinerLinkSets out;
  for (int id = 0; id < static_cast<int>(st.nodes().size()); ++id) {
    const auto& v = st.node(id);
    if (v.leaf) continue;
    for (int c = 0; c <= sigma; ++c) {
      const auto& oc = occ[static_cast<std::size_t>(c)];
      pos_t before = oc[static_cast<std::size_t>(v.sp - 1)];
      pos_t upto = oc[static_cast<std::size_t>(v.ep)];
      if (upto == before) continue;
      Interval target{C[static_cast<std::size_t>(c)] + before + 1, C[static_cast<std::size_t>(c)] + upto};
      int w = st.find_internal(target);
      if (w >= 0 && st.node(w).depth == v.depth + 1) {
        out.explicit_links.emplace(id, static_cast<Symbol>(c), w);
      } else {
        out.implicit_links.emplace(id, static_cast<Symbol>(c));
      }
    }
  }
  return out;
}

std::vector<pos_t> naive_occurrences(const Text& t, std::span<const Symbol> p) {
  std::vector<pos_t> out;
  const pos_t n = t.size();
  const auto m = static_cast<pos_t>(p.size());
  for (pos_t s = 1; s + std::max<pos_t>(m, 1) - 1 <= n; ++s) {
    bool ok = true;
    for (pos_t k = 0; k < m && ok; ++k) ok = t[s + k] == p[static_cast<std::size_t>(k)];
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<pos_t> naive_matching_statistics(const Text& t, std::span<const Symbol> s) {
  const pos_t n = t.size();
  const auto m = static_cast<pos_t>(s.size());
  std::vector<pos_t> ms(static_cast<std::size_t>(m), 0);
  for (pos_t i = 0; i < m; ++i) {
    pos_t best = 0;
    for (pos_t start = 1; start <= n; ++start) {
      pos_t l = 0;
      while (i + l < m && start + l <= n && t[start + l] == s[static_cast<std::size_t>(i + l)]) ++l;
      best = std::max(best, l);
    }
    ms[static_cast<std::size_t>(i)] = best;
  }
  return ms;
}

std::vector<pos_t> naive_lz_starts(const Text& t) {
  const pos_t n = t.size();
  std::vector<pos_t> starts;
  for (pos_t p = 1; p <= n;) {
    pos_t best = 0;
    for (pos_t j = 1; j < p; ++j) {
      pos_t l = 0;
      while (p + l <= n && t[j + l] == t[p + l]) ++l;
      best = std::max(best, l);
    }
    starts.push_back(p);
    p += std::max<pos_t>(best, 1);
  }
  return starts;
}

pos_t count_runs(std::span<const Symbol> seq) {
  if (seq.empty()) return 0;
  pos_t runs = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) runs += seq[i] != seq[i - 1] ? 1 : 0;
  return runs;
}

// ---- BruteForceRepeats -----------------------------------------------------

BruteForceRepeats::BruteForceRepeats(const Text& t) : text_(t) {
  const pos_t n = t.size();
  auto sorted_unique = [](std::vector<Symbol> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  {
    Entry eps;
    std::vector<Symbol> all(t.symbols().begin(), t.symbols().end());
    for (pos_t s = 1; s <= n; ++s) eps.occurrences.push_back(s);
    eps.left = sorted_unique(all);
    eps.right = eps.left;
    index_.emplace(eps.str, repeats_.size());
    repeats_.push_back(std::move(eps));
  }
  const auto* data = reinterpret_cast<const char*>(t.symbols().data());
  for (pos_t len = 1; len < n; ++len) {
    std::unordered_map<std::string_view, std::vector<pos_t>> groups;
    for (pos_t s = 1; s + len - 1 <= n - 1; ++s) {
      groups[std::string_view(data + (s - 1), static_cast<std::size_t>(len))].push_back(s);
    }
    std::vector<Entry> found;
    for (auto& [key, occ] : groups) {
      if (occ.size() < 2) continue;
      Entry e;
      e.str.assign(key.begin(), key.end());
      std::vector<Symbol> left, right;
      for (pos_t s : occ) {
        left.push_back(s == 1 ? t[n] : t[s - 1]);
        right.push_back(t[s + len]);
      }
      e.occurrences = std::move(occ);
      std::sort(e.occurrences.begin(), e.occurrences.end());
      e.left = sorted_unique(std::move(left));
      e.right = sorted_unique(std::move(right));
      found.push_back(std::move(e));
    }
    if (found.empty()) break;
    std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) { return a.str < b.str; });
    for (auto& e : found) {
      index_.emplace(e.str, repeats_.size());
      repeats_.push_back(std::move(e));
    }
  }
}

const BruteForceRepeats::Entry* BruteForceRepeats::find(std::span<const Symbol> w) const {
  auto it = index_.find(std::vector<Symbol>(w.begin(), w.end()));
  return it == index_.end() ? nullptr : &repeats_[it->second];
}

bool BruteForceRepeats::left_maximal(std::span<const Symbol> w) const {
  const Entry* e = find(w);
  return e != nullptr && e->left.size() > 1;
}

std::vector<const BruteForceRepeats::Entry*> BruteForceRepeats::maximal_repeats() const {
  std::vector<const Entry*> out;
  for (const auto& e : repeats_) {
    if (e.str.empty() || (e.left.size() > 1 && e.right.size() > 1)) out.push_back(&e);
  }
  return out;
}

std::vector<const BruteForceRepeats::Entry*> BruteForceRepeats::rightmost_maximal_repeats() const {
  std::vector<const Entry*> out;
  for (const Entry* e : maximal_repeats()) {
    bool rightmost = true;
    for (Symbol b : e->right) {
      auto ext = e->str;
      ext.push_back(b);
      if (left_maximal(ext)) rightmost = false;
    }
    if (rightmost) out.push_back(e);
  }
  return out;
}

std::vector<Symbol> BruteForceRepeats::locus_of(std::vector<Symbol> w) const {
  // Extend while every occurrence continues with the same symbol.
  for (;;) {
    const Entry* e = find(w);
    if (e == nullptr || e->right.size() > 1) return w;
    w.push_back(e->right.front());
  }
}

std::pair<pos_t, pos_t> BruteForceRepeats::extension_classes() const {
  pos_t explicit_count = 0, implicit_count = 0;
  for (const Entry* e : maximal_repeats()) {
    for (Symbol b : e->right) {
      auto ext = e->str;
      ext.push_back(b);
      auto locus = locus_of(std::move(ext));
      const Entry* le = find(locus);
      bool maximal = le != nullptr && !le->str.empty() && le->left.size() > 1 && le->right.size() > 1;
      (maximal ? explicit_count : implicit_count) += 1;
    }
  }
  return {explicit_count, implicit_count};
}

pos_t BruteForceRepeats::run_lower_bound() const {
  auto rightmost = rightmost_maximal_repeats();
  std::vector<bool> covered(static_cast<std::size_t>(text_.sigma()) + 1, false);
  pos_t sum = 0;
  for (const Entry* e : rightmost) {
    sum += static_cast<pos_t>(e->left.size());
    for (Symbol c : e->left) covered[c] = true;
  }
  pos_t uncovered = std::count(covered.begin(), covered.end(), false);
  return uncovered + sum - static_cast<pos_t>(rightmost.size()) + 1;
}

std::vector<std::vector<Symbol>> naive_maximal_repeats(const Text& t) {
  BruteForceRepeats brute(t);
  std::vector<std::vector<Symbol>> out;
  for (const auto* e : brute.maximal_repeats()) out.push_back(e->str);
  return out;
}

namespace {

// BWT by sorting rotations directly; independent of the suffix-array code.
std::vector<Symbol> rotation_bwt(const Text& t) {
  const pos_t n = t.size();
  std::vector<pos_t> rot(static_cast<std::size_t>(n));
  std::iota(rot.begin(), rot.end(), 0);
  auto sym = [&](pos_t start, pos_t k) { return t[(start + k) % n + 1]; };
  std::sort(rot.begin(), rot.end(), [&](pos_t a, pos_t b) {
    for (pos_t k = 0; k < n; ++k) {
      Symbol x = sym(a, k), y = sym(b, k);
      if (x != y) return x < y;
    }
    return false;
  });
  std::vector<Symbol> bwt;
  for (pos_t start : rot) bwt.push_back(sym(start, n - 1));
  return bwt;
}

}  // namespace

MeasureReport naive_measures(const Text& t) {
  MeasureReport m;
  m.n = t.size();
  m.sigma = t.sigma();
  Text rev = reverse_text(t);
  BruteForceRepeats fwd(t), bwd(rev);
  m.n_maximal_repeats = static_cast<pos_t>(fwd.maximal_repeats().size());
  auto [ex, im] = fwd.extension_classes();
  m.e_explicit = ex;
  m.f_implicit = im;
  m.e = ex + im;
  auto [ex_l, im_l] = bwd.extension_classes();
  m.e_left = ex_l + im_l;
  m.r = count_runs(rotation_bwt(t));
  m.r_rev = count_runs(rotation_bwt(rev));
  m.z = static_cast<pos_t>(naive_lz_starts(t).size());
  m.z_rev = static_cast<pos_t>(naive_lz_starts(rev).size());
  return m;
}

std::pair<pos_t, pos_t> weiner_link_classes_of_reverse(const Text& t) {
  Text rev = reverse_text(t);
  auto bundle = build_suffix_array_bundle(rev);
  OracleSuffixTree st(rev, bundle);
  auto bwt = bwt_from_suffix_array(rev, bundle);
  auto links = enumerate_weiner_links(st, rev, bundle);
  auto maximal = [&](int id) {
    const auto& v = st.node(id);
    return !v.leaf && is_left_maximal(bwt, {v.sp, v.ep});
  };
  pos_t ex = 0, im = 0;
  for (const auto& [src, c, dst] : links.explicit_links) ex += maximal(src) ? 1 : 0;
  for (const auto& [src, c] : links.implicit_links) im += maximal(src) ? 1 : 0;
  return {ex, im};
}

}  // namespace crads
