#include "crads/lz77.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string_view>

#include "crads/index_file.hpp"

namespace crads {

LzFactorization::LzFactorization(std::vector<LzFactor> factors) : factors_(std::move(factors)) {
  pos_t expect = 1;
  for (const auto& f : factors_) {
    if (f.start != expect || f.length < 1) throw std::invalid_argument("factors must tile the text");
    if (!f.novel() && f.source >= f.start) throw std::invalid_argument("copy source must precede the factor");
    expect += f.length;
  }
}

std::vector<pos_t> LzFactorization::boundaries() const {
  std::vector<pos_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.start);
  return out;
}

void LzFactorization::save(ByteWriter& w) const {
  w.put(factors_.size());
  for (const auto& f : factors_) {
    w.put(f.length);
    w.put(f.source);
    w.put(f.symbol);
  }
}

LzFactorization LzFactorization::load(ByteReader& r) {
  auto count = r.get();
  if (count < 0 || static_cast<std::uint64_t>(count) > r.remaining() / 24) throw DataError("corrupt factor table");
  std::vector<LzFactor> factors;
  pos_t start = 1;
  for (std::int64_t k = 0; k < count; ++k) {
    LzFactor f;
    f.start = start;
    f.length = r.get();
    f.source = r.get();
    f.symbol = static_cast<Symbol>(r.get());
    start += f.length;
    factors.push_back(f);
  }
  try {
    return LzFactorization(std::move(factors));
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("corrupt factor table: ") + e.what());
  }
}

LzFactorization factorize(const Text& t, const SuffixArrayBundle& b) {
  const pos_t n = t.size();
  // For every position, the lexicographic neighbours among earlier suffixes (PSV/NSV over SA).
  std::vector<pos_t> psv(static_cast<std::size_t>(n) + 1, 0), nsv(static_cast<std::size_t>(n) + 1, 0);
  std::vector<pos_t> stack;
  for (pos_t row = 1; row <= n; ++row) {
    pos_t p = b.sa[static_cast<std::size_t>(row)];
    while (!stack.empty() && stack.back() > p) {
      nsv[static_cast<std::size_t>(stack.back())] = p;
      stack.pop_back();
    }
    psv[static_cast<std::size_t>(p)] = stack.empty() ? 0 : stack.back();
    stack.push_back(p);
  }
  auto match = [&](pos_t src, pos_t p) {
    if (src == 0) return pos_t{0};
    pos_t l = 0;
    while (p + l <= n && t[src + l] == t[p + l]) ++l;
    return l;
  };
  std::vector<LzFactor> factors;
  for (pos_t p = 1; p <= n;) {
    pos_t a = psv[static_cast<std::size_t>(p)], c = nsv[static_cast<std::size_t>(p)];
    pos_t la = match(a, p), lc = match(c, p);
    LzFactor f;
    f.start = p;
    if (la == 0 && lc == 0) {
      f.length = 1;
      f.symbol = t[p];
    } else if (la >= lc) {
      f.length = la;
      f.source = a;
    } else {
      f.length = lc;
      f.source = c;
    }
    factors.push_back(f);
    p += f.length;
  }
  return LzFactorization(std::move(factors));
}

LzFactorization factorize(const Text& t) { return factorize(t, build_suffix_array_bundle(t)); }

std::vector<Symbol> decompress(const LzFactorization& f) {
  std::vector<Symbol> out;
  for (const auto& factor : f.factors()) {
    if (factor.novel()) {
      out.push_back(factor.symbol);
      continue;
    }
    for (pos_t k = 0; k < factor.length; ++k) out.push_back(out[static_cast<std::size_t>(factor.source - 1 + k)]);
  }
  return out;
}

std::vector<DistinctFactor> distinct_factors(const LzFactorization& f, const Text& t) {
  const auto* data = reinterpret_cast<const char*>(t.symbols().data());
  std::map<std::string_view, DistinctFactor> groups;  // byte order equals symbol order
  for (pos_t j = 1; j <= f.z(); ++j) {
    const auto& factor = f.factor(j);
    std::string_view key(data + (factor.start - 1), static_cast<std::size_t>(factor.length));
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) {
      it->second.start = factor.start;
      it->second.length = factor.length;
    }
    it->second.factor_indices.push_back(j);
  }
  std::vector<DistinctFactor> out;
  out.reserve(groups.size());
  for (auto& [key, d] : groups) out.push_back(std::move(d));
  return out;
}

}  // namespace crads
