#include "crads/rlbwt.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "crads/index_file.hpp"

namespace crads {

namespace {
std::atomic<bool> rank_fault{false};
}

void testing::set_rank_fault(bool on) { rank_fault = on; }

RunLengthBwt::RunLengthBwt(std::span<const Symbol> bwt, int sigma)
    : n_(static_cast<pos_t>(bwt.size())), sigma_(sigma) {
  for (std::size_t i = 0; i < bwt.size(); ++i) {
    if (bwt[i] > sigma) throw std::invalid_argument("bwt symbol exceeds sigma");
    auto p = static_cast<pos_t>(i + 1);
    if (!runs_.empty() && runs_.back().c == bwt[i]) {
      runs_.back().ep = p;
    } else {
      runs_.push_back({bwt[i], p, p});
    }
  }
  index_runs();
}

void RunLengthBwt::index_runs() {
  const auto slots = static_cast<std::size_t>(sigma_) + 1;
  run_starts_.clear();
  char_starts_.assign(slots, {});
  char_ends_.assign(slots, {});
  char_before_.assign(slots, {});
  std::vector<pos_t> total(slots, 0);
  for (const Run& run : runs_) {
    run_starts_.push_back(run.sp);
    char_starts_[run.c].push_back(run.sp);
    char_ends_[run.c].push_back(run.ep);
    char_before_[run.c].push_back(total[run.c]);
    total[run.c] += run.ep - run.sp + 1;
  }
  c_.assign(slots + 1, 0);
  for (std::size_t c = 0; c < slots; ++c) c_[c + 1] = c_[c] + total[c];
}

pos_t RunLengthBwt::rank(Symbol c, pos_t i) const {
  if (c > sigma_ || i <= 0) return 0;
  const auto& starts = char_starts_[c];
  auto it = std::upper_bound(starts.begin(), starts.end(), i);
  if (it == starts.begin()) return 0;
  auto k = static_cast<std::size_t>(it - starts.begin() - 1);
  pos_t r = char_before_[c][k] + std::min(i, char_ends_[c][k]) - starts[k] + 1;
  if (rank_fault && i > runs_.front().ep) ++r;
  return r;
}

pos_t RunLengthBwt::select(Symbol c, pos_t k) const {
  if (c > sigma_ || k < 1 || k > c_[c + 1] - c_[c]) throw std::out_of_range("select: occurrence index out of range");
  const auto& before = char_before_[c];
  auto it = std::lower_bound(before.begin(), before.end(), k);  // first run with before >= k
  auto idx = static_cast<std::size_t>(it - before.begin() - 1);
  return char_starts_[c][idx] + (k - before[idx] - 1);
}

Symbol RunLengthBwt::char_at(pos_t i) const {
  auto it = std::upper_bound(run_starts_.begin(), run_starts_.end(), i);
  return runs_[static_cast<std::size_t>(it - run_starts_.begin() - 1)].c;
}

Symbol RunLengthBwt::f_char(pos_t p) const {
  // c with C[c] < p <= C[c+1]
  auto it = std::lower_bound(c_.begin(), c_.end(), p);
  return static_cast<Symbol>(it - c_.begin() - 1);
}

pos_t RunLengthBwt::lf(pos_t p) const {
  Symbol c = char_at(p);
  return c_[c] + rank(c, p);
}

pos_t RunLengthBwt::psi(pos_t p) const {
  Symbol c = f_char(p);
  return select(c, p - c_[c]);
}

Interval RunLengthBwt::backward_step(const Interval& iv, Symbol c) const {
  if (iv.empty() || c > sigma_) return {};
  return {c_[c] + rank(c, iv.sp - 1) + 1, c_[c] + rank(c, iv.ep)};
}

Interval RunLengthBwt::interval_of(std::span<const Symbol> p) const {
  Interval iv = full();
  for (auto it = p.rbegin(); it != p.rend() && !iv.empty(); ++it) iv = backward_step(iv, *it);
  return iv;
}

int RunLengthBwt::uniform_symbol(const Interval& iv) const {
  auto it = std::upper_bound(run_starts_.begin(), run_starts_.end(), iv.sp);
  const Run& run = runs_[static_cast<std::size_t>(it - run_starts_.begin() - 1)];
  return run.ep >= iv.ep ? run.c : -1;
}

void RunLengthBwt::save(ByteWriter& w) const {
  w.put(n_);
  w.put(sigma_);
  w.put(static_cast<pos_t>(runs_.size()));
  for (const Run& run : runs_) {
    w.put(run.c);
    w.put(run.ep - run.sp + 1);
  }
}

RunLengthBwt RunLengthBwt::load(ByteReader& r) {
  RunLengthBwt x;
  x.n_ = r.get();
  x.sigma_ = static_cast<int>(r.get());
  pos_t count = r.get();
  pos_t p = 1;
  for (pos_t k = 0; k < count; ++k) {
    auto c = static_cast<Symbol>(r.get());
    pos_t len = r.get();
    if (len < 1 || c > x.sigma_) throw DataError("corrupt run table");
    x.runs_.push_back({c, p, p + len - 1});
    p += len;
  }
  if (p != x.n_ + 1) throw DataError("run lengths do not cover the BWT");
  x.index_runs();
  return x;
}

}  // namespace crads
