#pragma once

#include <span>
#include <vector>

#include "crads/text.hpp"

namespace crads {

class ByteWriter;
class ByteReader;

/// BWT stored as its maximal runs, with per-symbol run lists for rank and select.
class RunLengthBwt {
 public:
  struct Run {
    Symbol c;
    pos_t sp;
    pos_t ep;
    friend bool operator==(const Run&, const Run&) = default;
  };

  RunLengthBwt() = default;
  /// `bwt` is 0-based (element i-1 holds BWT[i]); symbols lie in [0..sigma].
  RunLengthBwt(std::span<const Symbol> bwt, int sigma);

  pos_t size() const { return n_; }
  int sigma() const { return sigma_; }
  pos_t run_count() const { return static_cast<pos_t>(runs_.size()); }
  const std::vector<Run>& runs() const { return runs_; }

  /// Occurrences of c in BWT[1..i], inclusive.
  pos_t rank(Symbol c, pos_t i) const;
  /// Position of the k-th c; throws std::out_of_range when k is not in [1..occ(c)].
  pos_t select(Symbol c, pos_t k) const;
  Symbol char_at(pos_t i) const;

  /// Number of text symbols smaller than c.
  pos_t C(Symbol c) const { return c_[c]; }
  /// Symbol of the F column at row p.
  Symbol f_char(pos_t p) const;
  pos_t lf(pos_t p) const;
  /// Inverse of lf.
  pos_t psi(pos_t p) const;

  Interval full() const { return {1, n_}; }
  Interval backward_step(const Interval& iv, Symbol c) const;
  /// BWT interval of p, empty if p does not occur.
  Interval interval_of(std::span<const Symbol> p) const;
  pos_t count(std::span<const Symbol> p) const { return interval_of(p).width(); }
  /// Symbol c is the only one occurring in BWT[iv]; returns -1 when two or more symbols occur.
  int uniform_symbol(const Interval& iv) const;

  void save(ByteWriter& w) const;
  static RunLengthBwt load(ByteReader& r);

  friend bool operator==(const RunLengthBwt& a, const RunLengthBwt& b) {
    return a.n_ == b.n_ && a.sigma_ == b.sigma_ && a.runs_ == b.runs_;
  }

 private:
  void index_runs();

  pos_t n_ = 0;
  int sigma_ = 0;
  std::vector<Run> runs_;
  std::vector<pos_t> run_starts_;                // global, parallel to runs_
  std::vector<std::vector<pos_t>> char_starts_;  // per symbol: run starts
  std::vector<std::vector<pos_t>> char_ends_;
  std::vector<std::vector<pos_t>> char_before_;  // occurrences of c before the run
  std::vector<pos_t> c_;                         // size sigma+2
};

namespace testing {
/// Makes rank() off by one for positions past the first run. Self-test mutation hook only.
void set_rank_fault(bool on);
}  // namespace testing

}  // namespace crads
