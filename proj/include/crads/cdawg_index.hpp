#pragma once

#include <span>
#include <vector>

#include "crads/cdawg.hpp"
#include "crads/rlbwt.hpp"

namespace crads {

class IndexFile;

struct LocateStats {
  std::size_t search_arcs = 0;     // arcs followed while matching the pattern
  std::size_t reporting_arcs = 0;  // arcs scanned by the reporting traversal
};

/// Counting with the run-length BWT, locating by blind search in the CDAWG.
class CdawgRlbwtIndex {
 public:
  CdawgRlbwtIndex() = default;
  explicit CdawgRlbwtIndex(const Text& t);
  CdawgRlbwtIndex(RunLengthBwt fwd, Cdawg g) : fwd_(std::move(fwd)), cdawg_(std::move(g)) {}

  const RunLengthBwt& rlbwt() const { return fwd_; }
  const Cdawg& cdawg() const { return cdawg_; }

  pos_t count(std::span<const Symbol> p) const { return fwd_.count(p); }
  /// Sorted occurrence positions.
  std::vector<pos_t> locate(std::span<const Symbol> p, LocateStats* stats = nullptr) const;

  void save(IndexFile& f) const;
  static CdawgRlbwtIndex load(const IndexFile& f);

  friend bool operator==(const CdawgRlbwtIndex&, const CdawgRlbwtIndex&) = default;

 private:
  RunLengthBwt fwd_;
  Cdawg cdawg_;
};

}  // namespace crads
