#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crads {

using Symbol = std::uint8_t;
using pos_t = std::int64_t;

inline constexpr Symbol kTerminator = 0;

/// Raised for malformed or unsupported input data (as opposed to API misuse).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed interval [sp..ep] of 1-based positions; sp > ep encodes the empty interval.
struct Interval {
  pos_t sp = 1;
  pos_t ep = 0;

  bool empty() const { return sp > ep; }
  pos_t width() const { return empty() ? 0 : ep - sp + 1; }
  bool contains(pos_t p) const { return sp <= p && p <= ep; }
  bool contains(const Interval& o) const { return o.empty() || (sp <= o.sp && o.ep <= ep); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Bidirectional mapping between input bytes and the dense symbols [1..sigma].
class SymbolMap {
 public:
  SymbolMap() = default;
  explicit SymbolMap(std::vector<std::uint8_t> bytes_in_order);

  int sigma() const { return static_cast<int>(byte_of_.size()); }
  std::optional<Symbol> symbol(std::uint8_t byte) const;
  std::uint8_t byte(Symbol s) const;
  const std::vector<std::uint8_t>& bytes() const { return byte_of_; }

  friend bool operator==(const SymbolMap&, const SymbolMap&) = default;

 private:
  std::vector<std::uint8_t> byte_of_;  // byte_of_[s-1] for s in [1..sigma]
  std::array<Symbol, 256> symbol_of_{};  // 0 = unmapped
};

/// An immutable text T = S#, with S over [1..sigma] and the terminator 0 at position n.
/// Positions are 1-based.
class Text {
 public:
  Text() = default;

  /// Validates and adopts `data` (terminator included) together with its symbol map.
  Text(std::vector<Symbol> data, SymbolMap map);

  pos_t size() const { return static_cast<pos_t>(data_.size()); }
  int sigma() const { return map_.sigma(); }

  Symbol operator[](pos_t i) const { return data_[static_cast<std::size_t>(i - 1)]; }

  /// Whole text, terminator included, as a 0-based view.
  std::span<const Symbol> symbols() const { return data_; }
  /// Payload S (terminator excluded).
  std::span<const Symbol> payload() const { return std::span(data_).first(data_.size() - 1); }

  const SymbolMap& symbol_map() const { return map_; }

  /// Maps a byte pattern into symbols; nullopt if some byte never occurs in the text.
  std::optional<std::vector<Symbol>> encode(std::string_view bytes) const;
  std::string decode(std::span<const Symbol> symbols) const;

  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::vector<Symbol> data_;
  SymbolMap map_;
};

Text ingest_plain(std::string_view bytes);
Text ingest_fasta(std::string_view bytes);

/// rev(S)# for t = S#: the terminator stays last.
Text reverse_text(const Text& t);

std::string read_file(const std::string& path);

}  // namespace crads
