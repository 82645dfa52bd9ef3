#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crads/text.hpp"

namespace crads {

/// Little-endian 64-bit integer stream.
class ByteWriter {
 public:
  template <std::integral T>
  void put(T value) {
    auto v = static_cast<std::uint64_t>(static_cast<std::int64_t>(value));
    for (int k = 0; k < 8; ++k) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
  }
  template <std::integral T>
  void put_all(const std::vector<T>& values) {
    put(values.size());
    for (T v : values) put(v);
  }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::int64_t get();
  template <std::integral T>
  std::vector<T> get_all() {
    auto count = get();
    if (count < 0 || static_cast<std::uint64_t>(count) > remaining() / 8) throw DataError("corrupt vector length");
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) out.push_back(static_cast<T>(get()));
    return out;
  }
  std::size_t remaining() const { return bytes_.size() - offset_; }
  bool done() const { return offset_ == bytes_.size(); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t offset_ = 0;
};

/// Container: magic "CRADS", version, then a table of named sections with CRC-32 checksums.
class IndexFile {
 public:
  static constexpr std::uint64_t kVersion = 1;

  void add(std::string name, std::vector<std::uint8_t> bytes);
  bool has(const std::string& name) const;
  /// Throws DataError when the section is missing.
  std::span<const std::uint8_t> section(const std::string& name) const;
  const std::vector<std::pair<std::string, std::vector<std::uint8_t>>>& sections() const { return sections_; }

  std::vector<std::uint8_t> serialize() const;
  /// Validates magic, version, bounds and checksums.
  static IndexFile parse(std::span<const std::uint8_t> bytes);

 private:
  std::vector<std::pair<std::string, std::vector<std::uint8_t>>> sections_;
};

void save_text(ByteWriter& w, const Text& t);
Text load_text(ByteReader& r);

void write_bytes(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace crads
