#include "crads/index_file.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>

namespace crads {

namespace {

constexpr char kMagic[5] = {'C', 'R', 'A', 'D', 'S'};

std::uint64_t crc32_of(std::span<const std::uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, bytes.data(), static_cast<uInt>(bytes.size()));
  return crc;
}

}  // namespace

std::int64_t ByteReader::get() {
  if (remaining() < 8) throw DataError("unexpected end of section");
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(bytes_[offset_ + static_cast<std::size_t>(k)]) << (8 * k);
  offset_ += 8;
  return static_cast<std::int64_t>(v);
}

void IndexFile::add(std::string name, std::vector<std::uint8_t> bytes) {
  if (has(name)) throw std::invalid_argument("duplicate section " + name);
  sections_.emplace_back(std::move(name), std::move(bytes));
}

bool IndexFile::has(const std::string& name) const {
  return std::any_of(sections_.begin(), sections_.end(), [&](const auto& s) { return s.first == name; });
}

std::span<const std::uint8_t> IndexFile::section(const std::string& name) const {
  for (const auto& [n, bytes] : sections_) {
    if (n == name) return bytes;
  }
  throw DataError("index has no section " + name);
}

std::vector<std::uint8_t> IndexFile::serialize() const {
  ByteWriter header;
  header.put(kVersion);
  header.put(sections_.size());
  std::size_t table_size = 0;
  for (const auto& [name, bytes] : sections_) table_size += 8 + name.size() + 24;
  std::uint64_t offset = sizeof(kMagic) + 16 + table_size;
  std::vector<std::uint8_t> table;
  ByteWriter entries;
  for (const auto& [name, bytes] : sections_) {
    entries.put(name.size());
    auto raw = entries.take();
    table.insert(table.end(), raw.begin(), raw.end());
    table.insert(table.end(), name.begin(), name.end());
    entries.put(offset);
    entries.put(bytes.size());
    entries.put(crc32_of(bytes));
    raw = entries.take();
    table.insert(table.end(), raw.begin(), raw.end());
    offset += bytes.size();
  }
  std::vector<std::uint8_t> out(kMagic, kMagic + sizeof(kMagic));
  out.insert(out.end(), header.bytes().begin(), header.bytes().end());
  out.insert(out.end(), table.begin(), table.end());
  for (const auto& [name, bytes] : sections_) out.insert(out.end(), bytes.begin(), bytes.end());
  return out;
}

IndexFile IndexFile::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < sizeof(kMagic) || std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw DataError("not an index file (bad magic)");
  }
  ByteReader r(bytes.subspan(sizeof(kMagic)));
  auto version = static_cast<std::uint64_t>(r.get());
  if (version != kVersion) throw DataError("unsupported index format version " + std::to_string(version));
  auto count = r.get();
  if (count < 0 || count > 4096) throw DataError("corrupt section table");
  // Names are not 8-byte aligned, so the table is walked by hand.
  std::size_t at = sizeof(kMagic) + 16;
  auto read_u64 = [&]() {
    if (at + 8 > bytes.size()) throw DataError("truncated section table");
    ByteReader field(bytes.subspan(at, 8));
    at += 8;
    return static_cast<std::uint64_t>(field.get());
  };
  IndexFile file;
  for (std::int64_t k = 0; k < count; ++k) {
    auto len = read_u64();
    if (len > 256 || at + len > bytes.size()) throw DataError("corrupt section name");
    std::string name(bytes.begin() + static_cast<std::ptrdiff_t>(at), bytes.begin() + static_cast<std::ptrdiff_t>(at + len));
    at += len;
    auto offset = read_u64();
    auto size = read_u64();
    auto crc = read_u64();
    if (offset > bytes.size() || size > bytes.size() - offset) throw DataError("section " + name + " out of bounds");
    auto body = bytes.subspan(offset, size);
    if (crc32_of(body) != crc) throw DataError("checksum mismatch in section " + name);
    if (file.has(name)) throw DataError("duplicate section " + name);
    file.add(name, {body.begin(), body.end()});
  }
  return file;
}

void save_text(ByteWriter& w, const Text& t) {
  w.put_all(t.symbol_map().bytes());
  std::vector<Symbol> data(t.symbols().begin(), t.symbols().end());
  w.put_all(data);
}

Text load_text(ByteReader& r) {
  auto bytes = r.get_all<std::uint8_t>();
  auto data = r.get_all<Symbol>();
  try {
    return Text(std::move(data), SymbolMap(std::move(bytes)));
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("corrupt text section: ") + e.what());
  }
}

void write_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace crads
