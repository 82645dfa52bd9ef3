#include "crads/text.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace crads {

SymbolMap::SymbolMap(std::vector<std::uint8_t> bytes_in_order) : byte_of_(std::move(bytes_in_order)) {
  if (!std::is_sorted(byte_of_.begin(), byte_of_.end()) ||
      std::adjacent_find(byte_of_.begin(), byte_of_.end()) != byte_of_.end()) {
    throw std::invalid_argument("symbol map bytes must be strictly increasing");
  }
  if (!byte_of_.empty() && byte_of_.front() == 0) {
    throw DataError("byte 0 is reserved for the terminator");
  }
  for (std::size_t s = 0; s < byte_of_.size(); ++s) {
    symbol_of_[byte_of_[s]] = static_cast<Symbol>(s + 1);
  }
}

std::optional<Symbol> SymbolMap::symbol(std::uint8_t byte) const {
  Symbol s = symbol_of_[byte];
  if (s == 0) return std::nullopt;
  return s;
}

std::uint8_t SymbolMap::byte(Symbol s) const {
  if (s == kTerminator) return '$';
  return byte_of_.at(static_cast<std::size_t>(s - 1));
}

Text::Text(std::vector<Symbol> data, SymbolMap map) : data_(std::move(data)), map_(std::move(map)) {
  if (data_.empty() || data_.back() != kTerminator) {
    throw std::invalid_argument("text must end with the terminator");
  }
  std::vector<bool> seen(static_cast<std::size_t>(map_.sigma()) + 1, false);
  for (std::size_t i = 0; i + 1 < data_.size(); ++i) {
    Symbol s = data_[i];
    if (s == kTerminator || s > map_.sigma()) {
      throw std::invalid_argument("text symbol outside [1..sigma]");
    }
    seen[s] = true;
  }
  for (int s = 1; s <= map_.sigma(); ++s) {
    if (!seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("alphabet symbol never occurs");
  }
}

std::optional<std::vector<Symbol>> Text::encode(std::string_view bytes) const {
  std::vector<Symbol> out;
  out.reserve(bytes.size());
  for (char ch : bytes) {
    auto s = map_.symbol(static_cast<std::uint8_t>(ch));
    if (!s) return std::nullopt;
    out.push_back(*s);
  }
  return out;
}

std::string Text::decode(std::span<const Symbol> symbols) const {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(static_cast<char>(map_.byte(s)));
  return out;
}

Text ingest_plain(std::string_view bytes) {
  if (bytes.empty()) throw DataError("input is empty");
  std::array<bool, 256> present{};
  for (char ch : bytes) present[static_cast<std::uint8_t>(ch)] = true;
  if (present[0]) throw DataError("input contains byte 0, reserved for the terminator");
  std::vector<std::uint8_t> alphabet;
  for (int b = 1; b < 256; ++b) {
    if (present[static_cast<std::size_t>(b)]) alphabet.push_back(static_cast<std::uint8_t>(b));
  }
  SymbolMap map(std::move(alphabet));
  std::vector<Symbol> data;
  data.reserve(bytes.size() + 1);
  for (char ch : bytes) data.push_back(*map.symbol(static_cast<std::uint8_t>(ch)));
  data.push_back(kTerminator);
  return Text(std::move(data), std::move(map));
}

Text ingest_fasta(std::string_view bytes) {
  std::string seq;
  bool in_record = false;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '>') {
      in_record = true;
      continue;
    }
    if (!in_record) throw DataError("FASTA sequence data before the first header");
    seq.append(line);
  }
  return ingest_plain(seq);
}

Text reverse_text(const Text& t) {
  std::vector<Symbol> data(t.symbols().begin(), t.symbols().end() - 1);
  std::reverse(data.begin(), data.end());
  data.push_back(kTerminator);
  return Text(std::move(data), t.symbol_map());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace crads
