// crads: build, query and measure repetition-aware indexes.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <variant>

#include "crads/cdawg_index.hpp"
#include "crads/cdawg_st.hpp"
#include "crads/index_file.hpp"
#include "crads/lz_index.hpp"
#include "crads/oracles.hpp"
#include "crads/selftest.hpp"

using namespace crads;
using nlohmann::json;

namespace {

enum class Engine { LzRlbwt, Cdawg, St };

const std::map<std::string, Engine> kEngines{{"lz-rlbwt", Engine::LzRlbwt}, {"cdawg", Engine::Cdawg}, {"st", Engine::St}};

std::string engine_name(Engine e) {
  for (const auto& [name, value] : kEngines) {
    if (value == e) return name;
  }
  return "?";
}

struct LoadedIndex {
  Engine engine;
  SymbolMap map;
  std::variant<LzRlbwtIndex, CdawgRlbwtIndex, CdawgSuffixTree> ix;

  const RunLengthBwt& rlbwt() const {
    return std::visit([](const auto& x) -> const RunLengthBwt& { return x.rlbwt(); }, ix);
  }
};

Text load_input(const std::string& path, bool fasta) {
  auto bytes = read_file(path);
  if (fasta || (!bytes.empty() && bytes.front() == '>')) return ingest_fasta(bytes);
  return ingest_plain(bytes);
}

void save_index(const std::string& path, const Text& t, Engine engine) {
  IndexFile f;
  ByteWriter w;
  w.put(static_cast<int>(engine));
  w.put_all(t.symbol_map().bytes());
  f.add("META", w.take());
  switch (engine) {
    case Engine::LzRlbwt: LzRlbwtIndex(t).save(f); break;
    case Engine::Cdawg: CdawgRlbwtIndex(t).save(f); break;
    case Engine::St: CdawgSuffixTree(t).save(f); break;
  }
  write_bytes(path, f.serialize());
}

LoadedIndex load_index(const std::string& path) {
  auto raw = read_file(path);
  auto f = IndexFile::parse(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
  ByteReader r(f.section("META"));
  auto code = r.get();
  if (code < 0 || code > 2) throw DataError("unknown engine in index");
  auto engine = static_cast<Engine>(code);
  SymbolMap map;
  try {
    map = SymbolMap(r.get_all<std::uint8_t>());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("corrupt symbol map: ") + e.what());
  }
  switch (engine) {
    case Engine::LzRlbwt: return {engine, map, LzRlbwtIndex::load(f)};
    case Engine::Cdawg: return {engine, map, CdawgRlbwtIndex::load(f)};
    case Engine::St: break;
  }
  return {engine, map, CdawgSuffixTree::load(f)};
}

std::optional<std::vector<Symbol>> encode(const SymbolMap& map, const std::string& s) {
  std::vector<Symbol> out;
  for (char ch : s) {
    auto sym = map.symbol(static_cast<std::uint8_t>(ch));
    if (!sym) return std::nullopt;
    out.push_back(*sym);
  }
  return out;
}

std::vector<std::string> read_patterns(const std::string& pattern, const std::string& file) {
  std::vector<std::string> out;
  if (!file.empty()) {
    std::istringstream in(read_file(file));
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      out.push_back(line);
    }
  } else {
    out.push_back(pattern);
  }
  return out;
}

std::string join(const std::vector<pos_t>& v, const std::string& suffix = "") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v[i]) + suffix;
  }
  return out;
}

std::vector<std::size_t> sample_points(const std::string& points, std::size_t n) {
  std::vector<std::size_t> out;
  if (points.find(',') != std::string::npos) {
    std::stringstream ss(points);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoull(item));
  } else {
    std::size_t k = std::max<std::size_t>(std::stoull(points), 1);
    for (std::size_t i = 1; i <= k; ++i) out.push_back(n * i / k);
  }
  for (auto p : out) {
    if (p < 1 || p > n) throw CLI::ValidationError("--samples", "sample position outside [1.." + std::to_string(n) + "]");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repetition-aware text indexes"};
  app.require_subcommand(1);

  std::string input, index_path, pattern, patterns_file, engine_str = "lz-rlbwt", format = "tsv", samples = "1";
  bool fasta = false, normalize = false, exclude_empty = false, tag = false, stats = false, inject_fault = false;
  SelftestOptions st_opt;

  auto* build = app.add_subcommand("build", "Build an index file");
  build->add_option("--input", input, "Text file (plain or FASTA)")->required()->check(CLI::ExistingFile);
  build->add_option("--index", index_path, "Output index path")->required();
  build->add_option("--engine", engine_str)->check(CLI::IsMember({"lz-rlbwt", "cdawg", "st"}));
  build->add_flag("--fasta", fasta, "Parse input as FASTA");

  auto add_query = [&](CLI::App* cmd) {
    cmd->add_option("--index", index_path, "Index file")->required()->check(CLI::ExistingFile);
    auto* p = cmd->add_option("--pattern", pattern, "Single pattern");
    auto* ps = cmd->add_option("--patterns", patterns_file, "One pattern per line")->check(CLI::ExistingFile);
    p->excludes(ps);
    cmd->add_option("--engine", engine_str, "Expected engine")->check(CLI::IsMember({"lz-rlbwt", "cdawg", "st"}));
    cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "json-lines"}));
  };
  auto* count = app.add_subcommand("count", "Count occurrences");
  add_query(count);
  auto* locate = app.add_subcommand("locate", "Report occurrence positions");
  add_query(locate);
  locate->add_flag("--tag", tag, "Mark lz-rlbwt positions as primary (p) or secondary (s)");
  auto* ms = app.add_subcommand("ms", "Matching statistics against an st index");
  add_query(ms);

  auto* measures = app.add_subcommand("measures", "Repetitiveness measures on text prefixes");
  measures->add_option("--input", input)->required()->check(CLI::ExistingFile);
  measures->add_option("--samples", samples, "Number of evenly spaced prefixes, or comma-separated prefix lengths");
  measures->add_flag("--normalize", normalize, "Divide every column by its first sample");
  measures->add_flag("--exclude-empty", exclude_empty, "Do not count the empty maximal repeat");
  measures->add_flag("--fasta", fasta);
  measures->add_option("--format", format)->check(CLI::IsMember({"tsv", "json-lines"}));

  auto* traverse = app.add_subcommand("traverse", "Preorder walk of the suffix tree of an st index");
  traverse->add_option("--index", index_path)->required()->check(CLI::ExistingFile);
  traverse->add_flag("--stats", stats, "Print node counts and the depth histogram only");

  auto* selftest = app.add_subcommand("selftest", "Oracle checks on random texts");
  selftest->add_option("--n", st_opt.n)->check(CLI::Range(2, 1 << 16));
  selftest->add_option("--sigma", st_opt.sigma)->check(CLI::Range(1, 20));
  selftest->add_option("--seed", st_opt.seed);
  selftest->add_option("--iterations", st_opt.iterations)->check(CLI::NonNegativeNumber);
  selftest->add_flag("--inject-rank-fault", inject_fault, "Break rank on purpose (mutation check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const bool jsonl = format == "json-lines";
  try {
    if (*build) {
      save_index(index_path, load_input(input, fasta), kEngines.at(engine_str));
      return 0;
    }

    if (*count || *locate || *ms) {
      auto ix = load_index(index_path);
      CLI::App* active = *count ? count : (*locate ? locate : ms);
      if (active->count("--engine") > 0 && kEngines.at(engine_str) != ix.engine) {
        std::cerr << "index was built with engine " << engine_name(ix.engine) << '\n';
        return 1;
      }
      if (*ms && ix.engine != Engine::St) {
        std::cerr << "ms needs an index built with --engine st\n";
        return 1;
      }
      if (pattern.empty() && patterns_file.empty()) {
        std::cerr << "give --pattern or --patterns\n";
        return 1;
      }
      int errors = 0;
      auto queries = read_patterns(pattern, patterns_file);
      for (std::size_t q = 0; q < queries.size(); ++q) {
        const auto& text = queries[q];
        if (*ms) {
          // Bytes outside the alphabet become a symbol that matches nothing.
          std::vector<Symbol> s;
          auto none = static_cast<Symbol>(std::min(ix.map.sigma() + 1, 255));
          for (char ch : text) s.push_back(ix.map.symbol(static_cast<std::uint8_t>(ch)).value_or(none));
          auto values = std::get<CdawgSuffixTree>(ix.ix).matching_statistics(s);
          if (jsonl) {
            std::cout << json{{"query", q + 1}, {"ms", values}}.dump() << '\n';
          } else {
            for (std::size_t i = 0; i < values.size(); ++i) std::cout << q + 1 << '\t' << i + 1 << '\t' << values[i] << '\n';
          }
          continue;
        }
        auto p = encode(ix.map, text);
        if (!p || p->empty()) {
          ++errors;
          std::string why = p ? "empty pattern" : "pattern has bytes absent from the text";
          if (jsonl) {
            std::cout << json{{"pattern", text}, {"error", why}}.dump() << '\n';
          } else {
            std::cout << "error\t" << why << '\n';
          }
          continue;
        }
        if (*count) {
          pos_t c = ix.rlbwt().count(*p);
          if (jsonl) {
            std::cout << json{{"pattern", text}, {"count", c}}.dump() << '\n';
          } else {
            std::cout << c << '\n';
          }
          continue;
        }
        if (ix.engine == Engine::LzRlbwt) {
          auto r = std::get<LzRlbwtIndex>(ix.ix).locate(*p);
          if (jsonl) {
            std::cout << json{{"pattern", text}, {"positions", r.all()}, {"primary", r.primary}, {"secondary", r.secondary}}.dump() << '\n';
          } else if (tag) {
            std::vector<std::pair<pos_t, char>> tagged;
            for (pos_t x : r.primary) tagged.emplace_back(x, 'p');
            for (pos_t x : r.secondary) tagged.emplace_back(x, 's');
            std::sort(tagged.begin(), tagged.end());
            std::string line;
            for (const auto& [x, t] : tagged) line += (line.empty() ? "" : " ") + std::to_string(x) + t;
            std::cout << line << '\n';
          } else {
            std::cout << join(r.all()) << '\n';
          }
          continue;
        }
        std::vector<pos_t> positions;
        if (ix.engine == Engine::Cdawg) {
          positions = std::get<CdawgRlbwtIndex>(ix.ix).locate(*p);
        } else {
          const auto& st = std::get<CdawgSuffixTree>(ix.ix);
          positions = CdawgRlbwtIndex(st.rlbwt(), st.cdawg()).locate(*p);
        }
        if (jsonl) {
          std::cout << json{{"pattern", text}, {"positions", positions}}.dump() << '\n';
        } else {
          std::cout << join(positions) << '\n';
        }
      }
      return errors > 0 ? 2 : 0;
    }

    if (*measures) {
      auto bytes = read_file(input);
      std::string payload;
      if (fasta || (!bytes.empty() && bytes.front() == '>')) {
        Text whole = ingest_fasta(bytes);
        payload = whole.decode(whole.payload());
      } else {
        payload = bytes;
      }
      if (payload.empty()) throw DataError("input is empty");
      const std::vector<std::string> cols{"prefix_length", "maximal_repeats", "e", "e_left", "r", "r_rev", "z", "z_rev"};
      std::vector<std::vector<double>> rows;
      for (auto len : sample_points(samples, payload.size())) {
        auto m = tree_measures(ingest_plain(std::string_view(payload).substr(0, len)));
        rows.push_back({static_cast<double>(len), static_cast<double>(m.n_maximal_repeats - (exclude_empty ? 1 : 0)),
                        static_cast<double>(m.e), static_cast<double>(m.e_left), static_cast<double>(m.r),
                        static_cast<double>(m.r_rev), static_cast<double>(m.z), static_cast<double>(m.z_rev)});
      }
      if (normalize) {
        const auto base = rows.front();
        for (auto& row : rows) {
          for (std::size_t c = 1; c < row.size(); ++c) row[c] = base[c] == 0 ? 0 : row[c] / base[c];
        }
      }
      auto cell = [&](double v) {
        std::ostringstream os;
        if (normalize && v != std::floor(v)) {
          os.precision(6);
          os << std::fixed << v;
        } else {
          os << static_cast<long long>(v);
        }
        return os.str();
      };
      if (!jsonl) {
        for (std::size_t c = 0; c < cols.size(); ++c) std::cout << (c ? "," : "") << cols[c];
        std::cout << '\n';
      }
      for (const auto& row : rows) {
        if (jsonl) {
          json j;
          for (std::size_t c = 0; c < cols.size(); ++c) j[cols[c]] = row[c];
          std::cout << j.dump() << '\n';
        } else {
          for (std::size_t c = 0; c < cols.size(); ++c) std::cout << (c ? "," : "") << cell(row[c]);
          std::cout << '\n';
        }
      }
      return 0;
    }

    if (*traverse) {
      auto ix = load_index(index_path);
      if (ix.engine != Engine::St) {
        std::cerr << "traverse needs an index built with --engine st\n";
        return 1;
      }
      const auto& st = std::get<CdawgSuffixTree>(ix.ix);
      std::size_t leaves = 0, internal = 0;
      std::map<pos_t, std::size_t> histogram;
      st.traverse([&](const LightStNodeId& v) {
        bool leaf = v.node == st.cdawg().sink();
        (leaf ? leaves : internal) += 1;
        if (stats) {
          ++histogram[v.depth];
        } else {
          std::cout << v.node << '\t' << v.depth << '\t' << (leaf ? "leaf" : "internal") << '\n';
        }
      });
      if (stats) {
        std::cout << "nodes\t" << leaves + internal << "\ninternal\t" << internal << "\nleaves\t" << leaves << '\n';
        for (auto [depth, k] : histogram) std::cout << "depth\t" << depth << '\t' << k << '\n';
      }
      return 0;
    }

    if (*selftest) {
      testing::set_rank_fault(inject_fault);
      int failures = run_selftest(st_opt, std::cout);
      std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << " (" << st_opt.iterations
                << " iterations, seed " << st_opt.seed << ")\n";
      return failures == 0 ? 0 : 3;
    }
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
