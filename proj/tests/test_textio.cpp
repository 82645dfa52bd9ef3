#include <doctest.h>

#include "corpus.hpp"
#include "crads/text.hpp"

using namespace crads;

TEST_SUITE("textio") {
  TEST_CASE("plain ingest remaps bytes in order and appends the terminator") {
    Text t = ingest_plain("0000");
    CHECK(t.size() == 5);
    CHECK(t.sigma() == 1);
    CHECK(std::vector<Symbol>(t.symbols().begin(), t.symbols().end()) == std::vector<Symbol>{1, 1, 1, 1, 0});

    Text b = ingest_plain("banana");
    CHECK(b.sigma() == 3);
    CHECK(std::vector<Symbol>(b.symbols().begin(), b.symbols().end()) == std::vector<Symbol>{2, 1, 3, 1, 3, 1, 0});
    CHECK(b.decode(b.payload()) == "banana");

    Text f = ingest_plain("010010001");
    CHECK(f.size() == 10);
    CHECK(f.sigma() == 2);
  }

  TEST_CASE("order preservation of the remap") {
    Text t = ingest_plain("zebra!");
    const auto& bytes = t.symbol_map().bytes();
    for (std::size_t i = 1; i < bytes.size(); ++i) CHECK(bytes[i - 1] < bytes[i]);
    for (char c : std::string("zebra!")) {
      for (char d : std::string("zebra!")) {
        if (c < d) CHECK(*t.symbol_map().symbol(static_cast<std::uint8_t>(c)) < *t.symbol_map().symbol(static_cast<std::uint8_t>(d)));
      }
    }
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(ingest_plain(""), DataError);
    CHECK_THROWS_AS(ingest_plain(std::string("a\0b", 3)), DataError);
    CHECK_THROWS_AS(ingest_fasta("ACGT\n>r1\nAC\n"), DataError);
    CHECK_THROWS_AS(ingest_fasta(">r1\n"), DataError);
  }

  TEST_CASE("fasta records are concatenated") {
    Text a = ingest_fasta(">r1\nAC\n>r2\nGT\n");
    CHECK(a.size() == 5);
    CHECK(a.decode(a.payload()) == "ACGT");
    Text b = ingest_fasta(">r1\nAA\nAA\n");
    CHECK(b.decode(b.payload()) == "AAAA");
    CHECK(b.size() == 5);
    Text c = ingest_fasta(">r1\r\nAC\r\n\r\n>r2\nGT");
    CHECK(c.decode(c.payload()) == "ACGT");

    std::mt19937_64 rng(7);
    std::string rec = corpus::random_dna(rng, 1024);
    std::string folded;
    for (std::size_t i = 0; i < rec.size(); i += 60) folded += rec.substr(i, 60) + "\n";
    Text d = ingest_fasta(">x\n" + folded + ">y\n" + folded);
    CHECK(d.size() == 2049);
    CHECK(d.sigma() == 4);
  }

  TEST_CASE("reverse keeps the terminator last and is an involution") {
    Text t(std::vector<Symbol>{2, 1, 3, 0}, SymbolMap(std::vector<std::uint8_t>{'a', 'b', 'c'}));
    Text r = reverse_text(t);
    CHECK(std::vector<Symbol>(r.symbols().begin(), r.symbols().end()) == std::vector<Symbol>{3, 1, 2, 0});
    CHECK(r.symbol_map() == t.symbol_map());

    Text pal = ingest_plain("abcba");
    CHECK(reverse_text(pal) == pal);

    for (const auto& x : corpus::random_texts(11, 100, 2, 80)) CHECK(reverse_text(reverse_text(x)) == x);
  }

  TEST_CASE("text invariants are enforced") {
    CHECK_THROWS(Text(std::vector<Symbol>{1, 1}, SymbolMap(std::vector<std::uint8_t>{'a'})));
    CHECK_THROWS(Text(std::vector<Symbol>{1, 0, 1, 0}, SymbolMap(std::vector<std::uint8_t>{'a'})));
    CHECK_THROWS(Text(std::vector<Symbol>{1, 0}, SymbolMap(std::vector<std::uint8_t>{'a', 'b'})));
    CHECK_NOTHROW(Text(std::vector<Symbol>{0}, SymbolMap()));
  }
}
