#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "crads/text.hpp"

namespace crads {

/// Random text S# with |S| = n - 1 over the first `sigma` letters of "ACGT..." order; every
/// letter of the alphabet is forced to occur when n - 1 >= sigma.
Text random_text(std::mt19937_64& rng, pos_t n, int sigma);

struct SelftestOptions {
  pos_t n = 64;
  int sigma = 3;
  std::uint64_t seed = 1;
  int iterations = 50;
};

/// Oracle-equivalence checks on random texts. Writes one line per failing case, with the
/// seed that reproduces it, and returns the number of failures.
int run_selftest(const SelftestOptions& opt, std::ostream& log);

}  // namespace crads
