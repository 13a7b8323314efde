#pragma once

// Seeded random CL terms. Draws use mt19937_64 with modular reduction so
// sequences are identical across standard libraries.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "reflex/term.hpp"

namespace reflex {

class TermRng {
 public:
  explicit TermRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 eng_;
};

struct TermShape {
  int max_depth = 6;
  unsigned app_percent = 45;  // chance of an application node above depth 0
};

/// x1..x3, g1, g2, k, s, i, e.
std::vector<CLTerm> default_atoms();

/// Random term with atoms drawn uniformly from `atoms`.
CLTerm random_term(TermRng& rng, std::span<const CLTerm> atoms, const TermShape& shape = {});

}  // namespace reflex
