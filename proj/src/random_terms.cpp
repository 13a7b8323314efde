#include "reflex/random_terms.hpp"

namespace reflex {

std::vector<CLTerm> default_atoms() {
  return {CLTerm::ind(1), CLTerm::ind(2), CLTerm::ind(3), CLTerm::gen(1), CLTerm::gen(2),
          CLTerm::k(),    CLTerm::s(),    CLTerm::i(),    CLTerm::e()};
}

namespace {

CLTerm grow(TermRng& rng, std::span<const CLTerm> atoms, int depth, unsigned pct) {
  if (depth <= 0 || !rng.chance(pct)) return atoms[rng.below(atoms.size())];
  CLTerm f = grow(rng, atoms, depth - 1, pct);
  return CLTerm::app(std::move(f), grow(rng, atoms, depth - 1, pct));
}

}  // namespace

CLTerm random_term(TermRng& rng, std::span<const CLTerm> atoms, const TermShape& shape) {
  return grow(rng, atoms, shape.max_depth, shape.app_percent);
}

}  // namespace reflex
