#pragma once

// Small random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "reflex/lambda.hpp"
#include "reflex/term.hpp"

namespace testgen {

using reflex::CLTerm;
using reflex::LamTerm;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng() % n; }
  bool coin(unsigned percent) { return below(100) < percent; }
};

// Atoms drawn from k s i e, x1..inds, g1..gens.
inline CLTerm cl_atom(Rng& r, std::uint32_t inds, std::uint32_t gens) {
  const std::uint64_t n = 4 + inds + gens;
  const std::uint64_t c = r.below(n);
  if (c < 4) return CLTerm::prim(static_cast<reflex::Prim>(c));
  if (c < 4 + inds) return CLTerm::ind(static_cast<std::uint32_t>(c - 3));
  return CLTerm::gen(static_cast<std::uint32_t>(c - 3 - inds));
}

inline CLTerm cl_term(Rng& r, int depth, std::uint32_t inds = 3, std::uint32_t gens = 2, unsigned app_pct = 45) {
  if (depth <= 0 || !r.coin(app_pct)) return cl_atom(r, inds, gens);
  CLTerm f = cl_term(r, depth - 1, inds, gens, app_pct);
  return CLTerm::app(f, cl_term(r, depth - 1, inds, gens, app_pct));
}

// Closed-or-open lambda term with `binders` enclosing abstractions.
inline LamTerm lam_term(Rng& r, int depth, std::uint32_t binders = 0) {
  const std::uint64_t c = depth <= 0 ? 0 : r.below(10);
  if (c < 3) {
    if (binders > 0 && r.coin(70)) return LamTerm::bound(static_cast<std::uint32_t>(r.below(binders)));
    return LamTerm::free(static_cast<std::uint32_t>(1 + r.below(3)));
  }
  if (c < 6) return LamTerm::abs(lam_term(r, depth - 1, binders + 1));
  LamTerm f = lam_term(r, depth - 1, binders);
  return LamTerm::app(f, lam_term(r, depth - 1, binders));
}

}  // namespace testgen
