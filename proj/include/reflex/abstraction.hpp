#pragma once

// Bracket abstraction (lambda-star and lambda-dagger), the extensionality
// combinators eps(n), and the pairing combinators.

#include <cstdint>
#include <span>
#include <vector>

#include "reflex/term.hpp"

namespace reflex {

enum class AbsMode { Star, Dag };

/// lambda* x_i. t
CLTerm lam_star(std::uint32_t i, const CLTerm& t);

/// lambda-dagger x_i. t. The (a x_i) -> e a clause applies to atomic a only.
CLTerm lam_dag(std::uint32_t i, const CLTerm& t);

CLTerm lam_abstract(AbsMode mode, std::uint32_t i, const CLTerm& t);

/// Abstracts indices right to left; throws DuplicateIndex on repeats and
/// Error on an empty list.
CLTerm lam_multi(AbsMode mode, std::span<const std::uint32_t> indices, const CLTerm& t);
CLTerm lam_multi(AbsMode mode, std::initializer_list<std::uint32_t> indices, const CLTerm& t);

/// eps(1) = e, eps(n+1) = s (k e) (s (k eps(n))). Throws Error for n = 0.
CLTerm eps(std::uint32_t n);

struct Pairing {
  CLTerm tru;
  CLTerm fls;
  CLTerm pair;
};

Pairing pairing(AbsMode mode);

/// pair t u, i.e. [t, u].
CLTerm make_pair(AbsMode mode, const CLTerm& t, const CLTerm& u);

/// Smallest indeterminate index not occurring in any of the terms.
std::uint32_t fresh_index(std::initializer_list<CLTerm> terms);

}  // namespace reflex
