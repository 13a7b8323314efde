#pragma once

// Weak reduction of CL terms: K t u -> t, S t u v -> t v (u v), I t -> t,
// E t u -> t u, and, when a model is supplied, {a} {b} -> {a.b}.

#include <optional>

#include "reflex/term.hpp"
#include "reflex/verdict.hpp"

namespace reflex {

class PreModel;

/// Contracts the leftmost-outermost redex; empty when t is weak normal.
/// Element collapse fires only if model is non-null.
std::optional<CLTerm> weak_step(const CLTerm& t, const PreModel* model = nullptr);

/// Leftmost-outermost reduction to weak normal form within the budget.
Normalized<CLTerm> weak_normalize(const CLTerm& t, const Fuel& fuel = {}, const PreModel* model = nullptr);

/// NotEqual only when both sides reached distinct normal forms.
Verdict cl_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel = {}, const PreModel* model = nullptr);

}  // namespace reflex
