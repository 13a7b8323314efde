#pragma once

// Batch equality kernels. Serial is the reference; Parallel distributes
// independent equations over OpenMP threads and returns identical results
// in the same order.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reflex/model.hpp"

namespace reflex {

enum class Exec { Serial, Parallel };

/// One equation between CL terms. Closed equations are decided by
/// evaluating both sides; open ones through poly_eq.
struct Equation {
  std::string id;
  CLTerm lhs;
  CLTerm rhs;
};

Verdict evaluate_equation(const PreModel& model, const Equation& eq, const Fuel& fuel);

std::vector<Verdict> evaluate_equations(const PreModel& model, std::span<const Equation> eqs, const Fuel& fuel,
                                        Exec exec = Exec::Parallel);

/// cl_eq over pairs, no model.
std::vector<Verdict> cl_eq_batch(std::span<const std::pair<CLTerm, CLTerm>> pairs, const Fuel& fuel,
                                 Exec exec = Exec::Parallel);

}  // namespace reflex
