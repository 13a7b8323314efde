#include "reflex/kernels.hpp"

#include <exception>

#include "reflex/rewrite.hpp"

namespace reflex {

namespace {

// Runs f(k) for k in [0, n), rethrowing the lowest-index exception.
template <class F>
void for_each_index(std::size_t n, Exec exec, const F& f) {
  if (exec == Exec::Serial) {
    for (std::size_t k = 0; k < n; ++k) f(k);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    try {
      f(static_cast<std::size_t>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

Verdict evaluate_equation(const PreModel& model, const Equation& eq, const Fuel& fuel) {
  if (is_closed(eq.lhs) && is_closed(eq.rhs)) {
    return model.eq(eval_closed(model, eq.lhs), eval_closed(model, eq.rhs), fuel);
  }
  return model.poly_eq(eq.lhs, eq.rhs, fuel);
}

std::vector<Verdict> evaluate_equations(const PreModel& model, std::span<const Equation> eqs, const Fuel& fuel,
                                        Exec exec) {
  std::vector<Verdict> out(eqs.size(), Verdict::equal());
  for_each_index(eqs.size(), exec, [&](std::size_t k) { out[k] = evaluate_equation(model, eqs[k], fuel); });
  return out;
}

std::vector<Verdict> cl_eq_batch(std::span<const std::pair<CLTerm, CLTerm>> pairs, const Fuel& fuel, Exec exec) {
  std::vector<Verdict> out(pairs.size(), Verdict::equal());
  for_each_index(pairs.size(), exec, [&](std::size_t k) { out[k] = cl_eq(pairs[k].first, pairs[k].second, fuel); });
  return out;
}

}  // namespace reflex
