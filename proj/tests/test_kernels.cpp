#include "doctest.h"
#include "gen.hpp"
#include "reflex/error.hpp"
#include "reflex/kernels.hpp"
#include "reflex/rewrite.hpp"

using namespace reflex;

TEST_CASE("parallel kernels match the serial reference") {
  testgen::Rng rng(77);
  std::vector<std::pair<CLTerm, CLTerm>> pairs;
  std::vector<Equation> eqs;
  for (int n = 0; n < 300; ++n) {
    CLTerm t = testgen::cl_term(rng, 5);
    CLTerm u = testgen::cl_term(rng, 5);
    pairs.emplace_back(t, u);
    eqs.push_back({std::to_string(n), t, u});
  }
  const Fuel fuel{200, 5000};
  CHECK(cl_eq_batch(pairs, fuel, Exec::Serial) == cl_eq_batch(pairs, fuel, Exec::Parallel));
  for (ModelPtr m : {free_cl_model(2), lambda_beta_model()}) {
    CHECK(evaluate_equations(*m, eqs, fuel, Exec::Serial) == evaluate_equations(*m, eqs, fuel, Exec::Parallel));
  }
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    CHECK(cl_eq_batch(std::span(&pairs[n], 1), fuel, Exec::Serial)[0] == cl_eq(pairs[n].first, pairs[n].second, fuel));
  }
}

TEST_CASE("closed equations are evaluated, open ones go through poly_eq") {
  ModelPtr free = free_cl_model(1);
  CHECK(evaluate_equation(*free, {"c", parse("i g1"), parse("g1")}, {}).is_equal());
  CHECK(evaluate_equation(*free, {"o", parse("k x1 g1"), parse("x1")}, {}).is_equal());
}

TEST_CASE("kernel errors surface from the lowest index") {
  ModelPtr free = free_cl_model(1);
  std::vector<Equation> eqs = {{"ok", parse("k"), parse("k")}, {"bad", parse("g2"), parse("k")}, {"bad2", parse("g3"), parse("k")}};
  for (Exec exec : {Exec::Serial, Exec::Parallel}) {
    try {
      evaluate_equations(*free, eqs, {}, exec);
      FAIL("expected OutOfGenerators");
    } catch (const OutOfGenerators& e) {
      CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
  }
}
