#include "doctest.h"
#include "gen.hpp"
#include "reflex/abstraction.hpp"
#include "reflex/error.hpp"
#include "reflex/rewrite.hpp"

using namespace reflex;

namespace {
CLTerm P(const char* s) { return parse(s); }
}  // namespace

TEST_CASE("lam_star clauses") {
  CHECK(lam_star(1, P("x1")) == P("i"));
  CHECK(lam_star(1, P("g1")) == P("k g1"));
  CHECK(lam_star(1, P("x1 x1")) == P("s i i"));
  CHECK(lam_star(1, P("x2")) == P("k x2"));
  // Closed compound terms still go through the application clause.
  CHECK(lam_star(1, P("k s")) == P("s (k k) (k s)"));
}

TEST_CASE("lam_dag clauses") {
  CHECK(lam_dag(1, P("x1")) == P("e i"));
  CHECK(lam_dag(1, P("g1 x1")) == P("e g1"));
  CHECK(lam_dag(1, P("x1 x1")) == P("e (s (e i) (e i))"));
  CHECK(lam_dag(2, P("x1")) == P("e (k x1)"));
  // Compound heads do not take the eta clause.
  CHECK(lam_dag(1, P("k g1 x1")) == P("e (s (e (s (e (k k)) (e (k g1)))) (e i))"));
}

TEST_CASE("lam_multi") {
  CHECK(lam_multi(AbsMode::Star, {1, 2}, P("x1")) == lam_star(1, lam_star(2, P("x1"))));
  CHECK(lam_multi(AbsMode::Star, {1, 2}, P("x1")) == P("s (k k) i"));
  CHECK(lam_multi(AbsMode::Dag, {1}, P("x1")) == P("e i"));
  CHECK_THROWS_AS(lam_multi(AbsMode::Star, {1, 1}, P("x1")), DuplicateIndex);
}

TEST_CASE("eps") {
  CHECK(eps(1) == P("e"));
  CHECK(eps(2) == P("s (k e) (s (k e))"));
  CHECK(eps(3) == P("s (k e) (s (k (s (k e) (s (k e)))))"));
  CHECK_THROWS_AS(eps(0), Error);
}

TEST_CASE("pairing") {
  Pairing star = pairing(AbsMode::Star);
  CHECK(star.tru == P("k"));
  CHECK(star.fls == lam_multi(AbsMode::Star, {1, 2}, P("x2")));
  CHECK(cl_eq(apply(star.pair, {P("g1"), P("g2"), P("k")}), P("g1")).is_equal());
  CHECK(cl_eq(apply(star.pair, {P("g1"), P("g2"), star.fls}), P("g2")).is_equal());
  Pairing dag = pairing(AbsMode::Dag);
  CHECK(dag.tru == P("k"));
  CHECK(cl_eq(apply(dag.pair, {P("g1"), P("g2"), dag.fls}), P("g2")).is_equal());
}

TEST_CASE("abstraction properties on random terms") {
  testgen::Rng rng(77);
  const Fuel fuel{5000, 100000};
  for (int n = 0; n < 300; ++n) {
    CLTerm t = testgen::cl_term(rng, 5, 3, 3);
    CLTerm u = testgen::cl_term(rng, 3, 3, 3);
    const auto i = static_cast<std::uint32_t>(1 + rng.below(3));
    IndSet expect = fv(t);
    expect.erase(i);
    for (AbsMode mode : {AbsMode::Star, AbsMode::Dag}) {
      CLTerm a = lam_abstract(mode, i, t);
      CHECK(fv(a) == expect);
      CHECK_FALSE(cl_eq(CLTerm::app(a, u), subst(t, i, u), fuel).is_not_equal());
    }
    const CLTerm xf = CLTerm::ind(4);
    CHECK_FALSE(cl_eq(CLTerm::app(lam_star(i, t), xf), CLTerm::app(lam_dag(i, t), xf), fuel).is_not_equal());
  }
}

TEST_CASE("eps laws on random arguments") {
  testgen::Rng rng(8);
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (int r = 0; r < 40; ++r) {
      CLTerm s = testgen::cl_term(rng, 3);
      CLTerm t = testgen::cl_term(rng, 3);
      CHECK_FALSE(cl_eq(apply(eps(n + 1), {s, t}), CLTerm::app(eps(n), CLTerm::app(s, t))).is_not_equal());
    }
    CLTerm lhs = CLTerm::app(eps(n), CLTerm::gen(1));
    CLTerm rhs = CLTerm::gen(1);
    for (std::uint32_t j = 1; j <= n; ++j) {
      lhs = CLTerm::app(lhs, CLTerm::ind(j));
      rhs = CLTerm::app(rhs, CLTerm::ind(j));
    }
    CHECK(cl_eq(lhs, rhs).is_equal());
  }
}
