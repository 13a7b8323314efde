#include "doctest.h"
#include "reflex/ccm.hpp"
#include "reflex/derivation.hpp"
#include "reflex/suites.hpp"

using namespace reflex;

TEST_CASE("ccm element operations in lambda-beta") {
  ModelPtr lb = lambda_beta_model();
  CcmContext ctx(lb);
  const Element I = ctx.element(ctx.unit());
  CHECK(lb->eq(ctx.compose(I, I), I).is_equal());
  CHECK(to_string(*lambda_term(I)) == "\\x. x");

  const Element a = lb->app(lb->e(), lb->generic(1));
  const Element b = lb->app(lb->e(), lb->generic(2));
  CHECK(lb->eq(ctx.compose(lb->i(), lb->generic(1)), a).is_equal());
  const Element p = ctx.element(ctx.p()), q = ctx.element(ctx.q()), ev = ctx.element(ctx.eval());
  CHECK(lb->eq(ctx.compose(p, ctx.pair(a, b)), a).is_equal());
  CHECK(lb->eq(ctx.compose(ev, ctx.pair(p, q)), ev).is_equal());
  CHECK(lb->eq(ctx.compose(ctx.curry(ev), ctx.curry(a)), ctx.curry(a)).is_equal());
}

TEST_CASE("cached ccm elements are e-fixed in lambda-beta") {
  ModelPtr lb = lambda_beta_model();
  CcmContext ctx(lb);
  for (const CLTerm& t : {ctx.unit(), ctx.p(), ctx.q(), ctx.eval(), ctx.pairing_terms().pair}) {
    const Element x = ctx.element(t);
    CHECK(lb->eq(lb->app(lb->e(), x), x).is_equal());
  }
}

TEST_CASE("ccm in the free model") {
  ModelPtr free = free_cl_model(2);
  CcmContext ctx(free);
  const Element c = ctx.compose(free->generic(1), free->generic(2));
  CHECK(free->eq(c, free->app(free->generic(1), free->generic(2))).is_not_equal());
  const SuiteReport r = run_suite(free, "ccm");
  CHECK(r.summary.status == Status::Fails);
  CHECK(r.equations[0].verdict.is_not_equal());
  CHECK(r.equations[1].verdict.is_not_equal());
}

TEST_CASE("star and dag structure maps are ~1-equal") {
  for (ModelPtr m : {free_cl_model(2), lambda_beta_model()}) {
    CcmContext star(m, AbsMode::Star), dag(m, AbsMode::Dag);
    CHECK(decide_sim1(*m, star.element(star.p()), dag.element(dag.p())).is_equal());
    CHECK(decide_sim1(*m, star.element(star.q()), dag.element(dag.q())).is_equal());
    CHECK(decide_sim1(*m, star.element(star.eval()), dag.element(dag.eval())).is_equal());
    CHECK(decide_sim1(*m, star.element(star.pairing_terms().pair), dag.element(dag.pairing_terms().pair)).is_equal());
  }
}

TEST_CASE("ccm laws in lambda-beta") {
  const SuiteReport r = run_suite(lambda_beta_model(), "ccm");
  CHECK(r.equations.size() == 10);
  for (const auto& e : r.equations) {
    CAPTURE(e.id);
    CHECK(e.verdict.is_equal());
  }
}
