#include "doctest.h"
#include "gen.hpp"
#include "reflex/abstraction.hpp"
#include "reflex/constructions.hpp"
#include "reflex/derivation.hpp"
#include "reflex/error.hpp"
#include "reflex/rewrite.hpp"
#include "reflex/suites.hpp"

using namespace reflex;

namespace {

CLTerm P(const char* s) { return parse(s); }

// Element of a polynomial model; x_j read as its j-th generic.
Element pe(const ModelPtr& pm, const char* text) {
  std::map<std::uint32_t, Element> assign;
  const CLTerm t = P(text);
  for (auto j : fv(t)) assign.emplace(j, pm->generic(j));
  return eval_poly(*pm, t, assign);
}

CLTerm one_var_term(testgen::Rng& rng, int depth) { return testgen::cl_term(rng, depth, 1, 2); }

}  // namespace

TEST_CASE("poly_model examples") {
  ModelPtr free = free_cl_model(2);
  ModelPtr p1 = poly_model(free, 1);
  CHECK(p1->eq(pe(p1, "k x1 g1"), pe(p1, "x1")).is_equal());
  CHECK(p1->eq(pe(p1, "x1"), p1->generic(2)).is_not_equal());

  ModelPtr p2 = poly_model(lambda_beta_model(), 2);
  CHECK(p2->eq(pe(p2, "e x1 x2"), pe(p2, "x1 x2")).is_equal());

  ModelPtr p0 = poly_model(free, 0);
  CHECK(p0->eq(pe(p0, "s k k g1"), pe(p0, "g1")).is_equal());
  CHECK(p0->eq(pe(p0, "e g1"), pe(p0, "g1")).is_not_equal());
}

TEST_CASE("poly_model generics continue with base generics") {
  ModelPtr free = free_cl_model(2);
  ModelPtr p1 = poly_model(free, 1);
  CHECK(p1->eq(eval_closed(*p1, P("g1")), pe(p1, "x1")).is_equal());
  CHECK(p1->eq(p1->generic(1), p1->generic(2)).is_not_equal());
  CHECK(p1->eq(p1->generic(2), p1->generic(3)).is_not_equal());
  CHECK(p1->eq(pe(p1, "k g3 x1"), p1->generic(3)).is_equal());
  CHECK_THROWS_AS(p1->generic(4), OutOfGenerators);
}

TEST_CASE("poly over poly over 0 matches poly") {
  testgen::Rng rng(5);
  ModelPtr free = free_cl_model(2);
  ModelPtr direct = poly_model(free, 2);
  ModelPtr nested = poly_model(poly_model(free, 0), 2);
  for (int n = 0; n < 100; ++n) {
    CLTerm t = testgen::cl_term(rng, 4, 2, 2);
    CLTerm u = testgen::cl_term(rng, 4, 2, 2);
    CHECK(direct->poly_eq(t, u) == nested->poly_eq(t, u));
  }
}

TEST_CASE("eval_poly") {
  ModelPtr free = free_cl_model(2);
  Element v = eval_poly(*free, P("x1 x2"), {{1, free->k()}, {2, free->s()}});
  CHECK(*free_term(v) == P("k s"));
  ModelPtr lb = lambda_beta_model();
  CHECK(lb->eq(eval_poly(*lb, P("e x1"), {{1, lb->k()}}), lb->k()).is_equal());
  CHECK_THROWS_AS(eval_poly(*free, P("x1"), {}), UnassignedIndeterminate);
}

TEST_CASE("eval_poly is a homomorphism") {
  testgen::Rng rng(8);
  ModelPtr lb = lambda_beta_model();
  const std::map<std::uint32_t, Element> assign{{1, lb->generic(1)}, {2, eval_closed(*lb, P("s k"))}};
  for (int n = 0; n < 60; ++n) {
    CLTerm t = testgen::cl_term(rng, 3, 2, 1);
    CLTerm u = testgen::cl_term(rng, 3, 2, 1);
    Element whole = eval_poly(*lb, CLTerm::app(t, u), assign);
    Element parts = lb->app(eval_poly(*lb, t, assign), eval_poly(*lb, u, assign));
    Verdict v = lb->eq(whole, parts);
    if (!v.is_unknown()) CHECK(v.is_equal());
  }
}

TEST_CASE("bar_a1 examples") {
  ModelPtr free = free_cl_model(2);
  auto bar = bar_a1(free);
  const Element g1 = bar->generic(1), g2 = bar->generic(2);
  CHECK(bar->eq(bar->app(bar->app(bar->k(), g1), g2), g1).is_equal());
  const Element kg1 = bar->lift(free->app(free->k(), free->generic(1)));
  CHECK(bar->eq(bar->app(kg1, bar->lift(free->i())), g1).is_equal());
  CHECK(bar->eq(g1, g2).is_not_equal());
  CHECK(run_suite(bar, "premodel").summary.status == Status::Holds);
}

TEST_CASE("bar_a1 over free agrees with poly_model over free") {
  testgen::Rng rng(21);
  ModelPtr free = free_cl_model(2);
  auto bar = bar_a1(free);
  ModelPtr p1 = poly_model(free, 1);
  int compared = 0;
  for (int n = 0; n < 150; ++n) {
    CLTerm t = one_var_term(rng, 4);
    CLTerm u = n % 3 ? one_var_term(rng, 4) : P("i");
    const Element a = bar->lift(eval_closed(*free, lam_star(1, t)));
    const Element b = bar->lift(eval_closed(*free, lam_star(1, u)));
    Verdict vb = bar->eq(a, b);
    Verdict vp = p1->poly_eq(t, u);
    if (vb.is_unknown() || vp.is_unknown()) continue;
    ++compared;
    CHECK(vb.kind() == vp.kind());
  }
  CHECK(compared > 100);
}

TEST_CASE("a_star examples") {
  ModelPtr lb = lambda_beta_model();
  auto star = a_star(lb);
  CHECK(star->reflexivity_check().is_equal());
  const Element a = lb->generic(1);
  const Element ea = lb->app(lb->e(), a);
  CHECK(lb->eq(lb->app(lb->e(), ea), ea).is_equal());
  CHECK(run_suite(star, "premodel").summary.status == Status::Holds);

  ModelPtr free = free_cl_model(2);
  auto fstar = a_star(free);
  CHECK(fstar->reflexivity_check().is_not_equal());
  const Element g1 = fstar->coerce(free->generic(1));
  CHECK(*free_term(fstar->base_element(g1)) == P("e g1"));
}

TEST_CASE("a_star and bar_a1 agree through e") {
  testgen::Rng rng(4);
  ModelPtr lb = lambda_beta_model();
  auto star = a_star(lb);
  auto bar = bar_a1(lb);
  for (int n = 0; n < 60; ++n) {
    const Element a = eval_closed(*lb, testgen::cl_term(rng, 4, 0, 2));
    const Element b = eval_closed(*lb, n % 2 ? testgen::cl_term(rng, 4, 0, 2) : P("s (k g1) i"));
    Verdict vs = star->eq(star->coerce(a), star->coerce(b));
    Verdict vb = bar->eq(bar->lift(lb->app(lb->e(), a)), bar->lift(lb->app(lb->e(), b)));
    CHECK(vs.kind() == vb.kind());
  }
}

TEST_CASE("iso_bar round trips") {
  ModelPtr free = free_cl_model(3);
  CHECK(iso_bar_forward(*free, P("x1 x1")).is_equal());
  CHECK(iso_bar_forward(*free, P("g1")).is_equal());
  CHECK(iso_bar_backward(*free, free->generic(1)).is_equal());
  testgen::Rng rng(30);
  for (int n = 0; n < 100; ++n) {
    CHECK_FALSE(iso_bar_forward(*free, one_var_term(rng, 5)).is_not_equal());
    CHECK_FALSE(iso_bar_backward(*free, eval_closed(*free, testgen::cl_term(rng, 4, 0, 3))).is_not_equal());
  }
}

TEST_CASE("retractions") {
  for (ModelPtr m : {free_cl_model(2), lambda_beta_model()}) {
    CHECK(retract_xy_to_x(*m, P("x1")).is_equal());
    CHECK(retract_xy_to_x(*m, P("x2")).is_equal());
    CHECK(retract_xy_to_x(*m, P("g1")).is_equal());
    CHECK(retract_fragment(*m, 1, 3, P("x1")).is_equal());
    CHECK(retract_fragment(*m, 0, 1, P("g1")).is_equal());
    CHECK(retract_fragment(*m, 2, 2, P("x2 x1 (s x1)")).is_equal());
  }
  ModelPtr free = free_cl_model(2);
  CHECK_THROWS_AS(retract_fragment(*free, 3, 2, P("x1")), Error);
  CHECK_THROWS_AS(retract_fragment(*free, 1, 2, P("x2")), Error);
}

TEST_CASE("derived models over lambda-beta pass the premodel suite") {
  ModelPtr lb = lambda_beta_model();
  for (ModelPtr m : std::initializer_list<ModelPtr>{poly_model(lb, 1), bar_a1(lb), a_star(lb)}) {
    CAPTURE(m->name());
    CHECK(run_suite(m, "premodel").summary.status == Status::Holds);
  }
}
