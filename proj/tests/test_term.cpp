#include "doctest.h"
#include "gen.hpp"
#include "reflex/error.hpp"
#include "reflex/term.hpp"

using namespace reflex;

TEST_CASE("parse builds left-associated applications") {
  CHECK(parse("k g1 g2") == apply(CLTerm::k(), {CLTerm::gen(1), CLTerm::gen(2)}));
  CHECK(parse("s (k i) x1") ==
        apply(CLTerm::s(), {CLTerm::app(CLTerm::k(), CLTerm::i()), CLTerm::ind(1)}));
  CHECK(parse("((e))") == CLTerm::e());
}

TEST_CASE("parse rejects malformed input with an offset") {
  CHECK_THROWS_AS(parse("x0"), SyntaxError);
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("k )"), SyntaxError);
  CHECK_THROWS_AS(parse("(k"), SyntaxError);
  CHECK_THROWS_AS(parse("y1"), SyntaxError);
  CHECK_THROWS_AS(parse("ks"), SyntaxError);
  CHECK_THROWS_AS(parse("x99999999999"), SyntaxError);
  try {
    parse("k  $");
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(to_string(parse("(s k) (k x1 g2)")) == "s k (k x1 g2)");
  CHECK(to_string(parse("x12")) == "x12");
}

TEST_CASE("fv") {
  CHECK(fv(CLTerm::k()).empty());
  CHECK(fv(CLTerm::app(CLTerm::ind(1), CLTerm::gen(2))) == IndSet{1});
  CHECK(fv(CLTerm::app(CLTerm::ind(2), CLTerm::ind(2))) == IndSet{2});
}

TEST_CASE("subst") {
  CHECK(subst(CLTerm::ind(1), 1, CLTerm::k()) == CLTerm::k());
  CHECK(subst(parse("x1 x2"), 1, CLTerm::gen(1)) == parse("g1 x2"));
  CHECK(subst(CLTerm::s(), 1, CLTerm::k()) == CLTerm::s());
  CHECK(subst_many(parse("x1 x2"), {{1, parse("x2")}, {2, parse("x1")}}) == parse("x2 x1"));
}

TEST_CASE("term properties on random terms") {
  testgen::Rng rng(11);
  for (int n = 0; n < 500; ++n) {
    CLTerm t = testgen::cl_term(rng, 6);
    CLTerm u = testgen::cl_term(rng, 3);
    const auto i = static_cast<std::uint32_t>(1 + rng.below(3));
    CHECK(parse(to_string(t)) == t);
    CHECK(subst(t, i, CLTerm::ind(i)) == t);
    IndSet expect = fv(t);
    const bool occurs = expect.erase(i) > 0;
    if (occurs) {
      for (auto j : fv(u)) expect.insert(j);
    }
    CHECK(fv(subst(t, i, u)) == expect);
  }
}
