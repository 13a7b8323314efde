#include <algorithm>

#include "doctest.h"
#include "reflex/constructions.hpp"
#include "reflex/error.hpp"
#include "reflex/suites.hpp"

using namespace reflex;

namespace {

bool has_id(const Summary& s, const std::string& id) {
  return std::find(s.ids.begin(), s.ids.end(), id) != s.ids.end();
}

const EquationResult& find(const SuiteReport& r, const std::string& id) {
  for (const auto& e : r.equations) {
    if (e.id == id) return e;
  }
  throw std::runtime_error("no equation " + id);
}

const char* kCore[] = {"premodel", "reflexivity7", "strong-reflexivity7", "stability", "curry5", "selinger9",
                       "ca",       "l2",           "krivine",             "epsilon",   "ccm"};

}  // namespace

TEST_CASE("lambda-beta positive control") {
  ModelPtr lb = lambda_beta_model();
  for (const char* s : kCore) {
    CAPTURE(s);
    const SuiteReport r = run_suite(lb, s);
    CHECK(r.summary.status == Status::Holds);
    CHECK(r.summary.ids.empty());
    CHECK_FALSE(r.equations.empty());
  }
}

TEST_CASE("suite sizes") {
  CHECK(suite_equations("premodel").size() == 4);
  CHECK(suite_equations("reflexivity7").size() == 7);
  CHECK(suite_equations("strong-reflexivity7").size() == 7);
  CHECK(suite_equations("curry5").size() == 5);
  CHECK(suite_equations("selinger9").size() == 9);
  CHECK(suite_equations("l2").size() == 4);
  CHECK(suite_equations("epsilon").size() == 16);
  for (const auto& e : suite_equations("strong-reflexivity7")) {
    CHECK(is_closed(e.lhs));
    CHECK(is_closed(e.rhs));
  }
  CHECK_THROWS_AS(suite_equations("nope"), UnknownSuite);
  CHECK_THROWS_AS(run_suite(lambda_beta_model(), "nope"), UnknownSuite);
}

TEST_CASE("free model negative control") {
  ModelPtr free = free_cl_model(2);
  const SuiteReport curry = run_suite(free, "curry5");
  CHECK(curry.summary.status == Status::Fails);
  const Verdict& v1 = find(curry, "1").verdict;
  REQUIRE(v1.is_not_equal());
  CHECK(v1.left() != v1.right());
  CHECK(v1.right() == "k");

  const SuiteReport sr = run_suite(free, "strong-reflexivity7");
  CHECK(sr.summary.status == Status::Fails);
  CHECK(has_id(sr.summary, "1"));
  CHECK(has_id(sr.summary, "3"));
  CHECK(find(sr, "3").verdict.right() == "e e");

  CHECK(run_suite(free, "premodel").summary.status == Status::Holds);
  CHECK(run_suite(free, "beta").summary.status == Status::Holds);
}

TEST_CASE("implication structure holds extensionally") {
  for (const char* sel : {"lambda-beta", "free-cl:2"}) {
    ModelPtr m = sel[0] == 'l' ? lambda_beta_model() : free_cl_model(2);
    auto status = [&](const char* s) { return run_suite(m, s).summary.status; };
    if (status("strong-reflexivity7") == Status::Holds) CHECK(status("reflexivity7") == Status::Holds);
    CHECK((status("selinger9") == Status::Holds) == (status("curry5") == Status::Holds));
    if (status("ca") == Status::Holds && status("l2") == Status::Holds && status("stability") == Status::Holds) {
      CHECK(status("curry5") == Status::Holds);
    }
  }
}

TEST_CASE("reflexivity of the polynomial extension") {
  CHECK(run_suite(poly_model(lambda_beta_model(), 1), "reflexivity7").summary.status == Status::Holds);
  CHECK(run_suite(poly_model(free_cl_model(2), 1), "reflexivity7").summary.status == Status::Fails);
}

TEST_CASE("constant reconstruction") {
  ModelPtr lb = lambda_beta_model();
  CHECK(run_suite(lb, "ca").summary.status == Status::Holds);
  CHECK(run_suite(lb, "lambda-from-acm").summary.status == Status::Holds);
  ModelPtr acm = lambda_from_acm(lb);
  // In a lambda algebra the reconstructed constants coincide with the originals.
  for (Prim p : {Prim::K, Prim::S, Prim::I, Prim::E}) {
    const CLTerm c = CLTerm::prim(p);
    CHECK(acm->poly_eq(c, c).is_equal());
  }
  CHECK(lb->eq(eval_closed(*lb, parse("s (k e) (s (k e)) k")), lb->k()).is_equal());
}

TEST_CASE("meyer-scott probe") {
  const SuiteReport lb = run_suite(lambda_beta_model(), "meyer-scott-probe");
  CHECK(lb.summary.status == Status::NoCounterexample);
  CHECK(lb.summary.note.find("no counterexample found in") == 0);
  const SuiteReport free = run_suite(free_cl_model(2), "meyer-scott-probe");
  CHECK(free.summary.status == Status::Fails);
}

TEST_CASE("generic-instance label") {
  const SuiteReport star = run_suite(a_star(lambda_beta_model()), "reflexivity7");
  CHECK(star.summary.note.find("generic-instance") != std::string::npos);
  CHECK(run_suite(lambda_beta_model(), "reflexivity7").summary.note.empty());
}

TEST_CASE("all combines suites with prefixed ids") {
  SuiteOptions opt;
  opt.beta_pairs = 5;
  const SuiteReport r = run_suite(lambda_beta_model(), "all", opt);
  CHECK(r.suite == "all");
  CHECK(r.summary.status == Status::Holds);
  CHECK(std::any_of(r.equations.begin(), r.equations.end(), [](const auto& e) { return e.id == "curry5/1"; }));
  CHECK(std::any_of(r.equations.begin(), r.equations.end(),
                    [](const auto& e) { return e.id.starts_with("meyer-scott-probe/"); }));
}

TEST_CASE("summarize precedence") {
  std::vector<EquationResult> rs = {{"a", "", "", Verdict::equal()}, {"b", "", "", Verdict::unknown(Cap::Fuel)}};
  CHECK(summarize(rs).status == Status::Inconclusive);
  rs.push_back({"c", "", "", Verdict::not_equal("x", "y")});
  const Summary s = summarize(rs);
  CHECK(s.status == Status::Fails);
  CHECK(s.ids == std::vector<std::string>{"c"});
  CHECK(summarize({}).status == Status::Holds);
}

TEST_CASE("runs are deterministic and serial matches parallel") {
  ModelPtr lb = lambda_beta_model();
  SuiteOptions par, ser;
  par.seed = ser.seed = 11;
  ser.exec = Exec::Serial;
  for (const char* s : {"beta", "meyer-scott-probe", "strong-reflexivity7"}) {
    const SuiteReport a = run_suite(lb, s, par);
    const SuiteReport b = run_suite(lb, s, ser);
    REQUIRE(a.equations.size() == b.equations.size());
    for (std::size_t n = 0; n < a.equations.size(); ++n) {
      CHECK(a.equations[n].lhs == b.equations[n].lhs);
      CHECK(a.equations[n].verdict == b.equations[n].verdict);
    }
  }
}
