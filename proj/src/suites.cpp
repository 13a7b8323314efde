#include "reflex/suites.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "reflex/abstraction.hpp"
#include "reflex/ccm.hpp"
#include "reflex/constructions.hpp"
#include "reflex/error.hpp"
#include "reflex/random_terms.hpp"

namespace reflex {

namespace {

CLTerm P(std::string_view s) { return parse(s); }

Equation eqn(std::string id, std::string_view lhs, std::string_view rhs) {
  return Equation{std::move(id), P(lhs), P(rhs)};
}

std::vector<std::uint32_t> indices(const CLTerm& t, const CLTerm& u) {
  IndSet s = fv(t);
  for (auto i : fv(u)) s.insert(i);
  return {s.begin(), s.end()};
}

// Both sides closed under lambda-dagger over every indeterminate occurring.
Equation dag_closure(const Equation& e) {
  auto xs = indices(e.lhs, e.rhs);
  return Equation{e.id, lam_multi(AbsMode::Dag, xs, e.lhs), lam_multi(AbsMode::Dag, xs, e.rhs)};
}

Equation star_eqn(std::string id, std::vector<std::uint32_t> lv, std::string_view lhs, std::vector<std::uint32_t> rv,
                  std::string_view rhs) {
  return Equation{std::move(id), lam_multi(AbsMode::Star, lv, P(lhs)), lam_multi(AbsMode::Star, rv, P(rhs))};
}

std::vector<Equation> premodel() {
  return {eqn("k", "k x1 x2", "x1"), eqn("s", "s x1 x2 x3", "x1 x3 (x2 x3)"), eqn("i", "i x1", "x1"),
          eqn("e", "e x1 x2", "x1 x2")};
}

std::vector<Equation> reflexivity7() {
  return {
      eqn("1", "e (s (s (k k) x1) x2)", "e x1"),
      eqn("2", "e (s (s (s (k s) x1) x2) x3)", "e (s (s x1 x3) (s x2 x3))"),
      eqn("3", "e (s (k i) x1)", "e x1"),
      eqn("4", "e (s (s (k e) x1) x2)", "e (s x1 x2)"),
      eqn("5", "e (s (k x1) (k x2))", "e (k (x1 x2))"),
      eqn("6", "e (s (k x1) i)", "e x1"),
      eqn("7", "e (s (e x1) (e x2))", "e (s x1 x2)"),
  };
}

std::vector<Equation> strong_reflexivity7() {
  std::vector<Equation> out;
  for (const auto& e : reflexivity7()) out.push_back(dag_closure(e));
  return out;
}

std::vector<Equation> l2() {
  std::vector<Equation> out;
  for (const auto& e : strong_reflexivity7()) {
    if (e.id == "1" || e.id == "2" || e.id == "5" || e.id == "6") out.push_back(e);
  }
  return out;
}

std::vector<Equation> stability() {
  return {
      Equation{"k", P("k"), CLTerm::app(eps(2), P("k"))},
      Equation{"s", P("s"), CLTerm::app(eps(3), P("s"))},
      Equation{"i", P("i"), CLTerm::app(eps(1), P("i"))},
      Equation{"e", P("e"), CLTerm::app(eps(2), P("e"))},
  };
}

std::vector<Equation> ca() { return {eqn("i", "i", "s k k"), eqn("e", "e", "s (k i)")}; }

std::vector<Equation> curry5() {
  return {
      Equation{"1", lam_multi(AbsMode::Star, {1, 2}, P("k x1 x2")), P("k")},
      Equation{"2", lam_multi(AbsMode::Star, {1, 2, 3}, P("s x1 x2 x3")), P("s")},
      star_eqn("3", {1, 2}, "s (s (k k) x1) x2", {1, 2, 3}, "x1 x3"),
      star_eqn("4", {1, 2, 3}, "s (s (s (k s) x1) x2) x3", {1, 2, 3}, "s (s x1 x3) (s x2 x3)"),
      star_eqn("5", {1, 2}, "s (k x1) (k x2)", {1, 2}, "k (x1 x2)"),
  };
}

std::vector<Equation> selinger9() {
  // i and e read as s k k and s (k (s k k)).
  const CLTerm i = P("s k k");
  const CLTerm e = P("s (k (s k k))");
  auto lit = [&](std::string id, std::string_view lhs, std::string_view rhs) {
    auto fix = [&](const CLTerm& t) {
      return subst_many(t, {{91, i}, {92, e}});
    };
    return Equation{std::move(id), fix(P(lhs)), fix(P(rhs))};
  };
  // x91 and x92 stand for the derived i and e.
  return {
      lit("a", "x92 k", "k"),
      lit("b", "x92 s", "s"),
      lit("c", "x92 (k x1)", "k x1"),
      lit("d", "x92 (s x1)", "s x1"),
      lit("e", "x92 (s x1 x2)", "s x1 x2"),
      lit("f", "s (s (k k) x1) x2", "x92 x1"),
      lit("g", "s (s (s (k s) x1) x2) x3", "s (s x1 x3) (s x2 x3)"),
      lit("h", "s (k x1) (k x2)", "k (x1 x2)"),
      lit("i", "s (k x1) x91", "x92 x1"),
  };
}

std::vector<Equation> krivine() {
  // Variables range over A*: x := e x1 and so on.
  std::map<std::uint32_t, CLTerm> star{{1, P("e x1")}, {2, P("e x2")}, {3, P("e x3")}};
  auto coerce = [&](std::string id, std::string_view lhs, std::string_view rhs) {
    return Equation{std::move(id), subst_many(P(lhs), star), subst_many(P(rhs), star)};
  };
  return {
      coerce("1", "s (s (k k) x1) x2", "x1"),
      coerce("2", "s (s (s (k s) x1) x2) x3", "s (s x1 x3) (s x2 x3)"),
      coerce("5", "s (k x1) (k x2)", "k (x1 x2)"),
      eqn("wk", "e (k x1)", "k x1"),
      eqn("ws", "e (s x1 x2)", "s x1 x2"),
  };
}

CLTerm apply_inds(CLTerm head, std::uint32_t from, std::uint32_t to) {
  for (std::uint32_t j = from; j <= to; ++j) head = CLTerm::app(std::move(head), CLTerm::ind(j));
  return head;
}

std::vector<Equation> epsilon() {
  std::vector<Equation> out;
  const CLTerm x1 = CLTerm::ind(1), x2 = CLTerm::ind(2), g1 = CLTerm::gen(1);
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const std::string k = std::to_string(n);
    out.push_back({"rec-" + k, apply(eps(n + 1), {x1, x2}), CLTerm::app(eps(n), CLTerm::app(x1, x2))});
    out.push_back({"app-" + k, apply_inds(CLTerm::app(eps(n), x1), 2, n + 1), apply_inds(x1, 2, n + 1)});
    out.push_back({"eform-" + k, apply_inds(CLTerm::app(eps(n), x1), 2, n),
                   CLTerm::app(CLTerm::e(), apply_inds(x1, 2, n))});
    std::vector<std::uint32_t> xs;
    for (std::uint32_t j = 1; j <= n; ++j) xs.push_back(j);
    out.push_back({"dag-" + k, CLTerm::app(eps(n), g1), lam_multi(AbsMode::Dag, xs, apply_inds(g1, 1, n))});
  }
  return out;
}

// Laws over A*-coerced generics, built at element level. Models without
// three generators are checked in their polynomial extension.
std::vector<EquationResult> ccm_laws(const ModelPtr& model, const SuiteOptions& opt) {
  ModelPtr m = model;
  try {
    model->generic(3);
  } catch (const OutOfGenerators&) {
    m = poly_model(model, 3);
  }
  const CcmContext ctx(m);
  const Element e = m->e();
  const Element a = m->app(e, m->generic(1)), b = m->app(e, m->generic(2)), c = m->app(e, m->generic(3));
  const Element I = ctx.element(ctx.unit()), p = ctx.element(ctx.p()), q = ctx.element(ctx.q()),
                ev = ctx.element(ctx.eval());
  auto cmp = [&](const Element& f, const Element& g) { return ctx.compose(f, g); };
  auto pr = [&](const Element& f, const Element& g) { return ctx.pair(f, g); };
  auto lam = [&](const Element& f) { return ctx.curry(f); };
  struct Law {
    std::string id, lhs, rhs;
    Element l, r;
  };
  const std::vector<Law> laws = {
      {"assoc", "(a o b) o c", "a o (b o c)", cmp(cmp(a, b), c), cmp(a, cmp(b, c))},
      {"unit-left", "I o a", "a", cmp(I, a), a},
      {"unit-right", "a o I", "a", cmp(a, I), a},
      {"pair-p", "p o <a, b>", "a", cmp(p, pr(a, b)), a},
      {"pair-q", "q o <a, b>", "b", cmp(q, pr(a, b)), b},
      {"pair-comp", "<a, b> o c", "<a o c, b o c>", cmp(pr(a, b), c), pr(cmp(a, c), cmp(b, c))},
      {"c", "eps o <p, q>", "eps", cmp(ev, pr(p, q)), ev},
      {"d", "eps o <L(a) o p, q>", "a o <p, q>", cmp(ev, pr(cmp(lam(a), p), q)), cmp(a, pr(p, q))},
      {"e", "L(eps) o L(a)", "L(a)", cmp(lam(ev), lam(a)), lam(a)},
      {"f", "L(eps o <a o p, q>)", "L(eps) o a", lam(cmp(ev, pr(cmp(a, p), q))), cmp(lam(ev), a)},
  };
  std::vector<Equation> eqs;
  for (const auto& law : laws) eqs.push_back({law.id, CLTerm::elem(law.l), CLTerm::elem(law.r)});
  auto verdicts = evaluate_equations(*m, eqs, opt.fuel, opt.exec);
  std::vector<EquationResult> out;
  for (std::size_t n = 0; n < laws.size(); ++n) {
    out.push_back({laws[n].id, laws[n].lhs, laws[n].rhs, verdicts[n]});
  }
  return out;
}

// Gen j stays if the model has it, otherwise becomes x(3 + j).
CLTerm localize_generators(const PreModel& model, const CLTerm& t) {
  if (t.is_app()) {
    return CLTerm::app(localize_generators(model, t.fun()), localize_generators(model, t.arg()));
  }
  if (t.kind() != CLTerm::Kind::Gen) return t;
  try {
    model.generic(t.index());
    return t;
  } catch (const OutOfGenerators&) {
    return CLTerm::ind(3 + t.index());
  }
}

bool has_generic(const PreModel& model, std::uint32_t j) {
  try {
    model.generic(j);
    return true;
  } catch (const OutOfGenerators&) {
    return false;
  }
}

std::vector<Equation> fixed_equations(std::string_view suite) {
  if (suite == "premodel") return premodel();
  if (suite == "reflexivity7") return reflexivity7();
  if (suite == "strong-reflexivity7") return strong_reflexivity7();
  if (suite == "stability") return stability();
  if (suite == "curry5") return curry5();
  if (suite == "selinger9") return selinger9();
  if (suite == "ca") return ca();
  if (suite == "l2") return l2();
  if (suite == "krivine") return krivine();
  if (suite == "epsilon") return epsilon();
  throw UnknownSuite("unknown suite '" + std::string(suite) + "'");
}

std::vector<EquationResult> evaluate(const PreModel& model, const std::vector<Equation>& eqs,
                                     const SuiteOptions& opt) {
  auto verdicts = evaluate_equations(model, eqs, opt.fuel, opt.exec);
  std::vector<EquationResult> out;
  out.reserve(eqs.size());
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    out.push_back({eqs[k].id, to_string(eqs[k].lhs), to_string(eqs[k].rhs), verdicts[k]});
  }
  return out;
}

// Candidate pairs (a, b) with a x1 = b x1 expected for most; the probe
// looks for e a != e b.
SuiteReport meyer_scott_probe(const ModelPtr& model, const SuiteOptions& opt) {
  std::vector<CLTerm> atoms = {P("k"), P("s"), P("i"), P("e")};
  for (std::uint32_t j = 1; j <= 2; ++j) {
    if (has_generic(*model, j)) atoms.push_back(CLTerm::gen(j));
  }
  TermRng rng(opt.seed);
  const TermShape shape{4, 45};
  struct Trial {
    CLTerm a, b;
  };
  std::vector<Trial> trials;
  for (std::size_t n = 0; n < opt.probe_trials; ++n) {
    CLTerm a = random_term(rng, atoms, shape);
    CLTerm b = a;
    switch (rng.below(5)) {
      case 0: b = CLTerm::app(CLTerm::e(), a); break;
      case 1: b = apply(CLTerm::s(), {CLTerm::app(CLTerm::k(), a), CLTerm::i()}); break;
      case 2: b = lam_star(1, CLTerm::app(a, CLTerm::ind(1))); break;
      case 3: b = lam_dag(1, CLTerm::app(a, CLTerm::ind(1))); break;
      default: b = random_term(rng, atoms, shape); break;
    }
    trials.push_back({a, b});
  }
  const CLTerm x1 = CLTerm::ind(1);
  std::vector<Equation> premises, conclusions;
  for (std::size_t n = 0; n < trials.size(); ++n) {
    const std::string id = "trial-" + std::to_string(n + 1);
    premises.push_back({id, CLTerm::app(trials[n].a, x1), CLTerm::app(trials[n].b, x1)});
    conclusions.push_back(
        {id, CLTerm::app(CLTerm::e(), trials[n].a), CLTerm::app(CLTerm::e(), trials[n].b)});
  }
  auto pv = evaluate_equations(*model, premises, opt.fuel, opt.exec);
  std::vector<Equation> live;
  std::size_t vacuous = 0, undecided = 0;
  for (std::size_t n = 0; n < trials.size(); ++n) {
    if (pv[n].is_equal()) {
      live.push_back(conclusions[n]);
    } else if (pv[n].is_unknown()) {
      ++undecided;
    } else {
      ++vacuous;
    }
  }
  SuiteReport r;
  r.equations = evaluate(*model, live, opt);
  r.summary = summarize(r.equations);
  std::string tail = " (" + std::to_string(vacuous) + " candidates failed the premise, " +
                     std::to_string(undecided) + " undecided)";
  if (r.summary.status == Status::Holds) {
    r.summary.status = Status::NoCounterexample;
    r.summary.note = "no counterexample found in " + std::to_string(live.size()) + " trials" + tail;
  } else if (r.summary.status == Status::Fails) {
    r.summary.note = "counterexample: " + r.summary.ids.front() + tail;
  } else {
    r.summary.note = "some conclusions undecided" + tail;
  }
  return r;
}

const std::vector<std::string> kUniversal = {"premodel", "reflexivity7", "selinger9", "krivine",
                                             "epsilon",  "ccm",          "beta"};

SuiteReport run_one(const ModelPtr& model, std::string_view suite, const SuiteOptions& opt) {
  SuiteReport r;
  if (suite == "meyer-scott-probe") {
    r = meyer_scott_probe(model, opt);
  } else if (suite == "lambda-from-acm") {
    ModelPtr acm = lambda_from_acm(model);
    r.equations = evaluate(*acm, curry5(), opt);
    r.summary = summarize(r.equations);
  } else if (suite == "ccm") {
    r.equations = ccm_laws(model, opt);
    r.summary = summarize(r.equations);
  } else if (suite == "beta") {
    r.equations = evaluate(*model, beta_equations(*model, opt.seed, opt.beta_pairs), opt);
    r.summary = summarize(r.equations);
  } else {
    std::vector<Equation> eqs = fixed_equations(suite);
    for (auto& e : eqs) {
      e.lhs = localize_generators(*model, e.lhs);
      e.rhs = localize_generators(*model, e.rhs);
    }
    r.equations = evaluate(*model, eqs, opt);
    r.summary = summarize(r.equations);
  }
  if (!model->generic_complete() &&
      std::find(kUniversal.begin(), kUniversal.end(), suite) != kUniversal.end()) {
    r.summary.note = r.summary.note.empty() ? "generic-instance" : "generic-instance; " + r.summary.note;
  }
  return r;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Inconclusive: return "inconclusive";
    case Status::NoCounterexample: return "no-counterexample";
  }
  return "?";
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "premodel", "reflexivity7", "strong-reflexivity7", "stability", "curry5", "selinger9", "ca", "l2",
      "krivine",  "epsilon",      "beta",                "ccm",       "meyer-scott-probe", "lambda-from-acm", "all"};
  return ids;
}

std::vector<Equation> suite_equations(std::string_view suite) { return fixed_equations(suite); }

std::vector<Equation> beta_equations(const PreModel& model, std::uint64_t seed, std::size_t per_mode) {
  std::vector<CLTerm> atoms;
  for (const auto& a : default_atoms()) atoms.push_back(localize_generators(model, a));
  TermRng rng(seed);
  const TermShape shape{6, 45};
  std::vector<Equation> out;
  for (AbsMode mode : {AbsMode::Star, AbsMode::Dag}) {
    const std::string tag = mode == AbsMode::Star ? "star-" : "dag-";
    for (std::size_t n = 0; n < per_mode; ++n) {
      CLTerm t = random_term(rng, atoms, shape);
      CLTerm u = random_term(rng, atoms, shape);
      const auto i = static_cast<std::uint32_t>(1 + rng.below(3));
      out.push_back({tag + std::to_string(n + 1), CLTerm::app(lam_abstract(mode, i, t), u), subst(t, i, u)});
    }
  }
  return out;
}

Summary summarize(const std::vector<EquationResult>& results) {
  Summary s;
  for (const auto& r : results) {
    if (r.verdict.is_not_equal()) s.ids.push_back(r.id);
  }
  if (!s.ids.empty()) {
    s.status = Status::Fails;
    return s;
  }
  for (const auto& r : results) {
    if (r.verdict.is_unknown()) s.ids.push_back(r.id);
  }
  s.status = s.ids.empty() ? Status::Holds : Status::Inconclusive;
  return s;
}

ModelPtr lambda_from_acm(ModelPtr base) {
  const CLTerm k2 = CLTerm::app(eps(2), CLTerm::k());
  const CLTerm s3 = CLTerm::app(eps(3), CLTerm::s());
  const CLTerm i = apply(s3, {k2, k2});
  const CLTerm e = CLTerm::app(s3, CLTerm::app(k2, i));
  std::string name = "acm:" + base->name();
  return reconstant_model(std::move(base), std::move(name), {k2, s3, i, e});
}

SuiteReport run_suite(const ModelPtr& model, std::string_view suite, const SuiteOptions& options) {
  SuiteReport report;
  if (suite == "all") {
    std::vector<std::string> notes;
    for (const auto& id : suite_ids()) {
      if (id == "all") continue;
      SuiteReport part = run_one(model, id, options);
      for (auto& e : part.equations) {
        e.id = id + "/" + e.id;
        report.equations.push_back(std::move(e));
      }
      if (!part.summary.note.empty()) notes.push_back(id + ": " + part.summary.note);
    }
    report.summary = summarize(report.equations);
    for (const auto& n : notes) report.summary.note += (report.summary.note.empty() ? "" : "; ") + n;
  } else {
    if (std::find(suite_ids().begin(), suite_ids().end(), suite) == suite_ids().end()) {
      throw UnknownSuite("unknown suite '" + std::string(suite) + "'");
    }
    report = run_one(model, suite, options);
  }
  report.model = model->name();
  report.suite = std::string(suite);
  report.fuel = options.fuel;
  report.seed = options.seed;
  return report;
}

}  // namespace reflex
