#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "reflex/abstraction.hpp"
#include "reflex/constructions.hpp"
#include "reflex/derivation.hpp"
#include "reflex/error.hpp"
#include "reflex/report.hpp"
#include "reflex/selector.hpp"
#include "reflex/suites.hpp"

namespace reflex::cli {

namespace {

struct Common {
  std::string model;
  std::size_t fuel = 10000;
};

Fuel make_fuel(std::size_t steps) {
  Fuel f;
  f.steps = steps;
  f.node_cap = std::max<std::size_t>(f.node_cap, 10 * steps);
  return f;
}

void add_model(CLI::App* sub, Common& c, bool required = true) {
  auto* opt = sub->add_option("--model", c.model, "model selector");
  if (required) opt->required();
}

void add_fuel(CLI::App* sub, Common& c) {
  sub->add_option("--fuel", c.fuel, "reduction step budget")
      ->envname("REFLEX_FUEL")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int verdict_exit(const Verdict& v) {
  if (v.is_equal()) return 0;
  return v.is_not_equal() ? 3 : 2;
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << to_string(v) << "\n";
  if (v.is_not_equal()) out << "  " << v.left() << "\n  " << v.right() << "\n";
}

std::uint32_t parse_var(const std::string& var) {
  const CLTerm t = parse(var);
  if (t.kind() != CLTerm::Kind::Ind) throw SyntaxError("--var expects x<n>", 0);
  return t.index();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatory-logic rewriting and axiom checking", "reflex"};
  app.require_subcommand(1);

  Common common;
  std::string term, term2, mode = "star", var, suite, format = "text", kind = "bar";
  std::uint64_t seed = 0;
  std::uint32_t n = 1, m = 1;

  auto* normalize = app.add_subcommand("normalize", "normalize a closed term in a model");
  add_model(normalize, common);
  add_fuel(normalize, common);
  normalize->add_option("term", term)->required();

  auto* abstract = app.add_subcommand("abstract", "print lambda* or lambda-dagger of a term");
  abstract->add_option("--mode", mode)->check(CLI::IsMember({"star", "dag"}))->capture_default_str();
  abstract->add_option("--var", var)->required();
  abstract->add_option("term", term)->required();

  auto* check = app.add_subcommand("check", "run an axiom suite");
  add_model(check, common);
  add_fuel(check, common);
  check->add_option("--suite", suite)->required();
  check->add_option("--seed", seed)->capture_default_str();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* sim1 = app.add_subcommand("sim1", "decide a ~1 b for closed terms");
  add_model(sim1, common);
  add_fuel(sim1, common);
  sim1->add_option("a", term)->required();
  sim1->add_option("b", term2)->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "isomorphism and retraction round trips");
  add_model(roundtrip, common);
  add_fuel(roundtrip, common);
  roundtrip->add_option("--kind", kind, "bar | xy | fragment")
      ->check(CLI::IsMember({"bar", "xy", "fragment"}))
      ->capture_default_str();
  roundtrip->add_option("--n", n)->capture_default_str();
  roundtrip->add_option("--m", m)->capture_default_str();
  roundtrip->add_option("term", term)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const Fuel fuel = make_fuel(common.fuel);
    if (*abstract) {
      const AbsMode am = mode == "dag" ? AbsMode::Dag : AbsMode::Star;
      out << to_string(lam_abstract(am, parse_var(var), parse(term))) << "\n";
      return 0;
    }
    const ModelPtr model = select_model(common.model);
    if (*normalize) {
      const NormalizeOutput r = model->normalize(parse(term), fuel);
      if (r.text) {
        out << *r.text << "\n";
        return 0;
      }
      out << "UNKNOWN(" << to_string(r.cap) << ")\n";
      err << "stopped after " << r.steps << " steps\n";
      return 2;
    }
    if (*check) {
      SuiteOptions opt;
      opt.fuel = fuel;
      opt.seed = seed;
      const SuiteReport report = run_suite(model, suite, opt);
      out << (format == "json" ? to_json(report) : to_text(report));
      return exit_code(report.summary.status);
    }
    if (*sim1) {
      const Element a = eval_closed(*model, parse(term));
      const Element b = eval_closed(*model, parse(term2));
      const Verdict v = decide_sim1(*model, a, b, fuel);
      print_verdict(out, v);
      return verdict_exit(v);
    }
    if (*roundtrip) {
      const CLTerm t = parse(term);
      Verdict v = Verdict::equal();
      if (kind == "bar") {
        v = is_closed(t) ? iso_bar_backward(*model, eval_closed(*model, t), fuel) : iso_bar_forward(*model, t, fuel);
      } else if (kind == "xy") {
        v = retract_xy_to_x(*model, t, fuel);
      } else {
        v = retract_fragment(*model, n, m, t, fuel);
      }
      print_verdict(out, v);
      return verdict_exit(v);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace reflex::cli
