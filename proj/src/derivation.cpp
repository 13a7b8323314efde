#include "reflex/derivation.hpp"

#include <cctype>
#include <optional>

#include "reflex/error.hpp"

namespace reflex {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
  std::size_t arity;  // instance terms for base rules
  bool poly;          // base rule of the polynomial congruence
};

constexpr RuleInfo kRules[] = {
    {Rule::Refl, "refl", 1, false},   {Rule::Sym, "sym", 0, false},     {Rule::Trans, "trans", 0, false},
    {Rule::AppCong, "app", 0, false}, {Rule::PolyK, "polyK", 2, true},  {Rule::PolyS, "polyS", 3, true},
    {Rule::PolyI, "polyI", 1, true},  {Rule::PolyE, "polyE", 2, true},  {Rule::PolyInj, "polyInj", 2, true},
    {Rule::QuoK, "quoK", 2, false},   {Rule::QuoS, "quoS", 3, false},   {Rule::QuoI, "quoI", 1, false},
    {Rule::QuoE, "quoE", 2, false},   {Rule::QuoInj, "quoInj", 2, false}, {Rule::QuoEta, "quoEta", 1, false},
};

const RuleInfo& info(Rule r) { return kRules[static_cast<int>(r)]; }

bool is_base(Rule r) { return r >= Rule::PolyK; }

CLTerm s_(const CLTerm& a, const CLTerm& b) { return apply(CLTerm::s(), {a, b}); }
CLTerm k_(const CLTerm& a) { return CLTerm::app(CLTerm::k(), a); }

// Conclusion of a base rule, or a reason it does not apply.
std::pair<CLTerm, CLTerm> shape(DerivKind kind, Rule rule, const std::vector<CLTerm>& a, const PreModel* model,
                                std::string& err) {
  const CLTerm dummy = CLTerm::k();
  if (!is_base(rule)) {
    err = "not a base rule";
    return {dummy, dummy};
  }
  if (info(rule).poly != (kind == DerivKind::Poly)) {
    err = std::string("rule ") + info(rule).name + " does not belong to this congruence";
    return {dummy, dummy};
  }
  if (a.size() != info(rule).arity) {
    err = std::string(info(rule).name) + " takes " + std::to_string(info(rule).arity) + " instance terms";
    return {dummy, dummy};
  }
  const CLTerm k = CLTerm::k(), s = CLTerm::s(), i = CLTerm::i(), e = CLTerm::e();
  switch (rule) {
    case Rule::PolyK: return {apply(k, {a[0], a[1]}), a[0]};
    case Rule::PolyS: return {apply(s, {a[0], a[1], a[2]}), apply(a[0], {a[2], CLTerm::app(a[1], a[2])})};
    case Rule::PolyI: return {CLTerm::app(i, a[0]), a[0]};
    case Rule::PolyE: return {apply(e, {a[0], a[1]}), CLTerm::app(a[0], a[1])};
    case Rule::PolyInj:
      if (a[0].kind() != CLTerm::Kind::Elem || a[1].kind() != CLTerm::Kind::Elem) {
        err = "polyInj needs two element references";
        return {dummy, dummy};
      }
      if (model == nullptr) {
        err = "polyInj needs a model";
        return {dummy, dummy};
      }
      return {CLTerm::app(a[0], a[1]), CLTerm::elem(model->app(a[0].element(), a[1].element()))};
    case Rule::QuoK: return {s_(s_(k_(k), a[0]), a[1]), a[0]};
    case Rule::QuoS: return {s_(s_(s_(k_(s), a[0]), a[1]), a[2]), s_(s_(a[0], a[2]), s_(a[1], a[2]))};
    case Rule::QuoI: return {s_(k_(i), a[0]), a[0]};
    case Rule::QuoE: return {s_(s_(k_(e), a[0]), a[1]), s_(a[0], a[1])};
    case Rule::QuoInj: {
      CLTerm prod = CLTerm::app(a[0], a[1]);
      if (model != nullptr && a[0].kind() == CLTerm::Kind::Elem && a[1].kind() == CLTerm::Kind::Elem) {
        prod = CLTerm::elem(model->app(a[0].element(), a[1].element()));
      }
      return {s_(k_(a[0]), k_(a[1])), k_(prod)};
    }
    case Rule::QuoEta: return {s_(k_(a[0]), i), a[0]};
    default: break;
  }
  err = "not a base rule";
  return {dummy, dummy};
}

std::string show_pair(const CLTerm& l, const CLTerm& r) { return "(" + to_string(l) + ", " + to_string(r) + ")"; }

class Checker {
 public:
  Checker(DerivKind kind, const PreModel* model) : kind_(kind), model_(model) {}

  std::pair<CLTerm, CLTerm> check(const Derivation& d, const std::string& path) {
    if (kind_ == DerivKind::Sim1) {
      bool open = d.lhs().max_ind() > 0 || d.rhs().max_ind() > 0;
      for (const auto& t : d.instance()) open = open || t.max_ind() > 0;
      if (open) throw IndeterminatePresent("indeterminate in a ~1 derivation at " + path);
    }
    const auto& kids = d.children();
    auto expect_children = [&](std::size_t n) {
      if (kids.size() != n) {
        throw InvalidNode(path, std::string(info(d.rule()).name) + " expects " + std::to_string(n) + " premises");
      }
    };
    std::pair<CLTerm, CLTerm> concl{d.lhs(), d.rhs()};
    switch (d.rule()) {
      case Rule::Refl:
        expect_children(0);
        if (d.instance().size() != 1) throw InvalidNode(path, "refl takes one term");
        concl = {d.instance()[0], d.instance()[0]};
        break;
      case Rule::Sym: {
        expect_children(1);
        auto c = check(kids[0], path + ".0");
        concl = {c.second, c.first};
        break;
      }
      case Rule::Trans: {
        expect_children(2);
        auto c1 = check(kids[0], path + ".0");
        auto c2 = check(kids[1], path + ".1");
        if (!(c1.second == c2.first)) {
          throw InvalidNode(path, "premises do not chain: " + to_string(c1.second) + " vs " + to_string(c2.first));
        }
        concl = {c1.first, c2.second};
        break;
      }
      case Rule::AppCong: {
        expect_children(2);
        auto c1 = check(kids[0], path + ".0");
        auto c2 = check(kids[1], path + ".1");
        if (kind_ == DerivKind::Poly) {
          concl = {CLTerm::app(c1.first, c2.first), CLTerm::app(c1.second, c2.second)};
        } else {
          concl = {s_(c1.first, c2.first), s_(c1.second, c2.second)};
        }
        break;
      }
      default: {
        expect_children(0);
        std::string err;
        concl = shape(kind_, d.rule(), d.instance(), model_, err);
        if (!err.empty()) throw InvalidNode(path, err);
      }
    }
    if (!(concl.first == d.lhs()) || !(concl.second == d.rhs())) {
      throw InvalidNode(path, "claims " + show_pair(d.lhs(), d.rhs()) + " but the rule gives " +
                                  show_pair(concl.first, concl.second));
    }
    return concl;
  }

 private:
  DerivKind kind_;
  const PreModel* model_;
};

// ---------------------------------------------------------------------------
// s-expressions

void write(const Derivation& d, std::string& out) {
  out += "(";
  if (is_base(d.rule())) {
    out += "base ";
    out += info(d.rule()).name;
  } else {
    out += info(d.rule()).name;
  }
  for (const auto& t : d.instance()) {
    if (t.has_elem()) throw Error("element references have no textual form");
    out += " \"" + to_string(t) + "\"";
  }
  for (const auto& c : d.children()) {
    out += " ";
    write(c, out);
  }
  out += ")";
}

class SexprParser {
 public:
  SexprParser(std::string_view text, DerivKind kind) : text_(text), kind_(kind) {}

  Derivation parse_all() {
    Derivation d = node();
    skip();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return d;
  }

 private:
  Derivation node() {
    skip();
    expect('(');
    const std::size_t at = pos_;
    std::string head = symbol();
    Derivation out = Derivation::refl(CLTerm::k());
    if (head == "base") {
      skip();
      const std::size_t rule_at = pos_;
      std::string name = symbol();
      std::optional<Rule> rule;
      for (const auto& r : kRules) {
        if (is_base(r.rule) && name == r.name) rule = r.rule;
      }
      if (!rule) throw SyntaxError("unknown rule '" + name + "'", rule_at);
      std::vector<CLTerm> inst;
      while (peek() == '"') inst.push_back(term());
      std::string err;
      shape(kind_, *rule, inst, nullptr, err);
      if (!err.empty()) throw SyntaxError(err, rule_at);
      out = Derivation::base(kind_, *rule, std::move(inst));
    } else if (head == "refl") {
      out = Derivation::refl(term());
    } else if (head == "sym") {
      out = Derivation::sym(node());
    } else if (head == "trans") {
      Derivation a = node();
      out = Derivation::trans(a, node());
    } else if (head == "app") {
      Derivation a = node();
      out = Derivation::app_cong(kind_, a, node());
    } else {
      throw SyntaxError("unknown node '" + head + "'", at);
    }
    skip();
    expect(')');
    return out;
  }

  CLTerm term() {
    skip();
    expect('"');
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
    if (pos_ >= text_.size()) throw SyntaxError("unterminated string", start);
    std::string_view body = text_.substr(start, pos_ - start);
    ++pos_;
    try {
      return parse(body);
    } catch (const SyntaxError& e) {
      throw SyntaxError("bad term in derivation", start + e.offset());
    }
  }

  std::string symbol() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected a symbol", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  DerivKind kind_;
  std::size_t pos_ = 0;
};

Derivation random_base(DerivKind kind, TermRng& rng, std::span<const CLTerm> atoms) {
  static constexpr Rule poly[] = {Rule::PolyK, Rule::PolyS, Rule::PolyI, Rule::PolyE};
  static constexpr Rule quo[] = {Rule::QuoK, Rule::QuoS, Rule::QuoI, Rule::QuoE, Rule::QuoInj, Rule::QuoEta};
  const TermShape small{2, 40};
  if (rng.chance(15)) return Derivation::refl(random_term(rng, atoms, small));
  Rule r = kind == DerivKind::Poly ? poly[rng.below(4)] : quo[rng.below(6)];
  std::vector<CLTerm> inst;
  for (std::size_t n = 0; n < info(r).arity; ++n) inst.push_back(random_term(rng, atoms, small));
  return Derivation::base(kind, r, std::move(inst));
}

Derivation grow(DerivKind kind, TermRng& rng, std::span<const CLTerm> atoms, int depth) {
  if (depth <= 0 || rng.chance(25)) return random_base(kind, rng, atoms);
  switch (rng.below(4)) {
    case 0: return Derivation::sym(grow(kind, rng, atoms, depth - 1));
    case 1: {
      Derivation d = grow(kind, rng, atoms, depth - 1);
      switch (rng.below(3)) {
        case 0: return Derivation::trans(d, Derivation::refl(d.rhs()));
        case 1: return Derivation::trans(d, Derivation::sym(d));
        default: return Derivation::trans(Derivation::sym(d), d);
      }
    }
    default: {
      Derivation a = grow(kind, rng, atoms, depth - 1);
      return Derivation::app_cong(kind, a, grow(kind, rng, atoms, depth - 1));
    }
  }
}

}  // namespace

std::string rule_name(Rule r) { return info(r).name; }

Derivation Derivation::make(Rule rule, std::vector<CLTerm> instance, std::vector<Derivation> children, CLTerm lhs,
                            CLTerm rhs) {
  return Derivation(std::make_shared<const Node>(
      Node{rule, std::move(instance), std::move(children), std::move(lhs), std::move(rhs)}));
}

std::pair<CLTerm, CLTerm> base_conclusion(DerivKind kind, Rule rule, const std::vector<CLTerm>& instance,
                                          const PreModel* model) {
  std::string err;
  auto c = shape(kind, rule, instance, model, err);
  if (!err.empty()) throw InvalidNode("root", err);
  return c;
}

Derivation Derivation::base(DerivKind kind, Rule rule, std::vector<CLTerm> instance, const PreModel* model) {
  auto [l, r] = base_conclusion(kind, rule, instance, model);
  return make(rule, std::move(instance), {}, std::move(l), std::move(r));
}

Derivation Derivation::refl(CLTerm t) { return make(Rule::Refl, {t}, {}, t, t); }

Derivation Derivation::sym(Derivation d) {
  CLTerm l = d.rhs(), r = d.lhs();
  return make(Rule::Sym, {}, {std::move(d)}, std::move(l), std::move(r));
}

Derivation Derivation::trans(Derivation d1, Derivation d2) {
  CLTerm l = d1.lhs(), r = d2.rhs();
  return make(Rule::Trans, {}, {std::move(d1), std::move(d2)}, std::move(l), std::move(r));
}

Derivation Derivation::app_cong(DerivKind kind, Derivation d1, Derivation d2) {
  CLTerm l = kind == DerivKind::Poly ? CLTerm::app(d1.lhs(), d2.lhs()) : s_(d1.lhs(), d2.lhs());
  CLTerm r = kind == DerivKind::Poly ? CLTerm::app(d1.rhs(), d2.rhs()) : s_(d1.rhs(), d2.rhs());
  return make(Rule::AppCong, {}, {std::move(d1), std::move(d2)}, std::move(l), std::move(r));
}

std::pair<CLTerm, CLTerm> check_poly_derivation(const Derivation& d, const PreModel* model) {
  return Checker(DerivKind::Poly, model).check(d, "root");
}

std::pair<CLTerm, CLTerm> check_sim1_derivation(const Derivation& d, const PreModel* model) {
  return Checker(DerivKind::Sim1, model).check(d, "root");
}

std::string to_sexpr(const Derivation& d) {
  std::string out;
  write(d, out);
  return out;
}

Derivation parse_derivation(std::string_view text, DerivKind kind) { return SexprParser(text, kind).parse_all(); }

Derivation random_derivation(DerivKind kind, TermRng& rng, std::span<const CLTerm> atoms, int depth) {
  std::vector<CLTerm> usable;
  for (const auto& a : atoms) {
    if (kind == DerivKind::Poly || a.max_ind() == 0) usable.push_back(a);
  }
  if (usable.empty()) throw Error("random_derivation needs at least one usable atom");
  return grow(kind, rng, usable, depth);
}

Verdict decide_sim1(const PreModel& model, const Element& a, const Element& b, const Fuel& fuel) {
  const CLTerm x1 = CLTerm::ind(1);
  return model.poly_eq(CLTerm::app(CLTerm::elem(a), x1), CLTerm::app(CLTerm::elem(b), x1), fuel);
}

}  // namespace reflex
