#include "reflex/constructions.hpp"

#include <algorithm>

#include "reflex/abstraction.hpp"
#include "reflex/derivation.hpp"
#include "reflex/error.hpp"
#include "wrap.hpp"

namespace reflex {

namespace {

using detail::map_atoms;
using detail::TermRep;
using detail::WrapRep;

class PolyModel final : public PreModel {
 public:
  PolyModel(ModelPtr base, std::uint32_t n) : base_(std::move(base)), n_(n) {}

  std::string name() const override { return "poly:" + base_->name() + ":" + std::to_string(n_); }

  Element app(const Element& a, const Element& b) const override { return wrap(CLTerm::app(term(a), term(b))); }

  Element constant(Prim p) const override { return wrap(CLTerm::prim(p)); }

  Verdict eq(const Element& a, const Element& b, const Fuel& fuel) const override {
    return base_->poly_eq(term(a), term(b), fuel);
  }

  Verdict poly_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel) const override {
    return base_->poly_eq(flatten(t, n_), flatten(u, n_), fuel);
  }

  Element generic(std::uint32_t j) const override {
    if (j == 0) throw OutOfGenerators("generic indices start at 1");
    if (j <= n_) return wrap(CLTerm::ind(j));
    return wrap(CLTerm::elem(base_->generic(j - n_)));
  }

  NormalizeOutput normalize(const CLTerm& t, const Fuel& fuel) const override {
    return base_->normalize(flatten(t, 0), fuel);
  }

  bool generic_complete() const override { return base_->generic_complete(); }

 private:
  const CLTerm& term(const Element& a) const {
    check_owner(a);
    return a.as<TermRep>().term();
  }

  Element wrap(CLTerm t) const { return make(std::make_shared<const TermRep>(std::move(t))); }

  // Outer indeterminates move above x1..xn; own elements are inlined.
  CLTerm flatten(const CLTerm& t, std::uint32_t shift) const {
    return map_atoms(resolve_generators(*this, t), [&](const CLTerm& a) {
      if (a.kind() == CLTerm::Kind::Ind) return shift == 0 ? a : CLTerm::ind(a.index() + shift);
      if (a.kind() == CLTerm::Kind::Elem) return term(a.element());
      return a;
    });
  }

  ModelPtr base_;
  std::uint32_t n_;
};

}  // namespace

ModelPtr poly_model(ModelPtr base, std::uint32_t n) { return std::make_shared<const PolyModel>(std::move(base), n); }

Element eval_poly(const PreModel& base, const CLTerm& t, const std::map<std::uint32_t, Element>& assignment) {
  for (auto i : fv(t)) {
    if (!assignment.contains(i)) throw UnassignedIndeterminate("x" + std::to_string(i) + " has no value");
  }
  std::map<std::uint32_t, CLTerm> sigma;
  for (const auto& [i, a] : assignment) sigma.emplace(i, CLTerm::elem(a));
  return eval_closed(base, subst_many(t, sigma));
}

BarModel::BarModel(ModelPtr base) : base_(std::move(base)) {
  for (int p = 0; p < 4; ++p) constants_.push_back(lift(base_->app(base_->k(), base_->constant(static_cast<Prim>(p)))));
}

std::string BarModel::name() const { return "bar1:" + base_->name(); }

Element BarModel::app(const Element& a, const Element& b) const {
  return lift(base_->app(base_->app(base_->s(), base_element(a)), base_element(b)));
}

Element BarModel::constant(Prim p) const { return constants_[static_cast<int>(p)]; }

Verdict BarModel::eq(const Element& a, const Element& b, const Fuel& fuel) const {
  return decide_sim1(*base_, base_element(a), base_element(b), fuel);
}

Verdict BarModel::poly_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel) const {
  CLTerm rt = resolve_generators(*this, t);
  CLTerm ru = resolve_generators(*this, u);
  const CLTerm z = CLTerm::ind(fresh_index({rt, ru}));
  auto to_base = [&](const CLTerm& a) {
    if (a.kind() == CLTerm::Kind::Prim) return CLTerm::app(CLTerm::app(CLTerm::k(), a), z);
    if (a.kind() == CLTerm::Kind::Elem) return CLTerm::app(CLTerm::elem(base_element(a.element())), z);
    return a;
  };
  return base_->poly_eq(map_atoms(rt, to_base), map_atoms(ru, to_base), fuel);
}

Element BarModel::generic(std::uint32_t j) const { return lift(base_->generic(j)); }

Element BarModel::lift(const Element& a) const {
  base_->check_owner(a);
  return make(std::make_shared<const WrapRep>(a));
}

const Element& BarModel::base_element(const Element& a) const {
  check_owner(a);
  return a.as<WrapRep>().inner();
}

std::shared_ptr<const BarModel> bar_a1(ModelPtr base) { return std::make_shared<const BarModel>(std::move(base)); }

AStarModel::AStarModel(ModelPtr base) : base_(std::move(base)) {
  for (int p = 0; p < 4; ++p) {
    constants_.push_back(coerce(base_->app(base_->k(), base_->constant(static_cast<Prim>(p)))));
  }
  const CLTerm ex = CLTerm::app(CLTerm::e(), CLTerm::ind(1));
  warning_ = base_->poly_eq(CLTerm::app(CLTerm::e(), ex), ex);
}

std::string AStarModel::name() const { return "astar:" + base_->name(); }

Element AStarModel::app(const Element& a, const Element& b) const {
  return coerce(base_->app(base_->app(base_->s(), base_element(a)), base_element(b)));
}

Element AStarModel::constant(Prim p) const { return constants_[static_cast<int>(p)]; }

Verdict AStarModel::eq(const Element& a, const Element& b, const Fuel& fuel) const {
  return base_->eq(base_element(a), base_element(b), fuel);
}

// Literal reading in the base: constants e (k P), application e (s t u),
// indeterminates e x.
Verdict AStarModel::poly_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel) const {
  const CLTerm e = CLTerm::e();
  auto translate = [&](auto&& self, const CLTerm& a) -> CLTerm {
    switch (a.kind()) {
      case CLTerm::Kind::Prim: return CLTerm::app(e, CLTerm::app(CLTerm::k(), a));
      case CLTerm::Kind::Ind: return CLTerm::app(e, a);
      case CLTerm::Kind::Elem: return CLTerm::elem(base_element(a.element()));
      case CLTerm::Kind::App:
        return CLTerm::app(e, apply(CLTerm::s(), {self(self, a.fun()), self(self, a.arg())}));
      case CLTerm::Kind::Gen: break;
    }
    throw Error("unresolved generator");
  };
  return base_->poly_eq(translate(translate, resolve_generators(*this, t)),
                        translate(translate, resolve_generators(*this, u)), fuel);
}

Element AStarModel::generic(std::uint32_t j) const { return coerce(base_->generic(j)); }

Element AStarModel::coerce(const Element& base_element) const {
  return wrap(base_->app(base_->e(), base_element));
}

const Element& AStarModel::base_element(const Element& a) const {
  check_owner(a);
  return a.as<WrapRep>().inner();
}

Element AStarModel::wrap(Element a) const { return make(std::make_shared<const WrapRep>(std::move(a))); }

std::shared_ptr<const AStarModel> a_star(ModelPtr base) { return std::make_shared<const AStarModel>(std::move(base)); }

Verdict iso_bar_forward(const PreModel& base, const CLTerm& t, const Fuel& fuel) {
  for (auto i : fv(t)) {
    if (i != 1) throw Error("iso_bar_forward expects a term over x1");
  }
  return base.poly_eq(CLTerm::app(lam_star(1, t), CLTerm::ind(1)), t, fuel);
}

Verdict iso_bar_backward(const PreModel& base, const Element& a, const Fuel& fuel) {
  const Element back = eval_closed(base, lam_star(1, CLTerm::app(CLTerm::elem(a), CLTerm::ind(1))));
  return decide_sim1(base, back, a, fuel);
}

Verdict retract_xy_to_x(const PreModel& base, const CLTerm& t, const Fuel& fuel) {
  for (auto i : fv(t)) {
    if (i > 2) throw Error("retract_xy_to_x expects a term over x1, x2");
  }
  const Pairing pr = pairing(AbsMode::Star);
  const CLTerm x1 = CLTerm::ind(1), x2 = CLTerm::ind(2);
  CLTerm f = subst_many(t, {{1, CLTerm::app(x1, pr.tru)}, {2, CLTerm::app(x1, pr.fls)}});
  CLTerm gf = subst(f, 1, apply(pr.pair, {x1, x2}));
  return base.poly_eq(gf, t, fuel);
}

Verdict retract_fragment(const PreModel& base, std::uint32_t n, std::uint32_t m, const CLTerm& t, const Fuel& fuel) {
  if (m < n) throw Error("fragment width must be at least n");
  if (t.max_ind() > n) throw Error("term mentions indeterminates beyond x" + std::to_string(n));
  // sigma_n embeds x1..xn into x1..xm unchanged; f clamps the fragment back.
  std::map<std::uint32_t, CLTerm> clamp;
  for (std::uint32_t i = 1; i <= m; ++i) clamp.emplace(i, n == 0 ? CLTerm::i() : CLTerm::ind(std::min(n, i)));
  return base.poly_eq(subst_many(t, clamp), t, fuel);
}

}  // namespace reflex
