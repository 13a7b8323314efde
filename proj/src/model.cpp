#include "reflex/model.hpp"

#include <atomic>
#include <vector>

#include "reflex/error.hpp"
#include "reflex/rewrite.hpp"
#include "wrap.hpp"

namespace reflex {

namespace {

std::atomic<ModelId> next_model_id{1};

using detail::TermRep;
using detail::WrapRep;
using detail::map_atoms;

class LamRep : public ElementRep {
 public:
  explicit LamRep(LamTerm term) : term_(std::move(term)) {}
  const LamTerm& term() const { return term_; }
  std::string text() const override { return to_string(term_); }
  bool same(const ElementRep& other) const override {
    auto* o = dynamic_cast<const LamRep*>(&other);
    return o != nullptr && o->term_ == term_;
  }

 private:
  LamTerm term_;
};

class FreeModel final : public PreModel {
 public:
  explicit FreeModel(std::uint32_t n) : n_(n) {
    for (int p = 0; p < 4; ++p) constants_.push_back(wrap(CLTerm::prim(static_cast<Prim>(p))));
  }

  std::string name() const override { return "free-cl:" + std::to_string(n_); }

  Element app(const Element& a, const Element& b) const override {
    return wrap(CLTerm::app(term(a), term(b)));
  }

  Element constant(Prim p) const override { return constants_[static_cast<int>(p)]; }

  Verdict eq(const Element& a, const Element& b, const Fuel& fuel) const override {
    return cl_eq(term(a), term(b), fuel);
  }

  Verdict poly_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel) const override {
    return cl_eq(inline_elements(t), inline_elements(u), fuel);
  }

  Element generic(std::uint32_t j) const override {
    check_generator(j);
    return wrap(CLTerm::gen(j));
  }

  NormalizeOutput normalize(const CLTerm& t, const Fuel& fuel) const override {
    auto r = weak_normalize(inline_elements(t), fuel);
    NormalizeOutput out;
    out.steps = r.steps;
    out.cap = r.cap;
    if (r.ok()) out.text = to_string(*r.normal_form);
    return out;
  }

  bool generic_complete() const override { return true; }

 private:
  void check_generator(std::uint32_t j) const {
    if (j == 0 || j > n_) {
      throw OutOfGenerators("g" + std::to_string(j) + " is not a generator of " + name());
    }
  }

  const CLTerm& term(const Element& a) const {
    check_owner(a);
    return a.as<TermRep>().term();
  }

  // Representatives are weak normal forms when one is reachable with the
  // default budget.
  Element wrap(const CLTerm& t) const {
    auto r = weak_normalize(t);
    return make(std::make_shared<const TermRep>(r.ok() ? *r.normal_form : t));
  }

  CLTerm inline_elements(const CLTerm& t) const {
    return map_atoms(t, [this](const CLTerm& a) {
      if (a.kind() == CLTerm::Kind::Elem) return term(a.element());
      if (a.kind() == CLTerm::Kind::Gen) check_generator(a.index());
      return a;
    });
  }

  std::uint32_t n_;
  std::vector<Element> constants_;
};

class LambdaBetaModel final : public PreModel {
 public:
  LambdaBetaModel() {
    for (int p = 0; p < 4; ++p) {
      constants_.push_back(wrap(cl_to_lambda(CLTerm::prim(static_cast<Prim>(p)))));
    }
  }

  std::string name() const override { return "lambda-beta"; }

  Element app(const Element& a, const Element& b) const override {
    return wrap(LamTerm::app(term(a), term(b)));
  }

  Element constant(Prim p) const override { return constants_[static_cast<int>(p)]; }

  Verdict eq(const Element& a, const Element& b, const Fuel& fuel) const override {
    return lam_eq(term(a), term(b), fuel);
  }

  Verdict poly_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel) const override {
    return lam_eq(translate(t), translate(u), fuel);
  }

  Element generic(std::uint32_t j) const override {
    if (j == 0 || j > kIndeterminateOffset) throw OutOfGenerators("generic index out of range");
    return make(std::make_shared<const LamRep>(LamTerm::free(j)));
  }

  NormalizeOutput normalize(const CLTerm& t, const Fuel& fuel) const override {
    auto r = beta_normalize(translate(t), fuel);
    NormalizeOutput out;
    out.steps = r.steps;
    out.cap = r.cap;
    if (r.ok()) out.text = to_string(*r.normal_form);
    return out;
  }

  bool generic_complete() const override { return true; }

 private:
  const LamTerm& term(const Element& a) const {
    check_owner(a);
    return a.as<LamRep>().term();
  }

  Element wrap(const LamTerm& t) const {
    auto r = beta_normalize(t);
    return make(std::make_shared<const LamRep>(r.ok() ? *r.normal_form : t));
  }

  LamTerm translate(const CLTerm& t) const {
    return cl_to_lambda(t, [this](const Element& a) -> LamTerm {
      if (a.owner() != id()) throw UnmappedElement("element {" + a.text() + "} is not from " + name());
      return a.as<LamRep>().term();
    });
  }

  std::vector<Element> constants_;
};

class ReconstantModel final : public PreModel {
 public:
  ReconstantModel(ModelPtr base, std::string name, const std::array<CLTerm, 4>& constants)
      : base_(std::move(base)), name_(std::move(name)), terms_(constants) {
    for (int p = 0; p < 4; ++p) constants_.push_back(wrap(eval_closed(*base_, terms_[p])));
  }

  std::string name() const override { return name_; }

  Element app(const Element& a, const Element& b) const override {
    return wrap(base_->app(inner(a), inner(b)));
  }

  Element constant(Prim p) const override { return constants_[static_cast<int>(p)]; }

  Verdict eq(const Element& a, const Element& b, const Fuel& fuel) const override {
    return base_->eq(inner(a), inner(b), fuel);
  }

  Verdict poly_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel) const override {
    return base_->poly_eq(translate(t), translate(u), fuel);
  }

  Element generic(std::uint32_t j) const override { return wrap(base_->generic(j)); }

 private:
  const Element& inner(const Element& a) const {
    check_owner(a);
    return a.as<WrapRep>().inner();
  }

  Element wrap(Element a) const { return make(std::make_shared<const WrapRep>(std::move(a))); }

  CLTerm translate(const CLTerm& t) const {
    return map_atoms(resolve_generators(*this, t), [this](const CLTerm& a) {
      if (a.kind() == CLTerm::Kind::Prim) return terms_[static_cast<int>(a.prim_value())];
      if (a.kind() == CLTerm::Kind::Elem) return CLTerm::elem(inner(a.element()));
      return a;
    });
  }

  ModelPtr base_;
  std::string name_;
  std::array<CLTerm, 4> terms_;
  std::vector<Element> constants_;
};

}  // namespace

PreModel::PreModel() : id_(next_model_id.fetch_add(1)) {}

void PreModel::check_owner(const Element& a) const {
  if (a.owner() != id_) throw ForeignElement("element {" + a.text() + "} does not belong to " + name());
}

std::string PreModel::show(const Element& a) const {
  check_owner(a);
  return a.text();
}

NormalizeOutput PreModel::normalize(const CLTerm& t, const Fuel&) const {
  NormalizeOutput out;
  out.text = show(eval_closed(*this, t));
  return out;
}

ModelPtr free_cl_model(std::uint32_t generators) { return std::make_shared<const FreeModel>(generators); }

ModelPtr lambda_beta_model() { return std::make_shared<const LambdaBetaModel>(); }

const CLTerm* free_term(const Element& a) {
  auto* rep = dynamic_cast<const TermRep*>(&a.rep());
  return rep != nullptr ? &rep->term() : nullptr;
}

const LamTerm* lambda_term(const Element& a) {
  auto* rep = dynamic_cast<const LamRep*>(&a.rep());
  return rep != nullptr ? &rep->term() : nullptr;
}

Element eval_closed(const PreModel& model, const CLTerm& t) {
  switch (t.kind()) {
    case CLTerm::Kind::Prim: return model.constant(t.prim_value());
    case CLTerm::Kind::Gen: return model.generic(t.index());
    case CLTerm::Kind::Elem: model.check_owner(t.element()); return t.element();
    case CLTerm::Kind::Ind:
      throw IndeterminatePresent("x" + std::to_string(t.index()) + " in a term evaluated as closed");
    case CLTerm::Kind::App: return model.app(eval_closed(model, t.fun()), eval_closed(model, t.arg()));
  }
  throw Error("unreachable");
}

CLTerm resolve_generators(const PreModel& model, const CLTerm& t) {
  return map_atoms(t, [&model](const CLTerm& a) {
    if (a.kind() == CLTerm::Kind::Gen) return CLTerm::elem(model.generic(a.index()));
    return a;
  });
}

ModelPtr reconstant_model(ModelPtr base, std::string name, const std::array<CLTerm, 4>& constants) {
  return std::make_shared<const ReconstantModel>(std::move(base), std::move(name), constants);
}

}  // namespace reflex
