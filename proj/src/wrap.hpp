#pragma once

#include "reflex/element.hpp"
#include "reflex/term.hpp"

namespace reflex::detail {

// Element of a derived model carrying an element of its base.
class WrapRep : public ElementRep {
 public:
  explicit WrapRep(Element inner) : inner_(std::move(inner)) {}
  const Element& inner() const { return inner_; }
  std::string text() const override { return inner_.text(); }
  bool same(const ElementRep& other) const override {
    auto* o = dynamic_cast<const WrapRep*>(&other);
    return o != nullptr && o->inner_ == inner_;
  }

 private:
  Element inner_;
};

// Element whose representative is a CL term.
class TermRep : public ElementRep {
 public:
  explicit TermRep(CLTerm term) : term_(std::move(term)) {}
  const CLTerm& term() const { return term_; }
  std::string text() const override { return to_string(term_); }
  bool same(const ElementRep& other) const override {
    auto* o = dynamic_cast<const TermRep*>(&other);
    return o != nullptr && o->term_ == term_;
  }

 private:
  CLTerm term_;
};

// Rebuilds t bottom-up, replacing atoms through f (App nodes are kept).
template <class F>
CLTerm map_atoms(const CLTerm& t, const F& f) {
  if (t.is_app()) {
    CLTerm a = map_atoms(t.fun(), f);
    CLTerm b = map_atoms(t.arg(), f);
    if (a.same_node(t.fun()) && b.same_node(t.arg())) return t;
    return CLTerm::app(std::move(a), std::move(b));
  }
  return f(t);
}

}  // namespace reflex::detail
