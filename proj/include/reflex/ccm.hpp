#pragma once

// Cartesian-closed-monoid structure on A*: composition, unit, projections,
// evaluation, pairing and currying, at term and element level.

#include <optional>

#include "reflex/abstraction.hpp"
#include "reflex/model.hpp"

namespace reflex {

class CcmContext {
 public:
  // mode picks the outer abstraction; the pairing combinators are always
  // the dagger ones.
  explicit CcmContext(ModelPtr model, AbsMode mode = AbsMode::Dag);

  const PreModel& model() const { return *model_; }
  AbsMode mode() const { return mode_; }

  // Term builders; the bound variable is chosen fresh for the arguments.
  CLTerm compose(const CLTerm& a, const CLTerm& b) const;  // \x. a (b x)
  CLTerm pair(const CLTerm& a, const CLTerm& b) const;     // \x. [a x, b x]
  CLTerm curry(const CLTerm& a) const;                     // \x y. a [x, y]
  const CLTerm& unit() const { return unit_; }             // e i
  const CLTerm& p() const { return p_; }                   // \x. x tru
  const CLTerm& q() const { return q_; }                   // \x. x fls
  const CLTerm& eval() const { return eval_; }             // \x. x tru (x fls)
  const Pairing& pairing_terms() const { return pairing_; }

  // Element versions, evaluated in the model. The pairing combinator enters
  // as an element.
  Element compose(const Element& a, const Element& b) const;
  Element pair(const Element& a, const Element& b) const;
  Element curry(const Element& a) const;
  Element element(const CLTerm& closed) const;

 private:
  CLTerm abs(std::uint32_t i, const CLTerm& t) const { return lam_abstract(mode_, i, t); }

  ModelPtr model_;
  AbsMode mode_;
  Pairing pairing_;
  CLTerm unit_, p_, q_, eval_;
  std::optional<Element> pair_elem_;
};

}  // namespace reflex
