#include "reflex/ccm.hpp"

namespace reflex {

CcmContext::CcmContext(ModelPtr model, AbsMode mode)
    : model_(std::move(model)),
      mode_(mode),
      pairing_(reflex::pairing(AbsMode::Dag)),
      unit_(CLTerm::app(CLTerm::e(), CLTerm::i())),
      p_(CLTerm::k()),
      q_(CLTerm::k()),
      eval_(CLTerm::k()) {
  const CLTerm x = CLTerm::ind(1);
  p_ = abs(1, CLTerm::app(x, pairing_.tru));
  q_ = abs(1, CLTerm::app(x, pairing_.fls));
  eval_ = abs(1, apply(x, {pairing_.tru, CLTerm::app(x, pairing_.fls)}));
  if (model_) pair_elem_ = element(pairing_.pair);
}

CLTerm CcmContext::compose(const CLTerm& a, const CLTerm& b) const {
  const std::uint32_t v = fresh_index({a, b});
  return abs(v, CLTerm::app(a, CLTerm::app(b, CLTerm::ind(v))));
}

CLTerm CcmContext::pair(const CLTerm& a, const CLTerm& b) const {
  const std::uint32_t v = fresh_index({a, b});
  const CLTerm x = CLTerm::ind(v);
  return abs(v, apply(pairing_.pair, {CLTerm::app(a, x), CLTerm::app(b, x)}));
}

CLTerm CcmContext::curry(const CLTerm& a) const {
  const std::uint32_t v = fresh_index({a});
  const CLTerm body = CLTerm::app(a, apply(pairing_.pair, {CLTerm::ind(v), CLTerm::ind(v + 1)}));
  return abs(v, abs(v + 1, body));
}

Element CcmContext::compose(const Element& a, const Element& b) const {
  return element(compose(CLTerm::elem(a), CLTerm::elem(b)));
}

Element CcmContext::pair(const Element& a, const Element& b) const {
  const CLTerm x = CLTerm::ind(1);
  const CLTerm body = apply(CLTerm::elem(*pair_elem_), {CLTerm::app(CLTerm::elem(a), x), CLTerm::app(CLTerm::elem(b), x)});
  return element(abs(1, body));
}

Element CcmContext::curry(const Element& a) const {
  const CLTerm body = CLTerm::app(CLTerm::elem(a), apply(CLTerm::elem(*pair_elem_), {CLTerm::ind(1), CLTerm::ind(2)}));
  return element(abs(1, abs(2, body)));
}

Element CcmContext::element(const CLTerm& closed) const { return eval_closed(*model_, closed); }

}  // namespace reflex
