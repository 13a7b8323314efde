#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace reflex {

using ModelId = std::uint64_t;

/// Model-specific payload behind an Element. Each model defines its own
/// representation; the base only needs printing and syntactic identity.
class ElementRep {
 public:
  virtual ~ElementRep() = default;
  virtual std::string text() const = 0;
  // Syntactic identity of representatives (never semantic equality).
  virtual bool same(const ElementRep& other) const = 0;
};

/// Opaque handle to an element of a pre-model. Only meaningful relative to
/// the model that issued it.
class Element {
 public:
  Element(ModelId owner, std::shared_ptr<const ElementRep> rep)
      : owner_(owner), rep_(std::move(rep)) {}

  ModelId owner() const { return owner_; }
  const ElementRep& rep() const { return *rep_; }
  std::string text() const { return rep_->text(); }

  template <class Rep>
  const Rep& as() const {
    return static_cast<const Rep&>(*rep_);
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.owner_ == b.owner_ && (a.rep_ == b.rep_ || a.rep_->same(*b.rep_));
  }

 private:
  ModelId owner_;
  std::shared_ptr<const ElementRep> rep_;
};

}  // namespace reflex
