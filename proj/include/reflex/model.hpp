#pragma once

// Combinatory pre-models: the abstract interface, the free CL model, the
// lambda-beta term model, and closed-term evaluation.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "reflex/element.hpp"
#include "reflex/lambda.hpp"
#include "reflex/term.hpp"
#include "reflex/verdict.hpp"

namespace reflex {

/// Printed normal form, or the cap that stopped normalization.
struct NormalizeOutput {
  std::optional<std::string> text;
  Cap cap = Cap::Fuel;
  std::size_t steps = 0;
};

class PreModel {
 public:
  virtual ~PreModel() = default;
  PreModel(const PreModel&) = delete;
  PreModel& operator=(const PreModel&) = delete;

  ModelId id() const { return id_; }
  virtual std::string name() const = 0;

  virtual Element app(const Element& a, const Element& b) const = 0;
  virtual Element constant(Prim p) const = 0;
  Element k() const { return constant(Prim::K); }
  Element s() const { return constant(Prim::S); }
  Element i() const { return constant(Prim::I); }
  Element e() const { return constant(Prim::E); }

  virtual Verdict eq(const Element& a, const Element& b, const Fuel& fuel = {}) const = 0;

  /// Equality of polynomials: Ind atoms are indeterminates, Gen j denotes
  /// generic(j), element references must belong to this model.
  virtual Verdict poly_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel = {}) const = 0;

  /// A free element; distinct j give pairwise unequal elements.
  virtual Element generic(std::uint32_t j) const = 0;

  virtual std::string show(const Element& a) const;

  /// Default: evaluate the closed term and show the element.
  virtual NormalizeOutput normalize(const CLTerm& t, const Fuel& fuel = {}) const;

  /// True when one generic instance certifies a universal equation.
  virtual bool generic_complete() const { return false; }

  /// Throws ForeignElement unless a was issued by this model.
  void check_owner(const Element& a) const;

 protected:
  PreModel();
  Element make(std::shared_ptr<const ElementRep> rep) const { return Element(id_, std::move(rep)); }

 private:
  ModelId id_;
};

using ModelPtr = std::shared_ptr<const PreModel>;

/// Closed CL terms over k, s, i, e, g1..gn under weak equality.
ModelPtr free_cl_model(std::uint32_t generators);

/// Lambda terms modulo beta.
ModelPtr lambda_beta_model();

/// Representative of a free-model element; nullptr for other elements.
const CLTerm* free_term(const Element& a);
/// Representative of a lambda-beta element; nullptr for other elements.
const LamTerm* lambda_term(const Element& a);

/// Homomorphic fold of a closed term. Gen j evaluates to generic(j).
Element eval_closed(const PreModel& model, const CLTerm& t);

/// Replaces each Gen j by a reference to model.generic(j).
CLTerm resolve_generators(const PreModel& model, const CLTerm& t);

/// Same carrier and application as base, with the constants replaced by
/// the values of the given closed base terms (indexed by Prim).
ModelPtr reconstant_model(ModelPtr base, std::string name, const std::array<CLTerm, 4>& constants);

}  // namespace reflex
