#pragma once

// Explicit derivations for polynomial equality and for the ~1 congruence,
// their checker, and the ~1 decision procedure.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "reflex/model.hpp"
#include "reflex/random_terms.hpp"
#include "reflex/term.hpp"

namespace reflex {

enum class DerivKind { Poly, Sim1 };

enum class Rule {
  Refl,
  Sym,
  Trans,
  AppCong,
  PolyK,
  PolyS,
  PolyI,
  PolyE,
  PolyInj,
  QuoK,
  QuoS,
  QuoI,
  QuoE,
  QuoInj,
  QuoEta,
};

/// Rule name as written in s-expressions: refl, sym, trans, app, polyK, ...
std::string rule_name(Rule r);

/// Tree node carrying a claimed conclusion. Nodes built with the helper
/// constructors below carry correct claims; `make` allows arbitrary ones.
class Derivation {
 public:
  static Derivation make(Rule rule, std::vector<CLTerm> instance, std::vector<Derivation> children, CLTerm lhs,
                         CLTerm rhs);

  // Base rule with conclusion computed from the rule shape. quoInj and
  // polyInj need the model when both instance terms are element references.
  static Derivation base(DerivKind kind, Rule rule, std::vector<CLTerm> instance, const PreModel* model = nullptr);
  static Derivation refl(CLTerm t);
  static Derivation sym(Derivation d);
  static Derivation trans(Derivation d1, Derivation d2);
  static Derivation app_cong(DerivKind kind, Derivation d1, Derivation d2);

  Rule rule() const { return node_->rule; }
  const std::vector<CLTerm>& instance() const { return node_->instance; }
  const std::vector<Derivation>& children() const { return node_->children; }
  const CLTerm& lhs() const { return node_->lhs; }
  const CLTerm& rhs() const { return node_->rhs; }

 private:
  struct Node {
    Rule rule;
    std::vector<CLTerm> instance;
    std::vector<Derivation> children;
    CLTerm lhs;
    CLTerm rhs;
  };
  explicit Derivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Conclusion of a base rule instance. Throws InvalidNode("root", ...) on an
/// arity mismatch or a rule of the other kind.
std::pair<CLTerm, CLTerm> base_conclusion(DerivKind kind, Rule rule, const std::vector<CLTerm>& instance,
                                          const PreModel* model = nullptr);

/// Validates every node and returns the root conclusion. Paths name child
/// positions from the root: "root", "root.0", "root.1.0", ...
std::pair<CLTerm, CLTerm> check_poly_derivation(const Derivation& d, const PreModel* model = nullptr);

/// As above for ~1; throws IndeterminatePresent if any node mentions x_i.
std::pair<CLTerm, CLTerm> check_sim1_derivation(const Derivation& d, const PreModel* model = nullptr);

/// (trans (base polyK "x1" "g1") (refl "x1")). Element references cannot
/// be written and throw Error.
std::string to_sexpr(const Derivation& d);

/// Parses the s-expression form, recomputing every conclusion.
Derivation parse_derivation(std::string_view text, DerivKind kind);

/// Random valid derivation of bounded depth over the given atoms.
Derivation random_derivation(DerivKind kind, TermRng& rng, std::span<const CLTerm> atoms, int depth);

/// model.poly_eq(a x1, b x1).
Verdict decide_sim1(const PreModel& model, const Element& a, const Element& b, const Fuel& fuel = {});

}  // namespace reflex
