#pragma once

// Untyped lambda terms in nameless form. Bound variables are de Bruijn
// indices (0 = innermost binder); free variables are named v<n>, n >= 1, and
// never shift. Structural equality is therefore alpha-equivalence.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "reflex/term.hpp"
#include "reflex/verdict.hpp"

namespace reflex {

class LamTerm {
 public:
  enum class Kind : std::uint8_t { Bound, Free, Abs, App };

  static LamTerm bound(std::uint32_t index);
  static LamTerm free(std::uint32_t index);
  static LamTerm abs(LamTerm body);
  static LamTerm app(LamTerm fun, LamTerm arg);

  Kind kind() const;
  std::uint32_t index() const;  // Bound and Free
  const LamTerm& body() const;
  const LamTerm& fun() const;
  const LamTerm& arg() const;

  std::size_t size() const;
  // One more than the largest dangling de Bruijn index; 0 when every bound
  // variable is captured inside the term.
  std::uint32_t loose() const;

  bool same_node(const LamTerm& other) const { return node_ == other.node_; }
  friend bool operator==(const LamTerm& a, const LamTerm& b);

 private:
  struct Node;
  explicit LamTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// `\x. body`, juxtaposition, `v<n>` for free variables. Several binders may
/// share one backslash: `\x y. x`.
LamTerm parse_lambda(std::string_view text);
std::string to_string(const LamTerm& t);

/// One leftmost-outermost beta contraction; empty when t is normal.
std::optional<LamTerm> beta_step(const LamTerm& t);

/// Normal-order reduction to beta-normal form within the fuel budget.
Normalized<LamTerm> beta_normalize(const LamTerm& t, const Fuel& fuel = {});

/// Equal iff both sides reach the same normal form; NotEqual carries both
/// normal forms; Unknown when either side exceeds its budget.
Verdict lam_eq(const LamTerm& t, const LamTerm& u, const Fuel& fuel = {});

// Translation of model-element references encountered by cl_to_lambda.
// Must throw UnmappedElement for handles it does not know.
using ElemToLambda = std::function<LamTerm(const Element&)>;

// Free-variable block reserved for indeterminates: x_i becomes v<offset+i>.
inline constexpr std::uint32_t kIndeterminateOffset = 1000;

/// Homomorphic translation k = \xy.x, s = \xyz.xz(yz), i = \x.x, e = \xy.xy.
/// Generators g_j become v<j> and must stay below the indeterminate block.
LamTerm cl_to_lambda(const CLTerm& t, const ElemToLambda& elem_map = {},
                     std::uint32_t ind_offset = kIndeterminateOffset);

}  // namespace reflex
