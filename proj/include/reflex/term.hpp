#pragma once

// Combinatory-logic terms over the primitives k, s, i, e, indeterminates
// x<n>, free generators g<n>, and references to model elements.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reflex/element.hpp"

namespace reflex {

enum class Prim : std::uint8_t { K, S, I, E };

char prim_letter(Prim p);

/// Finite set of indeterminate indices.
using IndSet = std::set<std::uint32_t>;

/// Immutable, structurally shared CL term. Copying is cheap.
class CLTerm {
 public:
  enum class Kind : std::uint8_t { Prim, Ind, Gen, Elem, App };

  static CLTerm prim(Prim p);
  static CLTerm k() { return prim(Prim::K); }
  static CLTerm s() { return prim(Prim::S); }
  static CLTerm i() { return prim(Prim::I); }
  static CLTerm e() { return prim(Prim::E); }
  // Indices start at 1; zero throws.
  static CLTerm ind(std::uint32_t index);
  static CLTerm gen(std::uint32_t index);
  static CLTerm elem(Element element);
  static CLTerm app(CLTerm fun, CLTerm arg);

  Kind kind() const;
  bool is_app() const { return kind() == Kind::App; }
  bool is_atom() const { return kind() != Kind::App; }
  bool is_ind(std::uint32_t index) const;

  Prim prim_value() const;
  std::uint32_t index() const;  // Ind and Gen
  const Element& element() const;
  const CLTerm& fun() const;
  const CLTerm& arg() const;

  // Node count.
  std::size_t size() const;
  // Largest indeterminate index occurring, 0 if none.
  std::uint32_t max_ind() const;
  bool has_elem() const;

  bool same_node(const CLTerm& other) const { return node_ == other.node_; }

  friend bool operator==(const CLTerm& a, const CLTerm& b);

 private:
  struct Node;
  explicit CLTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Left-associated application of f to args.
CLTerm apply(CLTerm f, std::initializer_list<CLTerm> args);
CLTerm apply(CLTerm f, std::span<const CLTerm> args);

// Head of the application spine and its arguments, left to right.
struct Spine {
  CLTerm head;
  std::vector<CLTerm> args;
};
Spine unwind(const CLTerm& t);

/// Parses the term grammar; juxtaposition associates left.
CLTerm parse(std::string_view text);

/// Lowercase k/s/i/e, x<n>, g<n>, minimal parentheses. Element references
/// print as {text}, which the grammar does not accept.
std::string to_string(const CLTerm& t);

IndSet fv(const CLTerm& t);
bool is_closed(const CLTerm& t);

/// Replaces every Ind i by u.
CLTerm subst(const CLTerm& t, std::uint32_t i, const CLTerm& u);

/// Simultaneous substitution; indeterminates absent from the map stay.
CLTerm subst_many(const CLTerm& t, const std::map<std::uint32_t, CLTerm>& sigma);

}  // namespace reflex
