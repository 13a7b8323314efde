#pragma once

// Derived pre-models A[x1..xn], bar-A1 and A*, evaluation of polynomials,
// and the isomorphism and retraction round trips.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reflex/model.hpp"

namespace reflex {

/// Polynomials over base in x1..xn. generic(j) is x_j for j <= n and the
/// embedded base.generic(j - n) beyond.
ModelPtr poly_model(ModelPtr base, std::uint32_t n);

/// The homomorphism fixing base and sending x_i to assignment[i].
Element eval_poly(const PreModel& base, const CLTerm& t, const std::map<std::uint32_t, Element>& assignment);

/// Base elements under a .1 b = s a b with constants k P; equality is ~1.
class BarModel : public PreModel {
 public:
  explicit BarModel(ModelPtr base);

  std::string name() const override;
  Element app(const Element& a, const Element& b) const override;
  Element constant(Prim p) const override;
  Verdict eq(const Element& a, const Element& b, const Fuel& fuel = {}) const override;
  /// Read through a -> a z into base[z, X] for a fresh z.
  Verdict poly_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel = {}) const override;
  Element generic(std::uint32_t j) const override;
  bool generic_complete() const override { return base_->generic_complete(); }

  /// The same base element, owned by this model.
  Element lift(const Element& base_element) const;
  const Element& base_element(const Element& a) const;
  const PreModel& base() const { return *base_; }

 private:
  ModelPtr base_;
  std::vector<Element> constants_;
};

std::shared_ptr<const BarModel> bar_a1(ModelPtr base);

/// Fixed points e a of the base under a <> b = e (s a b).
class AStarModel : public PreModel {
 public:
  explicit AStarModel(ModelPtr base);

  std::string name() const override;
  Element app(const Element& a, const Element& b) const override;
  Element constant(Prim p) const override;
  Verdict eq(const Element& a, const Element& b, const Fuel& fuel = {}) const override;
  Verdict poly_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel = {}) const override;
  Element generic(std::uint32_t j) const override;

  /// e a for a base element a.
  Element coerce(const Element& base_element) const;
  /// The base element behind a.
  const Element& base_element(const Element& a) const;
  const PreModel& base() const { return *base_; }
  /// Verdict of e (e x1) = e x1 in the base, computed at construction.
  const Verdict& reflexivity_check() const { return warning_; }

 private:
  Element wrap(Element a) const;
  ModelPtr base_;
  std::vector<Element> constants_;
  Verdict warning_ = Verdict::equal();
};

std::shared_ptr<const AStarModel> a_star(ModelPtr base);

/// (lambda* x1. t) x1 = t in base[x1].
Verdict iso_bar_forward(const PreModel& base, const CLTerm& t, const Fuel& fuel = {});
/// lambda* x1. (a x1) ~1 a.
Verdict iso_bar_backward(const PreModel& base, const Element& a, const Fuel& fuel = {});

/// g(f(t)) = t for f: x1 -> x1 tru, x2 -> x1 fls and g: x1 -> [x1, x2].
Verdict retract_xy_to_x(const PreModel& base, const CLTerm& t, const Fuel& fuel = {});

/// t over x1..xn embedded into x1..xm and mapped back by x_i -> x_min(n,i)
/// (x_i -> i when n = 0). Throws Error if m < n or t mentions x_i, i > n.
Verdict retract_fragment(const PreModel& base, std::uint32_t n, std::uint32_t m, const CLTerm& t,
                         const Fuel& fuel = {});

}  // namespace reflex
