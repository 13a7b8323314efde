#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace reflex {

/// Resource limits for a normalization run.
struct Fuel {
  std::size_t steps = 10000;
  std::size_t node_cap = 100000;

  Fuel scaled(std::size_t factor) const { return {steps * factor, node_cap * factor}; }
};

/// Which limit stopped a normalization.
enum class Cap { Fuel, Size };

std::string to_string(Cap cap);

/// Outcome of a normalization: either a normal form or the cap that was hit.
template <class Term>
struct Normalized {
  std::optional<Term> normal_form;
  Cap cap = Cap::Fuel;
  std::size_t steps = 0;

  bool ok() const { return normal_form.has_value(); }
};

/// Three-valued equality result.
class Verdict {
 public:
  enum class Kind { Equal, NotEqual, Unknown };

  static Verdict equal() { return Verdict(Kind::Equal); }
  static Verdict not_equal(std::string left, std::string right) {
    Verdict v(Kind::NotEqual);
    v.left_ = std::move(left);
    v.right_ = std::move(right);
    return v;
  }
  static Verdict unknown(Cap cap) {
    Verdict v(Kind::Unknown);
    v.cap_ = cap;
    return v;
  }

  Kind kind() const { return kind_; }
  bool is_equal() const { return kind_ == Kind::Equal; }
  bool is_not_equal() const { return kind_ == Kind::NotEqual; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }

  // Witness normal forms, meaningful for NotEqual only.
  const std::string& left() const { return left_; }
  const std::string& right() const { return right_; }
  // The cap that was hit, meaningful for Unknown only.
  Cap cap() const { return cap_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  explicit Verdict(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::string left_;
  std::string right_;
  Cap cap_ = Cap::Fuel;
};

// "equal", "not-equal", "unknown(fuel)" or "unknown(size)".
std::string to_string(const Verdict& v);

}  // namespace reflex
