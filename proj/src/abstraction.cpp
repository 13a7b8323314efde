#include "reflex/abstraction.hpp"

#include <algorithm>
#include <set>

#include "reflex/error.hpp"

namespace reflex {

CLTerm lam_star(std::uint32_t i, const CLTerm& t) {
  if (t.is_ind(i)) return CLTerm::i();
  if (t.is_atom()) return CLTerm::app(CLTerm::k(), t);
  return apply(CLTerm::s(), {lam_star(i, t.fun()), lam_star(i, t.arg())});
}

CLTerm lam_dag(std::uint32_t i, const CLTerm& t) {
  const CLTerm e = CLTerm::e();
  if (t.is_ind(i)) return CLTerm::app(e, CLTerm::i());
  if (t.is_atom()) return CLTerm::app(e, CLTerm::app(CLTerm::k(), t));
  if (t.fun().is_atom() && !t.fun().is_ind(i) && t.arg().is_ind(i)) return CLTerm::app(e, t.fun());
  return CLTerm::app(e, apply(CLTerm::s(), {lam_dag(i, t.fun()), lam_dag(i, t.arg())}));
}

CLTerm lam_abstract(AbsMode mode, std::uint32_t i, const CLTerm& t) {
  return mode == AbsMode::Star ? lam_star(i, t) : lam_dag(i, t);
}

CLTerm lam_multi(AbsMode mode, std::span<const std::uint32_t> indices, const CLTerm& t) {
  if (indices.empty()) throw Error("lam_multi needs at least one index");
  std::set<std::uint32_t> seen;
  for (auto i : indices) {
    if (!seen.insert(i).second) throw DuplicateIndex("x" + std::to_string(i) + " abstracted twice");
  }
  CLTerm out = t;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) out = lam_abstract(mode, *it, out);
  return out;
}

CLTerm lam_multi(AbsMode mode, std::initializer_list<std::uint32_t> indices, const CLTerm& t) {
  return lam_multi(mode, std::span<const std::uint32_t>(indices.begin(), indices.size()), t);
}

CLTerm eps(std::uint32_t n) {
  if (n == 0) throw Error("eps is defined for n >= 1");
  const CLTerm s = CLTerm::s();
  const CLTerm k = CLTerm::k();
  const CLTerm ke = CLTerm::app(k, CLTerm::e());
  CLTerm out = CLTerm::e();
  for (std::uint32_t m = 1; m < n; ++m) out = apply(s, {ke, CLTerm::app(s, CLTerm::app(k, out))});
  return out;
}

Pairing pairing(AbsMode mode) {
  const CLTerm x1 = CLTerm::ind(1), x2 = CLTerm::ind(2), x3 = CLTerm::ind(3);
  return Pairing{CLTerm::k(), lam_multi(mode, {1, 2}, x2), lam_multi(mode, {1, 2, 3}, apply(x3, {x1, x2}))};
}

CLTerm make_pair(AbsMode mode, const CLTerm& t, const CLTerm& u) {
  return apply(pairing(mode).pair, {t, u});
}

std::uint32_t fresh_index(std::initializer_list<CLTerm> terms) {
  std::uint32_t m = 0;
  for (const auto& t : terms) m = std::max(m, t.max_ind());
  return m + 1;
}

}  // namespace reflex
