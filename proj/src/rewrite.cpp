#include "reflex/rewrite.hpp"

#include <vector>

#include "reflex/model.hpp"

namespace reflex {

namespace {

std::size_t arity(Prim p) {
  switch (p) {
    case Prim::K: return 2;
    case Prim::S: return 3;
    case Prim::I: return 1;
    case Prim::E: return 2;
  }
  return 0;
}

// Result of contracting the prim redex head a1..a_arity.
CLTerm fire(Prim p, const std::vector<CLTerm>& a) {
  switch (p) {
    case Prim::K: return a[0];
    case Prim::S: return CLTerm::app(CLTerm::app(a[0], a[2]), CLTerm::app(a[1], a[2]));
    case Prim::I: return a[0];
    case Prim::E: return CLTerm::app(a[0], a[1]);
  }
  return a[0];
}

bool collapsible(const CLTerm& head, const std::vector<CLTerm>& args, const PreModel* model) {
  return model != nullptr && head.kind() == CLTerm::Kind::Elem && !args.empty() &&
         args[0].kind() == CLTerm::Kind::Elem;
}

CLTerm collapse(const CLTerm& head, const CLTerm& arg, const PreModel& model) {
  return CLTerm::elem(model.app(head.element(), arg.element()));
}

CLTerm rebuild(CLTerm head, const std::vector<CLTerm>& args, std::size_t from) {
  for (std::size_t k = from; k < args.size(); ++k) head = CLTerm::app(std::move(head), args[k]);
  return head;
}

class Normalizer {
 public:
  Normalizer(const Fuel& fuel, const PreModel* model) : fuel_(fuel), model_(model) {}

  std::optional<CLTerm> run(const CLTerm& t, std::size_t outside) {
    CLTerm cur = t;
    while (true) {
      Spine sp = unwind(cur);
      if (sp.head.kind() == CLTerm::Kind::Prim && sp.args.size() >= arity(sp.head.prim_value())) {
        if (!spend()) return std::nullopt;
        const std::size_t n = arity(sp.head.prim_value());
        cur = rebuild(fire(sp.head.prim_value(), sp.args), sp.args, n);
        if (outside + cur.size() > fuel_.node_cap) return fail(Cap::Size);
        continue;
      }
      if (model_ != nullptr && sp.head.kind() == CLTerm::Kind::Elem && !sp.args.empty()) {
        const std::size_t before = sp.args[0].size();
        auto first = run(sp.args[0], outside + cur.size() - before);
        if (!first) return std::nullopt;
        sp.args[0] = std::move(*first);
        if (collapsible(sp.head, sp.args, model_)) {
          if (!spend()) return std::nullopt;
          cur = rebuild(collapse(sp.head, sp.args[0], *model_), sp.args, 1);
          continue;
        }
        cur = rebuild(sp.head, sp.args, 0);
        return finish_args(sp, cur.size(), outside, 1);
      }
      return finish_args(sp, cur.size(), outside, 0);
    }
  }

  std::size_t steps() const { return steps_; }
  Cap cap() const { return cap_; }

 private:
  // Normalizes the remaining arguments of a stuck spine, left to right.
  std::optional<CLTerm> finish_args(Spine& sp, std::size_t total, std::size_t outside, std::size_t from) {
    for (std::size_t k = from; k < sp.args.size(); ++k) {
      const std::size_t before = sp.args[k].size();
      auto na = run(sp.args[k], outside + total - before);
      if (!na) return std::nullopt;
      total = total - before + na->size();
      sp.args[k] = std::move(*na);
    }
    return rebuild(sp.head, sp.args, 0);
  }

  bool spend() {
    if (steps_ >= fuel_.steps) {
      cap_ = Cap::Fuel;
      return false;
    }
    ++steps_;
    return true;
  }

  std::optional<CLTerm> fail(Cap c) {
    cap_ = c;
    return std::nullopt;
  }

  Fuel fuel_;
  const PreModel* model_;
  std::size_t steps_ = 0;
  Cap cap_ = Cap::Fuel;
};

}  // namespace

std::optional<CLTerm> weak_step(const CLTerm& t, const PreModel* model) {
  Spine sp = unwind(t);
  if (sp.head.kind() == CLTerm::Kind::Prim && sp.args.size() >= arity(sp.head.prim_value())) {
    return rebuild(fire(sp.head.prim_value(), sp.args), sp.args, arity(sp.head.prim_value()));
  }
  if (collapsible(sp.head, sp.args, model)) {
    return rebuild(collapse(sp.head, sp.args[0], *model), sp.args, 1);
  }
  for (std::size_t k = 0; k < sp.args.size(); ++k) {
    if (auto r = weak_step(sp.args[k], model)) {
      sp.args[k] = std::move(*r);
      return rebuild(sp.head, sp.args, 0);
    }
  }
  return std::nullopt;
}

Normalized<CLTerm> weak_normalize(const CLTerm& t, const Fuel& fuel, const PreModel* model) {
  Normalized<CLTerm> result;
  if (t.size() > fuel.node_cap) {
    result.cap = Cap::Size;
    return result;
  }
  Normalizer n(fuel, model);
  result.normal_form = n.run(t, 0);
  result.steps = n.steps();
  result.cap = n.cap();
  return result;
}

Verdict cl_eq(const CLTerm& t, const CLTerm& u, const Fuel& fuel, const PreModel* model) {
  auto nt = weak_normalize(t, fuel, model);
  if (!nt.ok()) return Verdict::unknown(nt.cap);
  auto nu = weak_normalize(u, fuel, model);
  if (!nu.ok()) return Verdict::unknown(nu.cap);
  if (*nt.normal_form == *nu.normal_form) return Verdict::equal();
  return Verdict::not_equal(to_string(*nt.normal_form), to_string(*nu.normal_form));
}

}  // namespace reflex
