#include "reflex/lambda.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "reflex/error.hpp"

namespace reflex {

struct LamTerm::Node {
  Kind kind;
  std::uint32_t index = 0;
  std::optional<LamTerm> left{}; // body for Abs, fun for App
  std::optional<LamTerm> right{};// arg for App
  std::size_t size = 1;
  std::uint32_t loose = 0;
};

LamTerm LamTerm::bound(std::uint32_t index) {
  Node n{Kind::Bound, index};
  n.loose = index + 1;
  return LamTerm(std::make_shared<const Node>(std::move(n)));
}

LamTerm LamTerm::free(std::uint32_t index) {
  if (index == 0) throw Error("free variable indices start at 1");
  return LamTerm(std::make_shared<const Node>(Node{Kind::Free, index}));
}

LamTerm LamTerm::abs(LamTerm body) {
  Node n{Kind::Abs};
  n.size = 1 + body.size();
  n.loose = body.loose() > 0 ? body.loose() - 1 : 0;
  n.left = std::move(body);
  return LamTerm(std::make_shared<const Node>(std::move(n)));
}

LamTerm LamTerm::app(LamTerm fun, LamTerm arg) {
  Node n{Kind::App};
  n.size = 1 + fun.size() + arg.size();
  n.loose = std::max(fun.loose(), arg.loose());
  n.left = std::move(fun);
  n.right = std::move(arg);
  return LamTerm(std::make_shared<const Node>(std::move(n)));
}

LamTerm::Kind LamTerm::kind() const { return node_->kind; }
std::uint32_t LamTerm::index() const { return node_->index; }
const LamTerm& LamTerm::body() const { return *node_->left; }
const LamTerm& LamTerm::fun() const { return *node_->left; }
const LamTerm& LamTerm::arg() const { return *node_->right; }
std::size_t LamTerm::size() const { return node_->size; }
std::uint32_t LamTerm::loose() const { return node_->loose; }

bool operator==(const LamTerm& a, const LamTerm& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size || x.loose != y.loose) return false;
  switch (x.kind) {
    case LamTerm::Kind::Bound:
    case LamTerm::Kind::Free: return x.index == y.index;
    case LamTerm::Kind::Abs: return *x.left == *y.left;
    case LamTerm::Kind::App: return *x.left == *y.left && *x.right == *y.right;
  }
  return false;
}

namespace {

// Adds d to every bound index >= cutoff.
LamTerm shift(const LamTerm& t, std::uint32_t d, std::uint32_t cutoff) {
  if (d == 0 || t.loose() <= cutoff) return t;
  switch (t.kind()) {
    case LamTerm::Kind::Bound: return LamTerm::bound(t.index() + d);
    case LamTerm::Kind::Abs: return LamTerm::abs(shift(t.body(), d, cutoff + 1));
    case LamTerm::Kind::App:
      return LamTerm::app(shift(t.fun(), d, cutoff), shift(t.arg(), d, cutoff));
    default: return t;
  }
}

// Substitutes arg for the binder at `depth` and removes that binder:
// indices above depth drop by one.
LamTerm instantiate(const LamTerm& t, std::uint32_t depth, const LamTerm& arg) {
  if (t.loose() <= depth) return t;
  switch (t.kind()) {
    case LamTerm::Kind::Bound:
      if (t.index() == depth) return shift(arg, depth, 0);
      return LamTerm::bound(t.index() - 1);
    case LamTerm::Kind::Abs: return LamTerm::abs(instantiate(t.body(), depth + 1, arg));
    case LamTerm::Kind::App:
      return LamTerm::app(instantiate(t.fun(), depth, arg), instantiate(t.arg(), depth, arg));
    default: return t;
  }
}

LamTerm contract(const LamTerm& redex) { return instantiate(redex.fun().body(), 0, redex.arg()); }

struct LamSpine {
  LamTerm head;
  std::vector<LamTerm> args;
};

LamSpine unwind_lam(const LamTerm& t) {
  std::vector<LamTerm> rev;
  const LamTerm* cur = &t;
  while (cur->kind() == LamTerm::Kind::App) {
    rev.push_back(cur->arg());
    cur = &cur->fun();
  }
  return LamSpine{*cur, std::vector<LamTerm>(rev.rbegin(), rev.rend())};
}

LamTerm rewind(LamTerm head, const std::vector<LamTerm>& args, std::size_t from = 0) {
  for (std::size_t k = from; k < args.size(); ++k) head = LamTerm::app(std::move(head), args[k]);
  return head;
}

// Normal-order normalizer: head-reduce, then descend into the body or the
// arguments left to right. `outside` is the node count of the surrounding
// context so that the size cap applies to the whole intermediate term.
class Normalizer {
 public:
  explicit Normalizer(const Fuel& fuel) : fuel_(fuel) {}

  std::optional<LamTerm> run(const LamTerm& t, std::size_t outside) {
    LamTerm cur = t;
    while (true) {
      LamSpine sp = unwind_lam(cur);
      if (sp.head.kind() == LamTerm::Kind::Abs && !sp.args.empty()) {
        if (steps_ >= fuel_.steps) return fail(Cap::Fuel);
        ++steps_;
        LamTerm head = instantiate(sp.head.body(), 0, sp.args[0]);
        cur = rewind(std::move(head), sp.args, 1);
        if (outside + cur.size() > fuel_.node_cap) return fail(Cap::Size);
        continue;
      }
      if (sp.head.kind() == LamTerm::Kind::Abs) {
        auto body = run(sp.head.body(), outside + 1);
        if (!body) return std::nullopt;
        return LamTerm::abs(std::move(*body));
      }
      // Variable head: the arguments are independent.
      std::size_t total = cur.size();
      for (auto& a : sp.args) {
        const std::size_t before = a.size();
        auto na = run(a, outside + total - before);
        if (!na) return std::nullopt;
        total = total - before + na->size();
        a = std::move(*na);
      }
      return rewind(sp.head, sp.args);
    }
  }

  std::size_t steps() const { return steps_; }
  Cap cap() const { return cap_; }

 private:
  std::optional<LamTerm> fail(Cap c) {
    cap_ = c;
    return std::nullopt;
  }

  Fuel fuel_;
  std::size_t steps_ = 0;
  Cap cap_ = Cap::Fuel;
};

// ---------------------------------------------------------------------------
// Text

const char* const kNames[] = {"x", "y", "z", "w", "a", "b", "c", "d", "f", "h", "p", "q", "r", "t", "u"};
constexpr std::size_t kNameCount = sizeof(kNames) / sizeof(kNames[0]);

std::string binder_name(std::size_t depth) {
  if (depth < kNameCount) return kNames[depth];
  return "x" + std::to_string(depth);
}

void print(const LamTerm& t, std::size_t depth, std::string& out) {
  switch (t.kind()) {
    case LamTerm::Kind::Bound:
      if (t.index() >= depth) {
        out += "#" + std::to_string(t.index() - depth);  // dangling index
      } else {
        out += binder_name(depth - 1 - t.index());
      }
      return;
    case LamTerm::Kind::Free: out += "v" + std::to_string(t.index()); return;
    case LamTerm::Kind::Abs:
      out += "\\" + binder_name(depth) + ". ";
      print(t.body(), depth + 1, out);
      return;
    case LamTerm::Kind::App: {
      const bool fun_parens = t.fun().kind() == LamTerm::Kind::Abs;
      if (fun_parens) out.push_back('(');
      print(t.fun(), depth, out);
      if (fun_parens) out.push_back(')');
      out.push_back(' ');
      const bool arg_parens = t.arg().kind() == LamTerm::Kind::App || t.arg().kind() == LamTerm::Kind::Abs;
      if (arg_parens) out.push_back('(');
      print(t.arg(), depth, out);
      if (arg_parens) out.push_back(')');
      return;
    }
  }
}

class LamParser {
 public:
  explicit LamParser(std::string_view text) : text_(text) {}

  LamTerm parse_all() {
    LamTerm t = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("unexpected character", pos_);
    return t;
  }

 private:
  LamTerm parse_expr() {
    std::optional<LamTerm> acc;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      LamTerm a = text_[pos_] == '\\' ? parse_abs() : parse_atom();
      acc = acc ? LamTerm::app(std::move(*acc), std::move(a)) : std::move(a);
    }
    if (!acc) throw SyntaxError("expected a lambda term", pos_);
    return *acc;
  }

  LamTerm parse_abs() {
    ++pos_;  // backslash
    std::size_t pushed = 0;
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        break;
      }
      const std::size_t at = pos_;
      std::string name = ident();
      if (name.empty()) throw SyntaxError("expected binder name", at);
      scope_.push_back(std::move(name));
      ++pushed;
    }
    if (pushed == 0) throw SyntaxError("abstraction without binder", pos_);
    LamTerm body = parse_expr();
    for (std::size_t k = 0; k < pushed; ++k) {
      scope_.pop_back();
      body = LamTerm::abs(std::move(body));
    }
    return body;
  }

  LamTerm parse_atom() {
    if (text_[pos_] == '(') {
      ++pos_;
      LamTerm t = parse_expr();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return t;
    }
    const std::size_t at = pos_;
    std::string name = ident();
    if (name.empty()) throw SyntaxError("unexpected character", at);
    for (std::size_t k = scope_.size(); k-- > 0;) {
      if (scope_[k] == name) return LamTerm::bound(static_cast<std::uint32_t>(scope_.size() - 1 - k));
    }
    if (name.size() > 1 && name[0] == 'v' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        name[1] != '0') {
      return LamTerm::free(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
    }
    throw SyntaxError("unbound variable '" + name + "'", at);
  }

  std::string ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

LamTerm combinator(Prim p) {
  using L = LamTerm;
  static const LamTerm k = L::abs(L::abs(L::bound(1)));
  static const LamTerm s = L::abs(L::abs(L::abs(
      L::app(L::app(L::bound(2), L::bound(0)), L::app(L::bound(1), L::bound(0))))));
  static const LamTerm i = L::abs(L::bound(0));
  static const LamTerm e = L::abs(L::abs(L::app(L::bound(1), L::bound(0))));
  switch (p) {
    case Prim::K: return k;
    case Prim::S: return s;
    case Prim::I: return i;
    case Prim::E: return e;
  }
  return i;
}

}  // namespace

LamTerm parse_lambda(std::string_view text) { return LamParser(text).parse_all(); }

std::string to_string(const LamTerm& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

std::optional<LamTerm> beta_step(const LamTerm& t) {
  switch (t.kind()) {
    case LamTerm::Kind::Abs: {
      auto b = beta_step(t.body());
      if (!b) return std::nullopt;
      return LamTerm::abs(std::move(*b));
    }
    case LamTerm::Kind::App: {
      if (t.fun().kind() == LamTerm::Kind::Abs) return contract(t);
      if (auto f = beta_step(t.fun())) return LamTerm::app(std::move(*f), t.arg());
      if (auto a = beta_step(t.arg())) return LamTerm::app(t.fun(), std::move(*a));
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

Normalized<LamTerm> beta_normalize(const LamTerm& t, const Fuel& fuel) {
  Normalized<LamTerm> result;
  if (t.size() > fuel.node_cap) {
    result.cap = Cap::Size;
    return result;
  }
  Normalizer n(fuel);
  result.normal_form = n.run(t, 0);
  result.steps = n.steps();
  result.cap = n.cap();
  return result;
}

Verdict lam_eq(const LamTerm& t, const LamTerm& u, const Fuel& fuel) {
  auto nt = beta_normalize(t, fuel);
  if (!nt.ok()) return Verdict::unknown(nt.cap);
  auto nu = beta_normalize(u, fuel);
  if (!nu.ok()) return Verdict::unknown(nu.cap);
  if (*nt.normal_form == *nu.normal_form) return Verdict::equal();
  return Verdict::not_equal(to_string(*nt.normal_form), to_string(*nu.normal_form));
}

LamTerm cl_to_lambda(const CLTerm& t, const ElemToLambda& elem_map, std::uint32_t ind_offset) {
  switch (t.kind()) {
    case CLTerm::Kind::Prim: return combinator(t.prim_value());
    case CLTerm::Kind::Ind: return LamTerm::free(ind_offset + t.index());
    case CLTerm::Kind::Gen:
      if (t.index() > ind_offset) {
        throw Error("generator g" + std::to_string(t.index()) + " collides with the indeterminate block");
      }
      return LamTerm::free(t.index());
    case CLTerm::Kind::Elem:
      if (!elem_map) throw UnmappedElement("no element map for {" + t.element().text() + "}");
      return elem_map(t.element());
    case CLTerm::Kind::App:
      return LamTerm::app(cl_to_lambda(t.fun(), elem_map, ind_offset), cl_to_lambda(t.arg(), elem_map, ind_offset));
  }
  throw Error("unreachable");
}

std::string to_string(Cap cap) { return cap == Cap::Fuel ? "fuel" : "size"; }

std::string to_string(const Verdict& v) {
  switch (v.kind()) {
    case Verdict::Kind::Equal: return "equal";
    case Verdict::Kind::NotEqual: return "not-equal";
    case Verdict::Kind::Unknown: return "unknown(" + to_string(v.cap()) + ")";
  }
  return "?";
}

}  // namespace reflex
