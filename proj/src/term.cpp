#include "reflex/term.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <variant>

#include "reflex/error.hpp"

namespace reflex {

struct CLTerm::Node {
  Kind kind;
  Prim prim = Prim::K;
  std::uint32_t index = 0;
  std::optional<Element> element{};
  std::optional<CLTerm> fun{};
  std::optional<CLTerm> arg{};
  std::size_t size = 1;
  std::uint32_t max_ind = 0;
  bool has_elem = false;
};

char prim_letter(Prim p) {
  switch (p) {
    case Prim::K: return 'k';
    case Prim::S: return 's';
    case Prim::I: return 'i';
    case Prim::E: return 'e';
  }
  return '?';
}

CLTerm CLTerm::prim(Prim p) {
  // The four primitives are shared singletons.
  static const CLTerm table[] = {
      CLTerm(std::make_shared<const Node>(Node{Kind::Prim, Prim::K})),
      CLTerm(std::make_shared<const Node>(Node{Kind::Prim, Prim::S})),
      CLTerm(std::make_shared<const Node>(Node{Kind::Prim, Prim::I})),
      CLTerm(std::make_shared<const Node>(Node{Kind::Prim, Prim::E})),
  };
  return table[static_cast<int>(p)];
}

CLTerm CLTerm::ind(std::uint32_t index) {
  if (index == 0) throw Error("indeterminate indices start at 1");
  Node n{Kind::Ind};
  n.index = index;
  n.max_ind = index;
  return CLTerm(std::make_shared<const Node>(std::move(n)));
}

CLTerm CLTerm::gen(std::uint32_t index) {
  if (index == 0) throw Error("generator indices start at 1");
  Node n{Kind::Gen};
  n.index = index;
  return CLTerm(std::make_shared<const Node>(std::move(n)));
}

CLTerm CLTerm::elem(Element element) {
  Node n{Kind::Elem};
  n.element = std::move(element);
  n.has_elem = true;
  return CLTerm(std::make_shared<const Node>(std::move(n)));
}

CLTerm CLTerm::app(CLTerm fun, CLTerm arg) {
  Node n{Kind::App};
  n.size = 1 + fun.size() + arg.size();
  n.max_ind = std::max(fun.max_ind(), arg.max_ind());
  n.has_elem = fun.has_elem() || arg.has_elem();
  n.fun = std::move(fun);
  n.arg = std::move(arg);
  return CLTerm(std::make_shared<const Node>(std::move(n)));
}

CLTerm::Kind CLTerm::kind() const { return node_->kind; }
bool CLTerm::is_ind(std::uint32_t index) const {
  return node_->kind == Kind::Ind && node_->index == index;
}
Prim CLTerm::prim_value() const { return node_->prim; }
std::uint32_t CLTerm::index() const { return node_->index; }
const Element& CLTerm::element() const { return *node_->element; }
const CLTerm& CLTerm::fun() const { return *node_->fun; }
const CLTerm& CLTerm::arg() const { return *node_->arg; }
std::size_t CLTerm::size() const { return node_->size; }
std::uint32_t CLTerm::max_ind() const { return node_->max_ind; }
bool CLTerm::has_elem() const { return node_->has_elem; }

bool operator==(const CLTerm& a, const CLTerm& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case CLTerm::Kind::Prim: return x.prim == y.prim;
    case CLTerm::Kind::Ind:
    case CLTerm::Kind::Gen: return x.index == y.index;
    case CLTerm::Kind::Elem: return *x.element == *y.element;
    case CLTerm::Kind::App: return *x.fun == *y.fun && *x.arg == *y.arg;
  }
  return false;
}

CLTerm apply(CLTerm f, std::initializer_list<CLTerm> args) {
  for (const auto& a : args) f = CLTerm::app(std::move(f), a);
  return f;
}

CLTerm apply(CLTerm f, std::span<const CLTerm> args) {
  for (const auto& a : args) f = CLTerm::app(std::move(f), a);
  return f;
}

Spine unwind(const CLTerm& t) {
  std::vector<CLTerm> rev;
  const CLTerm* cur = &t;
  while (cur->is_app()) {
    rev.push_back(cur->arg());
    cur = &cur->fun();
  }
  return Spine{*cur, std::vector<CLTerm>(rev.rbegin(), rev.rend())};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CLTerm parse_all() {
    CLTerm t = parse_term();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw SyntaxError("unbalanced ')'", pos_);
      throw SyntaxError("unexpected character", pos_);
    }
    return t;
  }

 private:
  CLTerm parse_term() {
    skip_space();
    std::optional<CLTerm> acc;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      CLTerm a = parse_atom();
      acc = acc ? CLTerm::app(std::move(*acc), std::move(a)) : std::move(a);
    }
    if (!acc) throw SyntaxError("expected a term", pos_);
    return *acc;
  }

  CLTerm parse_atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      CLTerm t = parse_term();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return t;
    }
    if (!std::isalnum(static_cast<unsigned char>(c))) throw SyntaxError("unexpected character", pos_);
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word.size() == 1) {
      switch (word[0]) {
        case 'k': return CLTerm::k();
        case 's': return CLTerm::s();
        case 'i': return CLTerm::i();
        case 'e': return CLTerm::e();
        default: break;
      }
    }
    if ((word[0] == 'x' || word[0] == 'g') && word.size() > 1) {
      std::string_view digits = word.substr(1);
      if (!std::all_of(digits.begin(), digits.end(), [](char d) { return d >= '0' && d <= '9'; })) {
        throw SyntaxError("malformed index", start + 1);
      }
      if (digits[0] == '0') throw SyntaxError("indices start at 1", start + 1);
      std::uint64_t value = 0;
      for (char d : digits) {
        value = value * 10 + static_cast<std::uint64_t>(d - '0');
        if (value > std::numeric_limits<std::uint32_t>::max()) {
          throw SyntaxError("index out of range", start + 1);
        }
      }
      const auto index = static_cast<std::uint32_t>(value);
      return word[0] == 'x' ? CLTerm::ind(index) : CLTerm::gen(index);
    }
    throw SyntaxError("unknown atom '" + std::string(word) + "'", start);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const CLTerm& t, std::string& out) {
  switch (t.kind()) {
    case CLTerm::Kind::Prim: out.push_back(prim_letter(t.prim_value())); return;
    case CLTerm::Kind::Ind: out += "x" + std::to_string(t.index()); return;
    case CLTerm::Kind::Gen: out += "g" + std::to_string(t.index()); return;
    case CLTerm::Kind::Elem: out += "{" + t.element().text() + "}"; return;
    case CLTerm::Kind::App:
      print(t.fun(), out);
      out.push_back(' ');
      if (t.arg().is_app()) {
        out.push_back('(');
        print(t.arg(), out);
        out.push_back(')');
      } else {
        print(t.arg(), out);
      }
      return;
  }
}

void collect_fv(const CLTerm& t, IndSet& out) {
  if (t.max_ind() == 0) return;
  if (t.kind() == CLTerm::Kind::Ind) {
    out.insert(t.index());
  } else if (t.is_app()) {
    collect_fv(t.fun(), out);
    collect_fv(t.arg(), out);
  }
}

}  // namespace

CLTerm parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const CLTerm& t) {
  std::string out;
  print(t, out);
  return out;
}

IndSet fv(const CLTerm& t) {
  IndSet out;
  collect_fv(t, out);
  return out;
}

bool is_closed(const CLTerm& t) { return t.max_ind() == 0; }

CLTerm subst(const CLTerm& t, std::uint32_t i, const CLTerm& u) {
  if (t.max_ind() < i) return t;
  switch (t.kind()) {
    case CLTerm::Kind::Ind: return t.index() == i ? u : t;
    case CLTerm::Kind::App: {
      CLTerm f = subst(t.fun(), i, u);
      CLTerm a = subst(t.arg(), i, u);
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return CLTerm::app(std::move(f), std::move(a));
    }
    default: return t;
  }
}

CLTerm subst_many(const CLTerm& t, const std::map<std::uint32_t, CLTerm>& sigma) {
  if (t.max_ind() == 0 || sigma.empty()) return t;
  switch (t.kind()) {
    case CLTerm::Kind::Ind: {
      auto it = sigma.find(t.index());
      return it == sigma.end() ? t : it->second;
    }
    case CLTerm::Kind::App: {
      CLTerm f = subst_many(t.fun(), sigma);
      CLTerm a = subst_many(t.arg(), sigma);
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return CLTerm::app(std::move(f), std::move(a));
    }
    default: return t;
  }
}

}  // namespace reflex
