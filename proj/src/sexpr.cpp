#include <cctype>
#include <vector>

#include "indgen/render.hpp"

namespace indgen {

namespace {

//------------------------------------------------------------------------------
// writer

std::string write_type(const TypeExpr& ty) {
  if (ty.is<TyVar>()) return ty.as<TyVar>().name;
  if (ty.is<TyStar>()) return "(kind-star)";
  if (ty.is<TyApp>()) {
    const auto& a = ty.as<TyApp>();
    if (a.args.empty()) return a.head;
    std::string s = "(" + a.head;
    for (const auto& arg : a.args) s += " " + write_type(arg);
    return s + ")";
  }
  if (ty.is<TyTuple>()) {
    std::string s = "(tuple";
    for (const auto& e : ty.as<TyTuple>().elems) s += " " + write_type(e);
    return s + ")";
  }
  const auto& ar = ty.as<TyArrow>();
  return "(arrow " + write_type(ar.domain) + " " + write_type(ar.codomain) + ")";
}

std::string write_sort(const Sort& s) {
  switch (s.kind) {
    case Sort::Kind::kStar: return "(kind-star)";
    case Sort::Kind::kType: return "(ty " + write_type(*s.type) + ")";
    case Sort::Kind::kPred: return "(pred-over " + write_type(*s.type) + ")";
  }
  return "";
}

std::string write_term(const Term& t) {
  if (t.is<TmVar>()) return "(var " + t.as<TmVar>().name + ")";
  if (t.is<TmBottom>()) return "(bottom)";
  const auto& a = t.as<TmApp>();
  std::string s = "(app " + a.ctor;
  for (const auto& arg : a.args) s += " " + write_term(arg);
  return s + ")";
}

std::string write_formula(const Formula& f) {
  if (f.is<FTruth>()) return "(true)";
  if (f.is<FPred>()) {
    const auto& p = f.as<FPred>();
    return "(pred " + p.pred + " " + write_term(p.arg) + ")";
  }
  if (f.is<FAnd>()) {
    const auto& a = f.as<FAnd>();
    return "(and " + write_formula(a.left) + " " + write_formula(a.right) + ")";
  }
  if (f.is<FImplies>()) {
    const auto& i = f.as<FImplies>();
    return "(implies " + write_formula(i.antecedent) + " " +
           write_formula(i.consequent) + ")";
  }
  const auto& q = f.as<FForall>();
  return "(forall (" + q.var + " " + write_sort(q.sort) + ") " +
         write_formula(q.body) + ")";
}

//------------------------------------------------------------------------------
// reader

struct SNode {
  bool is_list = false;
  std::string atom;
  std::vector<SNode> items;
  SourcePos pos;
};

[[noreturn]] void fail(const SourcePos& pos, const std::string& msg,
                       std::vector<std::string> expected = {}) {
  throw ParseError(ParseError::Category::kSyntax, pos, msg, std::move(expected));
}

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  SNode read_one() {
    skip();
    if (at_end()) fail(pos_, "empty input", {"'('"});
    SNode n = read();
    skip();
    if (!at_end()) fail(pos_, "trailing input after s-expression");
    return n;
  }

 private:
  bool at_end() const { return pos_.offset >= src_.size(); }
  char peek() const { return src_[pos_.offset]; }

  void advance() {
    const char c = src_[pos_.offset++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++pos_.column;
    }
  }

  void skip() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  SNode read() {
    SNode n;
    n.pos = pos_;
    if (peek() == ')') fail(pos_, "unexpected ')'");
    if (peek() == '(') {
      n.is_list = true;
      advance();
      for (;;) {
        skip();
        if (at_end())
          fail(pos_, "unclosed '(' opened at " + n.pos.str(), {"')'"});
        if (peek() == ')') {
          advance();
          return n;
        }
        n.items.push_back(read());
      }
    }
    while (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) &&
           peek() != '(' && peek() != ')' && peek() != ';') {
      n.atom += peek();
      advance();
    }
    return n;
  }

  std::string_view src_;
  SourcePos pos_;
};

const std::string& head_of(const SNode& n) {
  static const std::string none;
  if (!n.is_list || n.items.empty() || n.items[0].is_list) return none;
  return n.items[0].atom;
}

void arity(const SNode& n, std::size_t count, const std::string& what) {
  if (n.items.size() != count)
    fail(n.items.size() > count ? n.items[count].pos : n.pos, "'" + what + "' takes " + std::to_string(count - 1) +
                    " argument(s), got " + std::to_string(n.items.size() - 1));
}

std::string name_atom(const SNode& n, bool (*valid)(std::string_view),
                      const std::string& what) {
  if (n.is_list || !valid(n.atom)) fail(n.pos, "expected " + what, {what});
  return n.atom;
}

bool any_name(std::string_view s) { return is_upper_name(s) || is_lower_name(s); }

TypeExpr to_type(const SNode& n) {
  if (!n.is_list) {
    if (is_lower_name(n.atom)) return TypeExpr::var(n.atom);
    if (is_upper_name(n.atom)) return TypeExpr::app(n.atom);
    fail(n.pos, "expected type", {"type"});
  }
  const std::string& h = head_of(n);
  if (h == "kind-star") {
    arity(n, 1, h);
    return TypeExpr::star();
  }
  if (h == "tuple") {
    if (n.items.size() < 3) fail(n.pos, "tuple needs at least two elements");
    std::vector<TypeExpr> elems;
    for (std::size_t i = 1; i < n.items.size(); ++i)
      elems.push_back(to_type(n.items[i]));
    return TypeExpr::tuple(std::move(elems));
  }
  if (h == "arrow") {
    arity(n, 3, h);
    return TypeExpr::arrow(to_type(n.items[1]), to_type(n.items[2]));
  }
  if (is_upper_name(h) && n.items.size() >= 2) {
    std::vector<TypeExpr> args;
    for (std::size_t i = 1; i < n.items.size(); ++i)
      args.push_back(to_type(n.items[i]));
    return TypeExpr::app(h, std::move(args));
  }
  fail(n.pos, "expected type", {"type"});
}

Sort to_sort(const SNode& n) {
  const std::string& h = head_of(n);
  if (h == "kind-star") {
    arity(n, 1, h);
    return Sort::kind_star();
  }
  if (h == "ty") {
    arity(n, 2, h);
    return Sort::of_type(to_type(n.items[1]));
  }
  if (h == "pred-over") {
    arity(n, 2, h);
    return Sort::pred_over(to_type(n.items[1]));
  }
  fail(n.pos, "expected sort", {"(kind-star)", "(ty ...)", "(pred-over ...)"});
}

Term to_term(const SNode& n) {
  const std::string& h = head_of(n);
  if (h == "var") {
    arity(n, 2, h);
    return Term::var(name_atom(n.items[1], any_name, "variable name"));
  }
  if (h == "bottom") {
    arity(n, 1, h);
    return Term::bottom();
  }
  if (h == "app") {
    if (n.items.size() < 2) fail(n.pos, "'app' needs a constructor name");
    const std::string c = name_atom(n.items[1], any_name, "constructor name");
    std::vector<Term> args;
    for (std::size_t i = 2; i < n.items.size(); ++i)
      args.push_back(to_term(n.items[i]));
    return Term::app(c, std::move(args));
  }
  fail(n.pos, "expected term", {"(var ...)", "(app ...)", "(bottom)"});
}

Formula to_formula(const SNode& n) {
  const std::string& h = head_of(n);
  if (h == "true") {
    arity(n, 1, h);
    return Formula::truth();
  }
  if (h == "pred") {
    arity(n, 3, h);
    return Formula::pred(name_atom(n.items[1], any_name, "predicate name"),
                         to_term(n.items[2]));
  }
  if (h == "and") {
    arity(n, 3, h);
    return Formula::conj(to_formula(n.items[1]), to_formula(n.items[2]));
  }
  if (h == "implies") {
    arity(n, 3, h);
    return Formula::implies(to_formula(n.items[1]), to_formula(n.items[2]));
  }
  if (h == "forall") {
    arity(n, 3, h);
    const SNode& b = n.items[1];
    if (!b.is_list || b.items.size() != 2)
      fail(b.pos, "expected binder", {"(name sort)"});
    return Formula::forall(name_atom(b.items[0], any_name, "variable name"),
                           to_sort(b.items[1]), to_formula(n.items[2]));
  }
  fail(n.pos, "expected formula",
       {"(true)", "(pred ...)", "(and ...)", "(implies ...)", "(forall ...)"});
}

}  // namespace

std::string render_sexpr(const Formula& f) { return write_formula(f); }
std::string render_sexpr(const TypeExpr& ty) { return write_type(ty); }

Formula parse_sexpr(std::string_view input) {
  return to_formula(Reader(input).read_one());
}

}  // namespace indgen
