#include "indgen/ast.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace indgen {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_name_tail(std::string_view s) {
  for (char c : s.substr(1))
    if (!is_name_char(c)) return false;
  return true;
}

}  // namespace

bool is_upper_name(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])) &&
         is_name_tail(s);
}

bool is_lower_name(std::string_view s) {
  return !s.empty() && std::islower(static_cast<unsigned char>(s[0])) &&
         is_name_tail(s);
}

//------------------------------------------------------------------------------

TypeExpr TypeExpr::var(Identifier name) {
  return TypeExpr(std::make_shared<TypeNode>(TypeNode{TyVar{std::move(name)}}));
}
TypeExpr TypeExpr::app(Identifier head, std::vector<TypeExpr> args) {
  return TypeExpr(std::make_shared<TypeNode>(
      TypeNode{TyApp{std::move(head), std::move(args)}}));
}
TypeExpr TypeExpr::tuple(std::vector<TypeExpr> elems) {
  if (elems.size() < 2)
    throw std::invalid_argument("tuple type needs at least two elements");
  return TypeExpr(
      std::make_shared<TypeNode>(TypeNode{TyTuple{std::move(elems)}}));
}
TypeExpr TypeExpr::arrow(TypeExpr domain, TypeExpr codomain) {
  return TypeExpr(std::make_shared<TypeNode>(
      TypeNode{TyArrow{std::move(domain), std::move(codomain)}}));
}
TypeExpr TypeExpr::star() {
  static const auto node = std::make_shared<TypeNode>(TypeNode{TyStar{}});
  return TypeExpr(node);
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  return a.node_ == b.node_ || a.node_->v == b.node_->v;
}

std::optional<Identifier> ty_con(const TypeExpr& ty) {
  if (ty.is<TyStar>())
    throw std::invalid_argument("ty_con: kind * has no type constructor");
  if (ty.is<TyApp>()) return ty.as<TyApp>().head;
  return std::nullopt;
}

bool mentions_type(const TypeExpr& ty, std::string_view name) {
  return std::visit(
      [&](const auto& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, TyApp>) {
          if (n.head == name) return true;
          for (const auto& a : n.args)
            if (mentions_type(a, name)) return true;
          return false;
        } else if constexpr (std::is_same_v<N, TyTuple>) {
          for (const auto& e : n.elems)
            if (mentions_type(e, name)) return true;
          return false;
        } else if constexpr (std::is_same_v<N, TyArrow>) {
          return mentions_type(n.domain, name) ||
                 mentions_type(n.codomain, name);
        } else {
          return false;
        }
      },
      ty.node().v);
}

TypeExpr DataDecl::self_type() const {
  std::vector<TypeExpr> args;
  args.reserve(type_params.size());
  for (const auto& p : type_params) args.push_back(TypeExpr::var(p));
  return TypeExpr::app(type_name, std::move(args));
}

const ConstructorDecl* DataDecl::find_constructor(std::string_view name) const {
  for (const auto& c : constructors)
    if (c.name == name) return &c;
  return nullptr;
}

//------------------------------------------------------------------------------

Term Term::var(Identifier name) {
  return Term(std::make_shared<TermNode>(TermNode{TmVar{std::move(name)}}));
}
Term Term::app(Identifier ctor, std::vector<Term> args) {
  return Term(std::make_shared<TermNode>(
      TermNode{TmApp{std::move(ctor), std::move(args)}}));
}
Term Term::bottom() {
  static const auto node = std::make_shared<TermNode>(TermNode{TmBottom{}});
  return Term(node);
}

bool operator==(const Term& a, const Term& b) {
  return a.node_ == b.node_ || a.node_->v == b.node_->v;
}

//------------------------------------------------------------------------------

Formula Formula::truth() {
  static const auto node = std::make_shared<FormulaNode>(FormulaNode{FTruth{}});
  return Formula(node);
}
Formula Formula::pred(Identifier pred, Term arg) {
  return Formula(std::make_shared<FormulaNode>(
      FormulaNode{FPred{std::move(pred), std::move(arg)}}));
}
Formula Formula::conj(Formula left, Formula right) {
  return Formula(std::make_shared<FormulaNode>(
      FormulaNode{FAnd{std::move(left), std::move(right)}}));
}
Formula Formula::implies(Formula antecedent, Formula consequent) {
  return Formula(std::make_shared<FormulaNode>(
      FormulaNode{FImplies{std::move(antecedent), std::move(consequent)}}));
}
Formula Formula::forall(Identifier var, Sort sort, Formula body) {
  return Formula(std::make_shared<FormulaNode>(
      FormulaNode{FForall{std::move(var), std::move(sort), std::move(body)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || a.node_->v == b.node_->v;
}

Formula conjoin(const std::vector<Formula>& fs) {
  if (fs.empty()) throw std::invalid_argument("conjoin: empty list");
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it)
    acc = Formula::conj(*it, acc);
  return acc;
}

Formula forall_chain(const std::vector<std::pair<Identifier, Sort>>& binders,
                     Formula body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    body = Formula::forall(it->first, it->second, std::move(body));
  return body;
}

std::vector<Formula> conjuncts(const Formula& f) {
  std::vector<Formula> out;
  const Formula* cur = &f;
  while (cur->is<FAnd>()) {
    out.push_back(cur->as<FAnd>().left);
    cur = &cur->as<FAnd>().right;
  }
  out.push_back(*cur);
  return out;
}

//------------------------------------------------------------------------------
// free_vars

namespace {

struct Bound {
  std::set<Identifier> types;
  std::set<Identifier> terms;
};

void type_free_vars(const TypeExpr& ty, const Bound& b,
                    std::set<Identifier>& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, TyVar>) {
          if (!b.types.count(n.name)) out.insert(n.name);
        } else if constexpr (std::is_same_v<N, TyApp>) {
          for (const auto& a : n.args) type_free_vars(a, b, out);
        } else if constexpr (std::is_same_v<N, TyTuple>) {
          for (const auto& e : n.elems) type_free_vars(e, b, out);
        } else if constexpr (std::is_same_v<N, TyArrow>) {
          type_free_vars(n.domain, b, out);
          type_free_vars(n.codomain, b, out);
        }
      },
      ty.node().v);
}

void term_free_vars(const Term& t, const Bound& b, std::set<Identifier>& out) {
  if (t.is<TmVar>()) {
    if (!b.terms.count(t.as<TmVar>().name)) out.insert(t.as<TmVar>().name);
  } else if (t.is<TmApp>()) {
    for (const auto& a : t.as<TmApp>().args) term_free_vars(a, b, out);
  }
}

void formula_free_vars(const Formula& f, Bound& b, std::set<Identifier>& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, FPred>) {
          if (!b.terms.count(n.pred)) out.insert(n.pred);
          term_free_vars(n.arg, b, out);
        } else if constexpr (std::is_same_v<N, FAnd>) {
          formula_free_vars(n.left, b, out);
          formula_free_vars(n.right, b, out);
        } else if constexpr (std::is_same_v<N, FImplies>) {
          formula_free_vars(n.antecedent, b, out);
          formula_free_vars(n.consequent, b, out);
        } else if constexpr (std::is_same_v<N, FForall>) {
          if (n.sort.type) type_free_vars(*n.sort.type, b, out);
          auto& ns = n.sort.binds_type() ? b.types : b.terms;
          const bool fresh = ns.insert(n.var).second;
          formula_free_vars(n.body, b, out);
          if (fresh) ns.erase(n.var);
        }
      },
      f.node().v);
}

}  // namespace

std::set<Identifier> free_vars(const Formula& f) {
  Bound b;
  std::set<Identifier> out;
  formula_free_vars(f, b, out);
  return out;
}

//------------------------------------------------------------------------------
// alpha_eq / prefix_perm_eq

namespace {

// Maps each bound name to the level of its binder. Both sides of a
// comparison share level numbers: a pair of matched binders gets the same
// level.
struct Env {
  std::map<Identifier, int> types;
  std::map<Identifier, int> terms;

  Env with(const Identifier& name, const Sort& sort, int level) const {
    Env e = *this;
    (sort.binds_type() ? e.types : e.terms)[name] = level;
    return e;
  }
};

bool same_var(const std::map<Identifier, int>& ma, const Identifier& a,
              const std::map<Identifier, int>& mb, const Identifier& b) {
  auto ia = ma.find(a);
  auto ib = mb.find(b);
  if (ia == ma.end() && ib == mb.end()) return a == b;
  if (ia == ma.end() || ib == mb.end()) return false;
  return ia->second == ib->second;
}

class Comparator {
 public:
  explicit Comparator(bool permute) : permute_(permute) {}

  bool types(const TypeExpr& a, const Env& ea, const TypeExpr& b,
             const Env& eb) const {
    if (a.node().v.index() != b.node().v.index()) return false;
    if (a.is<TyVar>())
      return same_var(ea.types, a.as<TyVar>().name, eb.types,
                      b.as<TyVar>().name);
    if (a.is<TyApp>()) {
      const auto& x = a.as<TyApp>();
      const auto& y = b.as<TyApp>();
      return x.head == y.head && type_lists(x.args, ea, y.args, eb);
    }
    if (a.is<TyTuple>())
      return type_lists(a.as<TyTuple>().elems, ea, b.as<TyTuple>().elems, eb);
    if (a.is<TyArrow>()) {
      const auto& x = a.as<TyArrow>();
      const auto& y = b.as<TyArrow>();
      return types(x.domain, ea, y.domain, eb) &&
             types(x.codomain, ea, y.codomain, eb);
    }
    return true;  // star
  }

  bool sorts(const Sort& a, const Env& ea, const Sort& b, const Env& eb) const {
    if (a.kind != b.kind) return false;
    if (a.is_kind_star()) return true;
    return types(*a.type, ea, *b.type, eb);
  }

  bool terms(const Term& a, const Env& ea, const Term& b, const Env& eb) const {
    if (a.node().v.index() != b.node().v.index()) return false;
    if (a.is<TmVar>())
      return same_var(ea.terms, a.as<TmVar>().name, eb.terms,
                      b.as<TmVar>().name);
    if (a.is<TmApp>()) {
      const auto& x = a.as<TmApp>();
      const auto& y = b.as<TmApp>();
      if (x.ctor != y.ctor || x.args.size() != y.args.size()) return false;
      for (std::size_t i = 0; i < x.args.size(); ++i)
        if (!terms(x.args[i], ea, y.args[i], eb)) return false;
      return true;
    }
    return true;  // bottom
  }

  bool formulas(const Formula& a, const Env& ea, const Formula& b,
                const Env& eb) {
    if (a.node().v.index() != b.node().v.index()) return false;
    if (a.is<FTruth>()) return true;
    if (a.is<FPred>()) {
      const auto& x = a.as<FPred>();
      const auto& y = b.as<FPred>();
      return same_var(ea.terms, x.pred, eb.terms, y.pred) &&
             terms(x.arg, ea, y.arg, eb);
    }
    if (a.is<FAnd>()) {
      const auto& x = a.as<FAnd>();
      const auto& y = b.as<FAnd>();
      return formulas(x.left, ea, y.left, eb) &&
             formulas(x.right, ea, y.right, eb);
    }
    if (a.is<FImplies>()) {
      const auto& x = a.as<FImplies>();
      const auto& y = b.as<FImplies>();
      return formulas(x.antecedent, ea, y.antecedent, eb) &&
             formulas(x.consequent, ea, y.consequent, eb);
    }
    if (!permute_) {
      const auto& x = a.as<FForall>();
      const auto& y = b.as<FForall>();
      if (!sorts(x.sort, ea, y.sort, eb)) return false;
      const int level = next_level_++;
      return formulas(x.body, ea.with(x.var, x.sort, level), y.body,
                      eb.with(y.var, y.sort, level));
    }
    return runs(a, ea, b, eb);
  }

 private:
  bool type_lists(const std::vector<TypeExpr>& a, const Env& ea,
                  const std::vector<TypeExpr>& b, const Env& eb) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!types(a[i], ea, b[i], eb)) return false;
    return true;
  }

  struct Run {
    std::vector<const FForall*> binders;
    const Formula* body = nullptr;
  };

  static Run collect_run(const Formula& f) {
    Run r;
    const Formula* cur = &f;
    while (cur->is<FForall>()) {
      r.binders.push_back(&cur->as<FForall>());
      cur = &cur->as<FForall>().body;
    }
    r.body = cur;
    return r;
  }

  // Environment in scope at binder `upto` of a run, given the levels chosen
  // so far. Unmatched binders get a level that equals nothing on the other
  // side.
  static Env scope_at(const Env& base, const Run& run,
                      const std::vector<int>& levels, std::size_t upto) {
    Env e = base;
    for (std::size_t q = 0; q < upto; ++q) {
      const int level = levels[q] >= 0 ? levels[q] : -1 - static_cast<int>(q);
      const auto* bd = run.binders[q];
      (bd->sort.binds_type() ? e.types : e.terms)[bd->var] = level;
    }
    return e;
  }

  bool runs(const Formula& a, const Env& ea, const Formula& b, const Env& eb) {
    const Run ra = collect_run(a);
    const Run rb = collect_run(b);
    if (ra.binders.size() != rb.binders.size()) return false;
    std::vector<int> la(ra.binders.size(), -1);
    std::vector<int> lb(rb.binders.size(), -1);
    return match(0, ra, ea, la, rb, eb, lb);
  }

  bool match(std::size_t i, const Run& ra, const Env& ea, std::vector<int>& la,
             const Run& rb, const Env& eb, std::vector<int>& lb) {
    if (i == ra.binders.size()) {
      return formulas(*ra.body, scope_at(ea, ra, la, la.size()), *rb.body,
                      scope_at(eb, rb, lb, lb.size()));
    }
    const auto* x = ra.binders[i];
    const Env sa = scope_at(ea, ra, la, i);
    for (std::size_t k = 0; k < rb.binders.size(); ++k) {
      if (lb[k] >= 0) continue;
      const auto* y = rb.binders[k];
      if (!sorts(x->sort, sa, y->sort, scope_at(eb, rb, lb, k))) continue;
      const int level = next_level_++;
      la[i] = level;
      lb[k] = level;
      if (match(i + 1, ra, ea, la, rb, eb, lb)) return true;
      la[i] = -1;
      lb[k] = -1;
    }
    return false;
  }

  bool permute_;
  int next_level_ = 0;
};

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
  return Comparator(false).formulas(a, Env{}, b, Env{});
}

bool prefix_perm_eq(const Formula& a, const Formula& b) {
  return Comparator(true).formulas(a, Env{}, b, Env{});
}

}  // namespace indgen
