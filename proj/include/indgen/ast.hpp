#ifndef INDGEN_AST_HPP
#define INDGEN_AST_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace indgen {

// Identifiers are plain strings. Type and constructor names start with an
// uppercase letter; type variables and term variables with a lowercase one.
using Identifier = std::string;

bool is_upper_name(std::string_view s);
bool is_lower_name(std::string_view s);

//------------------------------------------------------------------------------
// Types

struct TypeNode;

class TypeExpr {
 public:
  static TypeExpr var(Identifier name);
  static TypeExpr app(Identifier head, std::vector<TypeExpr> args = {});
  static TypeExpr tuple(std::vector<TypeExpr> elems);
  static TypeExpr arrow(TypeExpr domain, TypeExpr codomain);
  static TypeExpr star();

  const TypeNode& node() const { return *node_; }

  template <class T>
  bool is() const;
  template <class T>
  const T& as() const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);

 private:
  explicit TypeExpr(std::shared_ptr<const TypeNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TypeNode> node_;
};

struct TyVar {
  Identifier name;
  bool operator==(const TyVar&) const = default;
};
struct TyApp {
  Identifier head;
  std::vector<TypeExpr> args;
  bool operator==(const TyApp&) const = default;
};
struct TyTuple {
  std::vector<TypeExpr> elems;  // length >= 2
  bool operator==(const TyTuple&) const = default;
};
struct TyArrow {
  TypeExpr domain;
  TypeExpr codomain;
  bool operator==(const TyArrow&) const = default;
};
struct TyStar {
  bool operator==(const TyStar&) const = default;
};

struct TypeNode {
  std::variant<TyVar, TyApp, TyTuple, TyArrow, TyStar> v;
};

template <class T>
bool TypeExpr::is() const {
  return std::holds_alternative<T>(node_->v);
}
template <class T>
const T& TypeExpr::as() const {
  return std::get<T>(node_->v);
}

// Head type constructor of an applied type. Variables, tuples and arrows
// have none. Throws std::invalid_argument on the kind marker.
std::optional<Identifier> ty_con(const TypeExpr& ty);

// True if `name` occurs as an App head anywhere inside `ty`.
bool mentions_type(const TypeExpr& ty, std::string_view name);

//------------------------------------------------------------------------------
// Declarations

struct ConstructorDecl {
  Identifier name;
  std::vector<TypeExpr> arg_types;

  std::size_t arity() const { return arg_types.size(); }
  bool operator==(const ConstructorDecl&) const = default;
};

struct DataDecl {
  Identifier type_name;
  std::vector<Identifier> type_params;
  std::vector<ConstructorDecl> constructors;  // nonempty

  // T V1 ... Vk
  TypeExpr self_type() const;
  const ConstructorDecl* find_constructor(std::string_view name) const;
  bool operator==(const DataDecl&) const = default;
};

//------------------------------------------------------------------------------
// Terms

struct TermNode;

class Term {
 public:
  static Term var(Identifier name);
  static Term app(Identifier ctor, std::vector<Term> args = {});
  static Term bottom();

  const TermNode& node() const { return *node_; }
  template <class T>
  bool is() const;
  template <class T>
  const T& as() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TermNode> node_;
};

struct TmVar {
  Identifier name;
  bool operator==(const TmVar&) const = default;
};
struct TmApp {
  Identifier ctor;
  std::vector<Term> args;
  bool operator==(const TmApp&) const = default;
};
struct TmBottom {
  bool operator==(const TmBottom&) const = default;
};

struct TermNode {
  std::variant<TmVar, TmApp, TmBottom> v;
};

template <class T>
bool Term::is() const {
  return std::holds_alternative<T>(node_->v);
}
template <class T>
const T& Term::as() const {
  return std::get<T>(node_->v);
}

//------------------------------------------------------------------------------
// Quantifier sorts

struct Sort {
  enum class Kind { kStar, kType, kPred };

  static Sort kind_star() { return Sort{Kind::kStar, std::nullopt}; }
  static Sort of_type(TypeExpr ty) { return Sort{Kind::kType, std::move(ty)}; }
  // ty -> 𝔹
  static Sort pred_over(TypeExpr ty) { return Sort{Kind::kPred, std::move(ty)}; }

  bool is_kind_star() const { return kind == Kind::kStar; }
  // Binds a type variable rather than a term or predicate variable.
  bool binds_type() const { return kind == Kind::kStar; }

  Kind kind;
  std::optional<TypeExpr> type;  // absent only for kStar

  bool operator==(const Sort&) const = default;
};

//------------------------------------------------------------------------------
// Formulas

struct FormulaNode;

class Formula {
 public:
  static Formula truth();
  static Formula pred(Identifier pred, Term arg);
  static Formula conj(Formula left, Formula right);
  static Formula implies(Formula antecedent, Formula consequent);
  static Formula forall(Identifier var, Sort sort, Formula body);

  const FormulaNode& node() const { return *node_; }
  template <class T>
  bool is() const;
  template <class T>
  const T& as() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct FTruth {
  bool operator==(const FTruth&) const = default;
};
struct FPred {
  Identifier pred;
  Term arg;
  bool operator==(const FPred&) const = default;
};
struct FAnd {
  Formula left;
  Formula right;
  bool operator==(const FAnd&) const = default;
};
struct FImplies {
  Formula antecedent;
  Formula consequent;
  bool operator==(const FImplies&) const = default;
};
struct FForall {
  Identifier var;
  Sort sort;
  Formula body;
  bool operator==(const FForall&) const = default;
};

struct FormulaNode {
  std::variant<FTruth, FPred, FAnd, FImplies, FForall> v;
};

template <class T>
bool Formula::is() const {
  return std::holds_alternative<T>(node_->v);
}
template <class T>
const T& Formula::as() const {
  return std::get<T>(node_->v);
}

// Right-nested conjunction; requires a nonempty list.
Formula conjoin(const std::vector<Formula>& fs);
// Wraps `body` in one Forall per binder, first binder outermost.
Formula forall_chain(const std::vector<std::pair<Identifier, Sort>>& binders,
                     Formula body);
// Flattens a right-nested conjunction back into its conjuncts.
std::vector<Formula> conjuncts(const Formula& f);

//------------------------------------------------------------------------------
// Principles

struct Principle {
  struct Clause {
    Identifier constructor;
    Formula formula;
    bool operator==(const Clause&) const = default;
  };

  DataDecl decl;
  bool pointed = false;
  Formula formula;
  std::vector<Clause> clauses;
  std::optional<Formula> pointed_clause;  // P(⊥), present iff pointed
};

//------------------------------------------------------------------------------
// Structural utilities

// Free term, type and predicate variables. Type variables and term
// variables are bound in separate namespaces.
std::set<Identifier> free_vars(const Formula& f);

// Equality up to consistent renaming of bound variables.
bool alpha_eq(const Formula& a, const Formula& b);

// alpha_eq, additionally allowing independent binders inside a run of
// consecutive quantifiers to appear in a different order.
bool prefix_perm_eq(const Formula& a, const Formula& b);

}  // namespace indgen

#endif  // INDGEN_AST_HPP
