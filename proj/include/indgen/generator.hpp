#ifndef INDGEN_GENERATOR_HPP
#define INDGEN_GENERATOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "indgen/ast.hpp"

namespace indgen {

struct GenOptions {
  bool pointed = false;  // adds the clause P(⊥)
};

// Name of the predicate variable bound by every generated principle.
inline constexpr const char* kPredicateName = "P";

// Variable name for each constructor argument: the lowercase initial of the
// declared type for recursive arguments, "x" otherwise, suffixed with the
// argument's 1-based position.
std::vector<std::pair<Identifier, TypeExpr>> name_arguments(
    const DataDecl& decl, const ConstructorDecl& ctor);

// True when the argument type is built by the declared type constructor.
bool is_recursive_argument(const DataDecl& decl, const TypeExpr& arg);

// The clause for one constructor:
//   ∀x1:T1 … ∀xj:Tj. (P xi ∧ …) ⇒ P (C x1 … xj)
// with the implication dropped when no argument is recursive.
Formula constructor_clause(const DataDecl& decl, const ConstructorDecl& ctor,
                           const Identifier& pred_name = kPredicateName);

// Rebuilds the full principle from its clauses:
//   ∀V1:* … ∀Vk:*. ∀P:(T V1 … Vk) → 𝔹. (⋀ clauses) ⇒ ∀t:(T V1 … Vk). P t
// `pointed_clause`, when given, is the first conjunct. `clauses` may be
// empty only if a pointed clause is present.
Formula assemble_principle(const DataDecl& decl,
                           const std::optional<Formula>& pointed_clause,
                           const std::vector<Formula>& clauses);

Principle induction_principle(const DataDecl& decl, const GenOptions& opts = {});

// Checks that a principle has the shape of the ordinary rule for
// mathematical induction: a base clause with no quantifier or hypothesis and
// a step clause with exactly one of each. Throws std::invalid_argument if
// the declaration is not shaped like Nat (one nullary and one unary
// recursive constructor).
bool mind_check(const Principle& p);

// Arguments that mention the declared type only below the top level, for
// example `List (Rose a)`. They receive no induction hypothesis.
struct NestedOccurrence {
  Identifier constructor;
  std::size_t position;  // 1-based
  TypeExpr type;
};
std::vector<NestedOccurrence> nested_recursive_arguments(const DataDecl& decl);

// Counting helpers shared by tests and the CLI.
struct ClauseShape {
  std::size_t quantifiers = 0;
  std::size_t hypotheses = 0;
  bool has_implication = false;
};
ClauseShape clause_shape(const Formula& clause);

}  // namespace indgen

#endif  // INDGEN_GENERATOR_HPP
