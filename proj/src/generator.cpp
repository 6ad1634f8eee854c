#include "indgen/generator.hpp"

#include <cctype>
#include <stdexcept>

namespace indgen {

namespace {

Identifier induction_var_name(const DataDecl& decl) {
  return std::string(
      1, static_cast<char>(std::tolower(static_cast<unsigned char>(decl.type_name[0]))));
}

Sort predicate_sort(const DataDecl& decl) {
  return Sort::pred_over(decl.self_type());
}

}  // namespace

bool is_recursive_argument(const DataDecl& decl, const TypeExpr& arg) {
  if (arg.is<TyStar>()) return false;
  const auto head = ty_con(arg);
  return head && *head == decl.type_name;
}

std::vector<std::pair<Identifier, TypeExpr>> name_arguments(
    const DataDecl& decl, const ConstructorDecl& ctor) {
  const Identifier rec_base = induction_var_name(decl);
  std::vector<std::pair<Identifier, TypeExpr>> out;
  out.reserve(ctor.arg_types.size());
  for (std::size_t i = 0; i < ctor.arg_types.size(); ++i) {
    const TypeExpr& ty = ctor.arg_types[i];
    const Identifier& base = is_recursive_argument(decl, ty) ? rec_base : "x";
    out.emplace_back(base + std::to_string(i + 1), ty);
  }
  return out;
}

Formula constructor_clause(const DataDecl& decl, const ConstructorDecl& ctor,
                           const Identifier& pred_name) {
  const auto named = name_arguments(decl, ctor);
  std::vector<Term> vars;
  std::vector<Formula> hypotheses;
  std::vector<std::pair<Identifier, Sort>> binders;
  for (const auto& [name, ty] : named) {
    vars.push_back(Term::var(name));
    binders.emplace_back(name, Sort::of_type(ty));
    if (is_recursive_argument(decl, ty))
      hypotheses.push_back(Formula::pred(pred_name, Term::var(name)));
  }
  Formula concl = Formula::pred(pred_name, Term::app(ctor.name, std::move(vars)));
  if (!hypotheses.empty())
    concl = Formula::implies(conjoin(hypotheses), std::move(concl));
  return forall_chain(binders, std::move(concl));
}

Formula assemble_principle(const DataDecl& decl,
                           const std::optional<Formula>& pointed_clause,
                           const std::vector<Formula>& clauses) {
  std::vector<Formula> all;
  if (pointed_clause) all.push_back(*pointed_clause);
  all.insert(all.end(), clauses.begin(), clauses.end());
  if (all.empty())
    throw std::invalid_argument("assemble_principle: no clauses");

  const Identifier t = induction_var_name(decl);
  Formula conclusion = Formula::forall(
      t, Sort::of_type(decl.self_type()), Formula::pred(kPredicateName, Term::var(t)));
  Formula body = Formula::implies(conjoin(all), std::move(conclusion));

  std::vector<std::pair<Identifier, Sort>> prefix;
  for (const auto& v : decl.type_params) prefix.emplace_back(v, Sort::kind_star());
  prefix.emplace_back(kPredicateName, predicate_sort(decl));
  return forall_chain(prefix, std::move(body));
}

Principle induction_principle(const DataDecl& decl, const GenOptions& opts) {
  Principle p{decl, opts.pointed, Formula::truth(), {}, std::nullopt};
  std::vector<Formula> clause_formulas;
  for (const auto& ctor : decl.constructors) {
    Formula f = constructor_clause(decl, ctor);
    clause_formulas.push_back(f);
    p.clauses.push_back({ctor.name, std::move(f)});
  }
  if (opts.pointed)
    p.pointed_clause = Formula::pred(kPredicateName, Term::bottom());
  p.formula = assemble_principle(decl, p.pointed_clause, clause_formulas);
  return p;
}

ClauseShape clause_shape(const Formula& clause) {
  ClauseShape s;
  const Formula* cur = &clause;
  while (cur->is<FForall>()) {
    ++s.quantifiers;
    cur = &cur->as<FForall>().body;
  }
  if (cur->is<FImplies>()) {
    s.has_implication = true;
    s.hypotheses = conjuncts(cur->as<FImplies>().antecedent).size();
  }
  return s;
}

bool mind_check(const Principle& p) {
  const DataDecl& d = p.decl;
  const ConstructorDecl* base = nullptr;
  const ConstructorDecl* step = nullptr;
  for (const auto& c : d.constructors) {
    if (c.arity() == 0) {
      base = &c;
    } else if (c.arity() == 1 && is_recursive_argument(d, c.arg_types[0])) {
      step = &c;
    }
  }
  if (d.constructors.size() != 2 || !base || !step)
    throw std::invalid_argument("mind_check: '" + d.type_name +
                                "' is not shaped like Nat");
  if (p.pointed || p.clauses.size() != 2) return false;

  bool base_ok = false;
  bool step_ok = false;
  for (const auto& c : p.clauses) {
    const ClauseShape s = clause_shape(c.formula);
    if (c.constructor == base->name)
      base_ok = s.quantifiers == 0 && s.hypotheses == 0 && !s.has_implication;
    else if (c.constructor == step->name)
      step_ok = s.quantifiers == 1 && s.hypotheses == 1;
  }
  return base_ok && step_ok;
}

std::vector<NestedOccurrence> nested_recursive_arguments(const DataDecl& decl) {
  std::vector<NestedOccurrence> out;
  for (const auto& c : decl.constructors) {
    for (std::size_t i = 0; i < c.arg_types.size(); ++i) {
      const TypeExpr& ty = c.arg_types[i];
      if (!is_recursive_argument(decl, ty) && mentions_type(ty, decl.type_name))
        out.push_back({c.name, i + 1, ty});
    }
  }
  return out;
}

}  // namespace indgen
