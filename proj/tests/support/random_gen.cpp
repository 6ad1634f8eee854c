#include "random_gen.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace indgen::testing {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

const std::vector<std::string> kTypeNames = {"Nat", "Tree", "Rose", "Expr", "Stream", "Bag",
                                             "T", "Lambda", "Seq", "Heap"};
const std::vector<std::string> kOtherTypes = {"Int", "Bool", "List", "Maybe", "Pair"};
const std::vector<std::string> kParams = {"a", "b", "c", "e", "k", "v", "elem"};
const std::vector<std::string> kCtors = {"Z", "S", "Nil", "Cons", "Leaf", "Node", "Var",
                                         "Abs", "Ap", "Empty", "Branch", "Tip", "C1", "C2",
                                         "Snoc", "Fork"};

TypeExpr self_applied(const std::string& t, std::vector<std::string> params, Rng& rng,
                      bool permute) {
  if (permute) std::shuffle(params.begin(), params.end(), rng);
  std::vector<TypeExpr> args;
  for (const auto& p : params) args.push_back(TypeExpr::var(p));
  return TypeExpr::app(t, std::move(args));
}

TypeExpr random_arg(Rng& rng, const DataDecl& d, std::size_t depth, bool fragment) {
  const bool has_params = !d.type_params.empty();
  if (fragment) {
    if (has_params && coin(rng)) return TypeExpr::var(d.type_params[pick(rng, 0, d.type_params.size() - 1)]);
    return self_applied(d.type_name, d.type_params, rng, coin(rng, 0.3));
  }
  switch (pick(rng, 0, depth == 0 ? 2 : 5)) {
    case 0:
      if (has_params) return TypeExpr::var(d.type_params[pick(rng, 0, d.type_params.size() - 1)]);
      [[fallthrough]];
    case 1: return self_applied(d.type_name, d.type_params, rng, coin(rng, 0.2));
    case 2: return TypeExpr::app(kOtherTypes[pick(rng, 0, 1)]);
    case 3: {
      std::vector<TypeExpr> args;
      const std::size_t n = pick(rng, 1, 2);
      for (std::size_t i = 0; i < n; ++i) args.push_back(random_arg(rng, d, depth - 1, false));
      return TypeExpr::app(kOtherTypes[pick(rng, 2, kOtherTypes.size() - 1)], std::move(args));
    }
    case 4: {
      std::vector<TypeExpr> es;
      const std::size_t n = pick(rng, 2, 3);
      for (std::size_t i = 0; i < n; ++i) es.push_back(random_arg(rng, d, depth - 1, false));
      return TypeExpr::tuple(std::move(es));
    }
    default:
      return TypeExpr::arrow(random_arg(rng, d, depth - 1, false),
                             random_arg(rng, d, depth - 1, false));
  }
}

std::string lower_name(Rng& rng) {
  static const std::vector<std::string> pool = {"x", "y", "n1", "t", "xs", "a", "b", "p2", "q'"};
  return pool[pick(rng, 0, pool.size() - 1)];
}

std::string upper_name(Rng& rng) {
  static const std::vector<std::string> pool = {"Z", "S", "Nil", "Cons", "Leaf", "Node", "C'"};
  return pool[pick(rng, 0, pool.size() - 1)];
}

TypeExpr random_type(Rng& rng, std::size_t depth) {
  switch (pick(rng, 0, depth == 0 ? 1 : 4)) {
    case 0: return TypeExpr::var(lower_name(rng));
    case 1: return TypeExpr::app(kTypeNames[pick(rng, 0, kTypeNames.size() - 1)]);
    case 2: {
      std::vector<TypeExpr> args;
      for (std::size_t i = pick(rng, 1, 3); i > 0; --i) args.push_back(random_type(rng, depth - 1));
      return TypeExpr::app(kTypeNames[pick(rng, 0, kTypeNames.size() - 1)], std::move(args));
    }
    case 3: {
      std::vector<TypeExpr> es;
      for (std::size_t i = pick(rng, 2, 3); i > 0; --i) es.push_back(random_type(rng, depth - 1));
      return TypeExpr::tuple(std::move(es));
    }
    default: return TypeExpr::arrow(random_type(rng, depth - 1), random_type(rng, depth - 1));
  }
}

Term random_term(Rng& rng, std::size_t depth) {
  switch (pick(rng, 0, depth == 0 ? 2 : 3)) {
    case 0: return Term::var(lower_name(rng));
    case 1: return Term::app(upper_name(rng));
    case 2: return Term::bottom();
    default: {
      std::vector<Term> args;
      for (std::size_t i = pick(rng, 1, 3); i > 0; --i) args.push_back(random_term(rng, depth - 1));
      return Term::app(upper_name(rng), std::move(args));
    }
  }
}

Sort random_sort(Rng& rng) {
  switch (pick(rng, 0, 2)) {
    case 0: return Sort::kind_star();
    case 1: return Sort::of_type(random_type(rng, 2));
    default: return Sort::pred_over(random_type(rng, 2));
  }
}

}  // namespace

DataDecl random_decl(Rng& rng, const DeclLimits& lim) {
  DataDecl d;
  d.type_name = kTypeNames[pick(rng, 0, kTypeNames.size() - 1)];
  std::vector<std::string> params = kParams;
  std::shuffle(params.begin(), params.end(), rng);
  params.resize(pick(rng, 0, lim.max_params));
  d.type_params = params;
  std::vector<std::string> ctors = kCtors;
  std::shuffle(ctors.begin(), ctors.end(), rng);
  ctors.resize(pick(rng, 1, lim.max_constructors));
  for (const auto& c : ctors) {
    ConstructorDecl cd{c, {}};
    const std::size_t n = pick(rng, 0, lim.max_arity);
    for (std::size_t i = 0; i < n; ++i)
      cd.arg_types.push_back(random_arg(rng, d, 2, lim.oracle_fragment));
    d.constructors.push_back(std::move(cd));
  }
  return d;
}

Formula random_formula(Rng& rng, std::size_t depth) {
  switch (pick(rng, 0, depth == 0 ? 1 : 4)) {
    case 0: return Formula::pred(coin(rng) ? "P" : lower_name(rng), random_term(rng, 2));
    case 1: return Formula::truth();
    case 2: return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3:
      return Formula::implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return Formula::forall(lower_name(rng), random_sort(rng), random_formula(rng, depth - 1));
  }
}

}  // namespace indgen::testing
