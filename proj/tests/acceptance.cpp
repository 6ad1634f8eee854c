// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "display_reader.hpp"
#include "fixtures.hpp"
#include "indgen/generator.hpp"
#include "indgen/parser.hpp"
#include "indgen/render.hpp"
#include "indgen/semantics.hpp"
#include "random_gen.hpp"
#include "reference_stind.hpp"

using namespace indgen;
using namespace indgen::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const Formula& antecedent_of(const Formula& f) {
  const Formula* g = &f;
  while (g->is<FForall>()) g = &g->as<FForall>().body;
  return g->as<FImplies>().antecedent;
}

std::vector<std::size_t> hypothesis_counts(const Principle& p) {
  std::vector<std::size_t> out;
  for (const auto& c : p.clauses) out.push_back(clause_shape(c.formula).hypotheses);
  return out;
}

bool contains_implies(const Formula& f) {
  if (f.is<FImplies>()) return true;
  if (f.is<FAnd>()) return contains_implies(f.as<FAnd>().left) || contains_implies(f.as<FAnd>().right);
  if (f.is<FForall>()) return contains_implies(f.as<FForall>().body);
  return false;
}

CheckMode mode_for(std::size_t universe) {
  return universe <= kExhaustiveLimit ? CheckMode::exhaustive() : CheckMode::sampled(200);
}

Outcome golden_principles() {
  Outcome o;
  for (const auto& ex : paper_examples()) {
    const Formula want = read_display(golden_display(ex.key));
    const Formula got = induction_principle(parse_decl(ex.source)).formula;
    if (!prefix_perm_eq(got, want)) o.fail(std::string(ex.key) + " differs from display");
    if (!alpha_eq(read_display(render_latex(got)), got))
      o.fail(std::string(ex.key) + " LaTeX does not read back");
  }
  if (o.ok) o.detail = "7/7 displays match";
  return o;
}

Outcome exam_types() {
  Outcome o;
  const DataDecl st = parse_decl(kSTree);
  const DataDecl lam = parse_decl(kLambda);
  const Principle ps = induction_principle(st);
  const Principle pl = induction_principle(lam);
  if (hypothesis_counts(ps) != std::vector<std::size_t>{0, 2}) o.fail("STree hypothesis counts");
  if (hypothesis_counts(pl) != std::vector<std::size_t>{0, 0, 2, 1}) o.fail("Lambda hypothesis counts");
  if (!prefix_perm_eq(ps.formula, reference::reference_principle(st))) o.fail("STree vs reference");
  if (!prefix_perm_eq(pl.formula, reference::reference_principle(lam))) o.fail("Lambda vs reference");
  if (o.ok) o.detail = "STree [0,2], Lambda [0,0,2,1], both equal to reference";
  return o;
}

Outcome mind_instance() {
  Outcome o;
  if (!mind_check(induction_principle(parse_decl("data Nat = Z | S Nat")))) o.fail("mind_check false");
  else o.detail = "Nat principle has the MInd shape";
  return o;
}

Outcome case_analysis() {
  Outcome o;
  for (const char* src : {"data Bool = T | F", "data Maybe a = Nothing | Just a"})
    for (const auto& c : induction_principle(parse_decl(src)).clauses)
      if (contains_implies(c.formula)) o.fail(c.constructor + " clause has an implication");
  if (o.ok) o.detail = "Bool and Maybe clauses are implication-free";
  return o;
}

Outcome pointed_mode() {
  Outcome o;
  const Principle p = induction_principle(parse_decl("data Nat = Z | S Nat"), {true});
  const auto cs = conjuncts(antecedent_of(p.formula));
  bool has_bottom = false;
  for (const auto& c : cs) has_bottom = has_bottom || c == Formula::pred("P", Term::bottom());
  if (cs.size() != 3) o.fail(std::to_string(cs.size()) + " conjuncts");
  if (!has_bottom) o.fail("no (P ⊥) conjunct");
  if (o.ok) o.detail = "3 conjuncts, (P ⊥) present";
  return o;
}

Outcome soundness_sweep() {
  Outcome o;
  struct Case {
    const char* source;
    std::size_t atoms;
    std::size_t depth;
  };
  const std::vector<Case> cases = {
      {"data Nat = Z | S Nat", 1, 4},
      {"data Bool = T | F", 1, 3},
      {"data List a = Nil | Cons a (List a)", 2, 3},
      {"data BTree a = Leaf a | Fork (BTree a) (BTree a)", 1, 3},
      {"data SwapTree a b = Leaf | Node a (SwapTree b a) (SwapTree b a)", 1, 3},
      {"data Tsil a = Snoc (Tsil a) a | Lin", 1, 3},
  };
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream log;
  for (const auto& c : cases) {
    const DataDecl d = parse_decl(c.source);
    const GroundEnv env = GroundEnv::uniform(d, c.atoms);
    for (bool pointed : {false, true}) {
      const std::size_t n = enumerate_terms(d, env, c.depth, pointed).size();
      const CheckMode mode = mode_for(n);
      if (d.type_name == "Nat" && mode.kind != CheckMode::Kind::kExhaustive) o.fail("Nat not exhaustive");
      const auto r = check_soundness(d, {pointed}, env, c.depth, mode);
      if (!r.passed()) o.fail(r.summary());
      log << (log.tellp() > 0 ? "; " : "") << d.type_name << (pointed ? "⊥" : "") << " |U|="
          << n;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " in %.2f s", secs);
    o.detail = log.str() + buf;
  }
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  int killed = 0;
  int total = 0;
  for (const char* src : {"data Nat = Z | S Nat", "data List a = Nil | Cons a (List a)",
                          "data BTree a = Leaf a | Fork (BTree a) (BTree a)"}) {
    const DataDecl d = parse_decl(src);
    const Principle full = induction_principle(d);
    for (std::size_t del = 0; del < full.clauses.size(); ++del) {
      ++total;
      Principle m = full;
      m.clauses.erase(m.clauses.begin() + static_cast<std::ptrdiff_t>(del));
      std::vector<Formula> fs;
      for (const auto& c : m.clauses) fs.push_back(c.formula);
      m.formula = assemble_principle(d, std::nullopt, fs);
      bool dead = false;
      for (std::size_t depth = 1; depth <= 4 && !dead; ++depth) {
        const GroundEnv env = GroundEnv::uniform(d, 1);
        const std::size_t n = enumerate_terms(d, env, depth, false).size();
        dead = !check_principle(m, env, depth, mode_for(n)).passed();
      }
      if (dead) ++killed;
      else o.fail(d.type_name + " without " + full.clauses[del].constructor + " survives");
    }
  }
  o.detail = std::to_string(killed) + "/" + std::to_string(total) + " mutants killed" +
             (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome round_trips() {
  Outcome o;
  Rng rng(8);
  int decl_fail = 0;
  int sexpr_fail = 0;
  for (int i = 0; i < 500; ++i) {
    const DataDecl d = random_decl(rng);
    try {
      if (parse_decl(render_decl_source(d)) != d) ++decl_fail;
    } catch (const std::exception&) {
      ++decl_fail;
    }
    const Formula f = random_formula(rng, 5);
    try {
      if (parse_sexpr(render_sexpr(f)) != f) ++sexpr_fail;
    } catch (const std::exception&) {
      ++sexpr_fail;
    }
  }
  if (decl_fail || sexpr_fail)
    o.fail(std::to_string(decl_fail) + " decl and " + std::to_string(sexpr_fail) +
           " sexpr failures");
  else
    o.detail = "500 declarations, 500 formulas";
  return o;
}

Outcome invariant_suite() {
  Outcome o;
  Rng rng(9);
  DeclLimits lim;  // arity <= 3, constructors <= 5, params <= 3
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    const DataDecl d = random_decl(rng, lim);
    for (bool pointed : {false, true}) {
      const Principle p = induction_principle(d, {pointed});
      bool ok = conjuncts(antecedent_of(p.formula)).size() == d.constructors.size() + pointed;
      ok = ok && p.clauses.size() == d.constructors.size();
      for (std::size_t c = 0; ok && c < d.constructors.size(); ++c) {
        std::size_t rec = 0;
        for (const auto& t : d.constructors[c].arg_types) rec += ty_con(t) == d.type_name;
        const ClauseShape s = clause_shape(p.clauses[c].formula);
        ok = s.hypotheses == rec && s.quantifiers == d.constructors[c].arity() &&
             s.has_implication == (rec > 0);
      }
      ok = ok && free_vars(p.formula).empty();
      if (!ok) {
        ++failures;
        o.fail(render_decl_source(d));
      }
    }
  }
  o.detail = std::to_string(failures) + " failures over 500 declarations" +
             (o.ok ? "" : ", first: " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden principles", golden_principles},
      {"exam types", exam_types},
      {"MInd instance", mind_instance},
      {"case analysis", case_analysis},
      {"pointed mode", pointed_mode},
      {"soundness sweep", soundness_sweep},
      {"mutation sensitivity", mutation_sensitivity},
      {"round trips", round_trips},
      {"invariant suite", invariant_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
