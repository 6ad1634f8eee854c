#include "indgen/semantics.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace indgen {

//------------------------------------------------------------------------------
// GroundEnv / GroundTerm

GroundEnv GroundEnv::uniform(const DataDecl& decl, std::size_t per_param) {
  GroundEnv env;
  for (const auto& p : decl.type_params) {
    auto& c = env.carriers[p];
    for (std::size_t i = 1; i <= per_param; ++i) c.push_back(p + std::to_string(i));
  }
  return env;
}

GroundTerm GroundTerm::atom(std::string label, Identifier param) {
  return GroundTerm{Kind::kAtom, std::move(label), std::move(param), {}};
}
GroundTerm GroundTerm::node(Identifier ctor, std::vector<GroundTerm> children) {
  return GroundTerm{Kind::kNode, std::move(ctor), {}, std::move(children)};
}
GroundTerm GroundTerm::bottom() { return GroundTerm{Kind::kBottom, {}, {}, {}}; }

std::size_t GroundTerm::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

std::string GroundTerm::str() const {
  switch (kind) {
    case Kind::kAtom: return name;
    case Kind::kBottom: return "⊥";
    case Kind::kNode: break;
  }
  std::string s = name;
  for (const auto& c : children) {
    const bool wrap = c.kind == Kind::kNode && !c.children.empty();
    s += " " + (wrap ? "(" + c.str() + ")" : c.str());
  }
  return s;
}

std::vector<GroundTerm> immediate_subterms(const GroundTerm& t) {
  std::vector<GroundTerm> out;
  for (const auto& c : t.children)
    if (c.kind != GroundTerm::Kind::kAtom) out.push_back(c);
  return out;
}

namespace {

constexpr std::size_t kMaxUniverse = 200000;

//------------------------------------------------------------------------------
// Universe: the ground terms of a declaration up to a depth bound.

class Universe {
 public:
  struct Entry {
    int ctor;  // -1 for ⊥
    std::vector<int> kids;  // atom ids at parameter positions, term ids otherwise
    std::size_t depth;
  };

  Universe(const DataDecl& decl, const GroundEnv& env, std::size_t depth_bound,
           bool pointed)
      : decl_(decl) {
    index_params();
    index_atoms(env);
    classify_positions();
    build(depth_bound, pointed);
  }

  std::size_t size() const { return entries_.size(); }
  const Entry& entry(int id) const { return entries_[static_cast<std::size_t>(id)]; }
  std::size_t atom_count() const { return atoms_.size(); }
  int bottom_id() const { return bottom_id_; }
  bool is_param_position(int ctor, std::size_t i) const {
    return positions_[static_cast<std::size_t>(ctor)][i].param >= 0;
  }

  std::optional<int> ctor_index(const std::string& name) const {
    for (std::size_t i = 0; i < decl_.constructors.size(); ++i)
      if (decl_.constructors[i].name == name) return static_cast<int>(i);
    return std::nullopt;
  }

  std::optional<int> find(int ctor, const std::vector<int>& kids) const {
    auto it = ids_.find({ctor, kids});
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  GroundTerm ground(int id) const {
    const Entry& e = entry(id);
    if (e.ctor < 0) return GroundTerm::bottom();
    std::vector<GroundTerm> kids;
    for (std::size_t i = 0; i < e.kids.size(); ++i) {
      if (is_param_position(e.ctor, i)) {
        const auto& a = atoms_[static_cast<std::size_t>(e.kids[i])];
        kids.push_back(GroundTerm::atom(a.label, decl_.type_params[a.param]));
      } else {
        kids.push_back(ground(e.kids[i]));
      }
    }
    return GroundTerm::node(decl_.constructors[static_cast<std::size_t>(e.ctor)].name,
                            std::move(kids));
  }

 private:
  struct Atom {
    std::size_t param;
    std::string label;
  };
  // A parameter position records the parameter index; a recursive position
  // records, for each type argument, which parameter it names.
  struct Position {
    int param = -1;
    std::vector<std::size_t> args;
  };

  [[noreturn]] void unsupported(const ConstructorDecl& c, std::size_t i,
                                const std::string& why) const {
    std::ostringstream os;
    os << decl_.type_name << ": constructor " << c.name << " argument " << i + 1
       << " " << why;
    throw OracleError(OracleError::Kind::kUnsupportedType, os.str());
  }

  void index_params() {
    for (std::size_t i = 0; i < decl_.type_params.size(); ++i)
      param_index_[decl_.type_params[i]] = i;
  }

  void index_atoms(const GroundEnv& env) {
    for (std::size_t p = 0; p < decl_.type_params.size(); ++p) {
      auto it = env.carriers.find(decl_.type_params[p]);
      if (it == env.carriers.end() || it->second.empty())
        throw std::invalid_argument("no carrier for type parameter '" +
                                    decl_.type_params[p] + "'");
      std::vector<int> ids;
      for (const auto& label : it->second) {
        ids.push_back(static_cast<int>(atoms_.size()));
        atoms_.push_back({p, label});
      }
      carrier_atoms_.push_back(std::move(ids));
    }
  }

  void classify_positions() {
    for (const auto& c : decl_.constructors) {
      std::vector<Position> ps;
      for (std::size_t i = 0; i < c.arg_types.size(); ++i) {
        const TypeExpr& ty = c.arg_types[i];
        Position pos;
        if (ty.is<TyVar>()) {
          auto it = param_index_.find(ty.as<TyVar>().name);
          if (it == param_index_.end())
            unsupported(c, i, "is an unbound type variable");
          pos.param = static_cast<int>(it->second);
        } else if (ty.is<TyApp>() && ty.as<TyApp>().head == decl_.type_name) {
          const auto& args = ty.as<TyApp>().args;
          if (args.size() != decl_.type_params.size())
            unsupported(c, i, "applies the type to the wrong number of arguments");
          for (const auto& a : args) {
            if (!a.is<TyVar>() || !param_index_.count(a.as<TyVar>().name))
              unsupported(c, i, "instantiates the type at a non-parameter type");
            pos.args.push_back(param_index_.at(a.as<TyVar>().name));
          }
        } else {
          unsupported(c, i, "has type " + render_type(ty) +
                                ", which the oracle cannot enumerate");
        }
        ps.push_back(std::move(pos));
      }
      positions_.push_back(std::move(ps));
    }
  }

  static std::string render_type(const TypeExpr& ty) {
    if (ty.is<TyVar>()) return ty.as<TyVar>().name;
    if (ty.is<TyApp>()) {
      std::string s = ty.as<TyApp>().head;
      if (ty.as<TyApp>().args.empty()) return s;
      for (const auto& a : ty.as<TyApp>().args) s += " " + render_type(a);
      return "(" + s + ")";
    }
    if (ty.is<TyTuple>()) return "a tuple";
    if (ty.is<TyArrow>()) return "a function";
    return "*";
  }

  // Instances map each parameter of the declaration to the parameter whose
  // carrier it draws from. The root instance is the identity.
  std::size_t instance_of(const std::vector<std::size_t>& inst) {
    auto [it, fresh] = instance_ids_.emplace(inst, instances_.size());
    if (fresh) instances_.push_back(inst);
    return it->second;
  }

  void discover_instances() {
    std::vector<std::size_t> root(decl_.type_params.size());
    for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
    instance_of(root);
    for (std::size_t s = 0; s < instances_.size(); ++s) {
      for (const auto& ps : positions_) {
        for (const auto& pos : ps) {
          if (pos.param >= 0) continue;
          std::vector<std::size_t> child;
          for (std::size_t a : pos.args) child.push_back(instances_[s][a]);
          instance_of(child);
        }
      }
    }
  }

  void build(std::size_t depth_bound, bool pointed) {
    discover_instances();
    members_.assign(instances_.size(), {});
    if (depth_bound == 0) return;
    if (pointed) {
      bottom_id_ = 0;
      entries_.push_back({-1, {}, 1});
      ids_[{-1, {}}] = 0;
      for (auto& m : members_) m.push_back(0);
    }
    for (std::size_t d = 1; d <= depth_bound; ++d) build_layer(d);
  }

  void build_layer(std::size_t d) {
    // key -> instances producing it
    std::map<std::pair<int, std::vector<int>>, std::set<std::size_t>> layer;
    for (std::size_t s = 0; s < instances_.size(); ++s) {
      for (std::size_t c = 0; c < positions_.size(); ++c) {
        const auto& ps = positions_[c];
        if (ps.empty()) {
          if (d == 1) layer[{static_cast<int>(c), {}}].insert(s);
          continue;
        }
        if (d == 1) continue;
        std::vector<std::vector<int>> domains;
        for (const auto& pos : ps) {
          if (pos.param >= 0) {
            domains.push_back(carrier_atoms_[instances_[s][static_cast<std::size_t>(pos.param)]]);
          } else {
            std::vector<std::size_t> child;
            for (std::size_t a : pos.args) child.push_back(instances_[s][a]);
            domains.push_back(members_[instance_ids_.at(child)]);
          }
        }
        for_each_combo(domains, [&](const std::vector<int>& kids) {
          std::size_t deepest = 0;
          for (std::size_t i = 0; i < kids.size(); ++i)
            deepest = std::max(deepest, ps[i].param >= 0 ? std::size_t{1}
                                                         : entry(kids[i]).depth);
          if (deepest == d - 1) layer[{static_cast<int>(c), kids}].insert(s);
        });
      }
    }
    if (entries_.size() + layer.size() > kMaxUniverse)
      throw OracleError(OracleError::Kind::kTooLarge,
                        decl_.type_name + ": universe exceeds " +
                            std::to_string(kMaxUniverse) + " terms");
    // std::map orders keys by (constructor, children), which is the
    // canonical order within a layer.
    for (const auto& [key, insts] : layer) {
      const int id = static_cast<int>(entries_.size());
      entries_.push_back({key.first, key.second, d});
      ids_[key] = id;
      for (std::size_t s : insts) members_[s].push_back(id);
    }
  }

  template <class F>
  static void for_each_combo(const std::vector<std::vector<int>>& domains, F&& f) {
    for (const auto& d : domains)
      if (d.empty()) return;
    std::vector<std::size_t> idx(domains.size(), 0);
    std::vector<int> cur(domains.size());
    for (;;) {
      for (std::size_t i = 0; i < domains.size(); ++i) cur[i] = domains[i][idx[i]];
      f(cur);
      std::size_t i = domains.size();
      while (i > 0) {
        --i;
        if (++idx[i] < domains[i].size()) break;
        idx[i] = 0;
        if (i == 0) return;
      }
    }
  }

  const DataDecl& decl_;
  std::map<Identifier, std::size_t> param_index_;
  std::vector<Atom> atoms_;
  std::vector<std::vector<int>> carrier_atoms_;
  std::vector<std::vector<Position>> positions_;
  std::vector<std::vector<std::size_t>> instances_;
  std::map<std::vector<std::size_t>, std::size_t> instance_ids_;
  std::vector<std::vector<int>> members_;
  std::vector<Entry> entries_;
  std::map<std::pair<int, std::vector<int>>, int> ids_;
  int bottom_id_ = -1;
};

//------------------------------------------------------------------------------
// Grounding a principle over a universe into a propositional formula whose
// atoms are "term i is in P".

struct Prop {
  enum class Op { kTrue, kFalse, kAtom, kAnd, kImplies };
  Op op = Op::kTrue;
  int atom = -1;
  std::vector<Prop> kids;

  static Prop constant(bool b) { return Prop{b ? Op::kTrue : Op::kFalse, -1, {}}; }

  bool eval(const std::vector<char>& member) const {
    switch (op) {
      case Op::kTrue: return true;
      case Op::kFalse: return false;
      case Op::kAtom: return member[static_cast<std::size_t>(atom)] != 0;
      case Op::kAnd:
        for (const auto& k : kids)
          if (!k.eval(member)) return false;
        return true;
      case Op::kImplies: return !kids[0].eval(member) || kids[1].eval(member);
    }
    return false;
  }

  void atoms(std::vector<int>& out) const {
    if (op == Op::kAtom) out.push_back(atom);
    for (const auto& k : kids) k.atoms(out);
  }
};

struct Value {
  enum class Kind { kTerm, kAtom, kOutside };
  Kind kind = Kind::kOutside;
  int id = -1;
};

using Assignment = std::map<Identifier, Value>;

class Grounder {
 public:
  Grounder(const DataDecl& decl, const Universe& u) : decl_(decl), u_(u) {}

  // Splits the principle into antecedent and conclusion after its type and
  // predicate binders.
  std::pair<Prop, Prop> principle(const Formula& f) {
    const Formula* cur = &f;
    while (cur->is<FForall>() && cur->as<FForall>().sort.is_kind_star())
      cur = &cur->as<FForall>().body;
    if (!cur->is<FForall>() || cur->as<FForall>().sort.kind != Sort::Kind::kPred)
      malformed("expected a predicate binder after the type binders");
    pred_ = cur->as<FForall>().var;
    cur = &cur->as<FForall>().body;
    Assignment env;
    if (!cur->is<FImplies>()) return {Prop::constant(true), ground(*cur, env)};
    return {ground(cur->as<FImplies>().antecedent, env),
            ground(cur->as<FImplies>().consequent, env)};
  }

 private:
  [[noreturn]] static void malformed(const std::string& why) {
    throw OracleError(OracleError::Kind::kMalformed, "malformed principle: " + why);
  }

  Value eval(const Term& t, const Assignment& env) const {
    if (t.is<TmVar>()) {
      auto it = env.find(t.as<TmVar>().name);
      if (it == env.end()) malformed("free variable '" + t.as<TmVar>().name + "'");
      return it->second;
    }
    if (t.is<TmBottom>())
      return u_.bottom_id() >= 0 ? Value{Value::Kind::kTerm, u_.bottom_id()} : Value{};
    const auto& a = t.as<TmApp>();
    const auto c = u_.ctor_index(a.ctor);
    if (!c || decl_.constructors[static_cast<std::size_t>(*c)].arity() != a.args.size())
      return {};
    std::vector<int> kids;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      const Value v = eval(a.args[i], env);
      const auto want = u_.is_param_position(*c, i) ? Value::Kind::kAtom : Value::Kind::kTerm;
      if (v.kind != want) return {};
      kids.push_back(v.id);
    }
    const auto id = u_.find(*c, kids);
    return id ? Value{Value::Kind::kTerm, *id} : Value{};
  }

  Prop ground(const Formula& f, Assignment& env) {
    if (f.is<FTruth>()) return Prop::constant(true);
    if (f.is<FPred>()) {
      const auto& p = f.as<FPred>();
      if (p.pred != pred_) malformed("unknown predicate '" + p.pred + "'");
      const Value v = eval(p.arg, env);
      if (v.kind != Value::Kind::kTerm) return Prop::constant(false);
      return Prop{Prop::Op::kAtom, v.id, {}};
    }
    if (f.is<FAnd>()) {
      const auto& a = f.as<FAnd>();
      return Prop{Prop::Op::kAnd, -1, {ground(a.left, env), ground(a.right, env)}};
    }
    if (f.is<FImplies>()) {
      const auto& i = f.as<FImplies>();
      return Prop{Prop::Op::kImplies, -1,
                  {ground(i.antecedent, env), ground(i.consequent, env)}};
    }
    const auto& q = f.as<FForall>();
    if (q.sort.is_kind_star()) return ground(q.body, env);
    if (q.sort.kind == Sort::Kind::kPred) malformed("nested predicate binder");
    return ground_chain(f, env);
  }

  // A maximal run of term binders ranges over the argument tuples whose
  // constructed terms all stay inside the universe.
  Prop ground_chain(const Formula& f, Assignment& env) {
    std::vector<std::pair<Identifier, std::vector<Value>>> vars;
    const Formula* cur = &f;
    while (cur->is<FForall>() && cur->as<FForall>().sort.kind == Sort::Kind::kType) {
      const auto& q = cur->as<FForall>();
      vars.emplace_back(q.var, domain(*q.sort.type));
      cur = &q.body;
    }
    const Formula& body = *cur;
    std::vector<Term> guards;
    collect_constructed(body, guards);

    Prop out{Prop::Op::kAnd, -1, {}};
    const auto saved = env;
    auto visit = [&]() {
      for (const auto& g : guards)
        if (eval(g, env).kind != Value::Kind::kTerm) return;
      out.kids.push_back(ground(body, env));
    };

    if (const auto* pattern = covering_pattern(guards, vars)) {
      // Enumerate the universe entries built by the pattern's constructor
      // instead of the full product of domains.
      const auto& app = pattern->as<TmApp>();
      const int c = *u_.ctor_index(app.ctor);
      for (std::size_t id = 0; id < u_.size(); ++id) {
        const auto& e = u_.entry(static_cast<int>(id));
        if (e.ctor != c) continue;
        bool ok = true;
        for (std::size_t i = 0; i < app.args.size() && ok; ++i) {
          const auto kind = u_.is_param_position(c, i) ? Value::Kind::kAtom
                                                       : Value::Kind::kTerm;
          const Value v{kind, e.kids[i]};
          const auto& name = app.args[i].as<TmVar>().name;
          ok = in_domain(vars, name, v);
          env[name] = v;
        }
        if (ok) visit();
      }
    } else {
      std::vector<std::size_t> idx(vars.size(), 0);
      bool done = false;
      for (const auto& v : vars)
        if (v.second.empty()) done = true;
      while (!done) {
        for (std::size_t i = 0; i < vars.size(); ++i)
          env[vars[i].first] = vars[i].second[idx[i]];
        visit();
        std::size_t i = vars.size();
        done = true;
        while (i > 0) {
          --i;
          if (++idx[i] < vars[i].second.size()) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
      }
    }
    env = saved;
    if (out.kids.empty()) return Prop::constant(true);
    return out;
  }

  std::vector<Value> domain(const TypeExpr& ty) const {
    std::vector<Value> out;
    if (is_recursive_argument(decl_, ty)) {
      for (std::size_t i = 0; i < u_.size(); ++i)
        out.push_back({Value::Kind::kTerm, static_cast<int>(i)});
    } else if (ty.is<TyVar>()) {
      for (std::size_t i = 0; i < u_.atom_count(); ++i)
        out.push_back({Value::Kind::kAtom, static_cast<int>(i)});
    } else {
      throw OracleError(OracleError::Kind::kUnsupportedType,
                        decl_.type_name + ": cannot quantify over a type outside "
                                          "the oracle fragment");
    }
    return out;
  }

  static bool in_domain(const std::vector<std::pair<Identifier, std::vector<Value>>>& vars,
                        const Identifier& name, const Value& v) {
    for (const auto& [n, dom] : vars) {
      if (n != name) continue;
      if (dom.empty()) return false;
      return dom.front().kind == v.kind;
    }
    return false;
  }

  // Constructed terms in predicate arguments, outside nested quantifiers.
  static void collect_constructed(const Formula& f, std::vector<Term>& out) {
    if (f.is<FPred>()) {
      collect_apps(f.as<FPred>().arg, out);
    } else if (f.is<FAnd>()) {
      collect_constructed(f.as<FAnd>().left, out);
      collect_constructed(f.as<FAnd>().right, out);
    } else if (f.is<FImplies>()) {
      collect_constructed(f.as<FImplies>().antecedent, out);
      collect_constructed(f.as<FImplies>().consequent, out);
    }
  }

  static void collect_apps(const Term& t, std::vector<Term>& out) {
    if (!t.is<TmApp>()) return;
    out.push_back(t);
    for (const auto& a : t.as<TmApp>().args) collect_apps(a, out);
  }

  // A guard C x1 ... xj whose arguments are exactly the chain's variables.
  const Term* covering_pattern(
      const std::vector<Term>& guards,
      const std::vector<std::pair<Identifier, std::vector<Value>>>& vars) const {
    std::set<Identifier> names;
    for (const auto& v : vars) names.insert(v.first);
    if (names.size() != vars.size() || names.empty()) return nullptr;
    for (const auto& g : guards) {
      const auto& app = g.as<TmApp>();
      if (!u_.ctor_index(app.ctor) || app.args.size() != names.size()) continue;
      if (decl_.constructors[static_cast<std::size_t>(*u_.ctor_index(app.ctor))].arity() !=
          app.args.size())
        continue;
      std::set<Identifier> seen;
      for (const auto& a : app.args)
        if (a.is<TmVar>() && names.count(a.as<TmVar>().name)) seen.insert(a.as<TmVar>().name);
      if (seen == names) return &g;
    }
    return nullptr;
  }

  const DataDecl& decl_;
  const Universe& u_;
  Identifier pred_;
};

std::string mode_text(const CheckMode& m) {
  if (m.kind == CheckMode::Kind::kExhaustive) return "exhaustive";
  return "sampled";
}

}  // namespace

std::vector<GroundTerm> enumerate_terms(const DataDecl& decl, const GroundEnv& env,
                                        std::size_t depth_bound, bool pointed) {
  Universe u(decl, env, depth_bound, pointed);
  std::vector<GroundTerm> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u.ground(static_cast<int>(i)));
  return out;
}

std::string SoundnessReport::summary() const {
  std::ostringstream os;
  os << decl_name << ": " << (passed() ? "pass" : "FAIL") << " (universe "
     << universe_size << ", " << mode_text(mode) << " " << predicates_checked
     << " predicates";
  if (mode.kind == CheckMode::Kind::kSampled) os << ", seed " << mode.seed;
  os << ")";
  if (counterexample) {
    os << ": counterexample P = {";
    for (std::size_t i = 0; i < counterexample->predicate.size(); ++i)
      os << (i ? ", " : "") << counterexample->predicate[i].str();
    os << "} fails at " << counterexample->failing.str();
  }
  return os.str();
}

SoundnessReport check_principle(const Principle& principle, const GroundEnv& env,
                                std::size_t depth_bound, const CheckMode& mode) {
  const Universe u(principle.decl, env, depth_bound, principle.pointed);
  const std::size_t n = u.size();
  SoundnessReport report;
  report.decl_name = principle.decl.type_name;
  report.universe_size = n;
  report.mode = mode;

  if (mode.kind == CheckMode::Kind::kExhaustive && n > kExhaustiveLimit)
    throw OracleError(OracleError::Kind::kExhaustiveRefused,
                      principle.decl.type_name + ": universe of " +
                          std::to_string(n) + " terms is too large for exhaustive "
                          "checking (limit " + std::to_string(kExhaustiveLimit) +
                          "); use sampling");

  Grounder g(principle.decl, u);
  const auto [antecedent, conclusion] = g.principle(principle.formula);
  std::vector<int> concl_atoms;
  conclusion.atoms(concl_atoms);

  std::vector<char> member(n, 0);
  auto test = [&]() -> bool {
    ++report.predicates_checked;
    if (!antecedent.eval(member) || conclusion.eval(member)) return true;
    Counterexample cx{{}, GroundTerm::bottom()};
    for (std::size_t i = 0; i < n; ++i)
      if (member[i]) cx.predicate.push_back(u.ground(static_cast<int>(i)));
    int failing = -1;
    for (int a : concl_atoms)
      if (!member[static_cast<std::size_t>(a)]) {
        failing = a;
        break;
      }
    if (failing < 0)
      for (std::size_t i = 0; i < n && failing < 0; ++i)
        if (!member[i]) failing = static_cast<int>(i);
    if (failing >= 0) cx.failing = u.ground(failing);
    report.counterexample = std::move(cx);
    return false;
  };

  if (mode.kind == CheckMode::Kind::kExhaustive) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      for (std::size_t i = 0; i < n; ++i) member[i] = static_cast<char>((mask >> i) & 1U);
      if (!test()) break;
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    for (std::size_t s = 0; s < mode.count; ++s) {
      for (std::size_t i = 0; i < n; ++i) member[i] = static_cast<char>(rng() >> 63);
      if (!test()) break;
    }
  }
  return report;
}

SoundnessReport check_soundness(const DataDecl& decl, const GenOptions& opts,
                                const GroundEnv& env, std::size_t depth_bound,
                                const CheckMode& mode) {
  return check_principle(induction_principle(decl, opts), env, depth_bound, mode);
}

}  // namespace indgen
