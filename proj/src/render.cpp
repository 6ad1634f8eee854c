#include "indgen/render.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace indgen {

namespace {

struct Symbols {
  const char* forall;
  const char* conj;
  const char* implies;
  const char* arrow;
  const char* boolean;
  const char* bottom;
  const char* truth;
  const char* app_sep;
  bool subscripts;
};

constexpr Symbols kText{"∀", " ∧ ", " ⇒ ", " → ", "𝔹", "⊥", "⊤", " ", false};
constexpr Symbols kLatex{"\\forall ", " \\wedge ", " \\Rightarrow ",
                         " \\rightarrow ", "{\\mathbb{B}}", "\\bot", "\\top",
                         "\\; ", true};

// n1 -> n_1, n12 -> n_{12}; underscores are escaped.
std::string latex_name(const std::string& name) {
  std::size_t split = name.size();
  while (split > 1 && std::isdigit(static_cast<unsigned char>(name[split - 1])))
    --split;
  std::string stem;
  for (char c : name.substr(0, split)) {
    if (c == '_') stem += "\\_";
    else stem += c;
  }
  const std::string digits = name.substr(split);
  if (digits.empty()) return stem;
  if (digits.size() == 1) return stem + "_" + digits;
  return stem + "_{" + digits + "}";
}

class Printer {
 public:
  explicit Printer(const Symbols& sym) : sym_(sym) {}

  std::string formula(const Formula& f, bool top) {
    if (f.is<FTruth>()) return sym_.truth;
    if (f.is<FPred>()) {
      const auto& p = f.as<FPred>();
      return "(" + term_name(p.pred) + sym_.app_sep + term(p.arg) + ")";
    }
    if (f.is<FAnd>()) {
      const auto& a = f.as<FAnd>();
      return "(" + formula(a.left, false) + sym_.conj + formula(a.right, false) + ")";
    }
    if (f.is<FImplies>()) {
      const auto& i = f.as<FImplies>();
      std::string s = formula(i.antecedent, false) + sym_.implies +
                      formula(i.consequent, false);
      return top ? s : "(" + s + ")";
    }
    const auto& q = f.as<FForall>();
    std::string head = std::string(sym_.forall);
    if (q.sort.binds_type()) {
      head += name(q.var) + ":*. ";
      const bool fresh = type_scope_.insert(q.var).second;
      std::string body = formula(q.body, top);
      if (fresh) type_scope_.erase(q.var);
      return head + body;
    }
    const std::string sort_text = sort(q.sort);
    std::string shown = q.var;
    while (type_scope_.count(shown)) shown += "0";
    auto saved = display_.find(q.var) != display_.end()
                     ? std::optional<std::string>(display_[q.var])
                     : std::nullopt;
    display_[q.var] = shown;
    std::string body = formula(q.body, top);
    if (saved) display_[q.var] = *saved;
    else display_.erase(q.var);
    return head + name(shown) + ":" + sort_text + ". " + body;
  }

  std::string sort(const Sort& s) {
    switch (s.kind) {
      case Sort::Kind::kStar: return "*";
      case Sort::Kind::kType: return type(*s.type);
      case Sort::Kind::kPred: return type(*s.type) + sym_.arrow + sym_.boolean;
    }
    return "";
  }

  std::string type(const TypeExpr& ty) {
    if (ty.is<TyVar>()) return name(ty.as<TyVar>().name);
    if (ty.is<TyStar>()) return "*";
    if (ty.is<TyApp>()) {
      const auto& a = ty.as<TyApp>();
      if (a.args.empty()) return name(a.head);
      std::string s = "(" + name(a.head);
      for (const auto& arg : a.args) s += sym_.app_sep + type(arg);
      return s + ")";
    }
    if (ty.is<TyTuple>()) {
      std::string s = "(";
      const auto& elems = ty.as<TyTuple>().elems;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ", ";
        s += type(elems[i]);
      }
      return s + ")";
    }
    const auto& ar = ty.as<TyArrow>();
    return "(" + type(ar.domain) + sym_.arrow + type(ar.codomain) + ")";
  }

 private:
  std::string name(const std::string& n) const {
    return sym_.subscripts ? latex_name(n) : n;
  }

  std::string term_name(const std::string& n) const {
    auto it = display_.find(n);
    return name(it == display_.end() ? n : it->second);
  }

  std::string term(const Term& t) {
    if (t.is<TmVar>()) return term_name(t.as<TmVar>().name);
    if (t.is<TmBottom>()) return sym_.bottom;
    const auto& a = t.as<TmApp>();
    if (a.args.empty()) return name(a.ctor);
    std::string s = "(" + name(a.ctor);
    for (const auto& arg : a.args) s += sym_.app_sep + term(arg);
    return s + ")";
  }

  const Symbols& sym_;
  std::set<std::string> type_scope_;
  std::map<std::string, std::string> display_;
};

//------------------------------------------------------------------------------
// declaration source

std::string src_type(const TypeExpr& ty);

std::string src_atype(const TypeExpr& ty) {
  if (ty.is<TyVar>()) return ty.as<TyVar>().name;
  if (ty.is<TyApp>() && ty.as<TyApp>().args.empty()) return ty.as<TyApp>().head;
  if (ty.is<TyTuple>()) return src_type(ty);
  return "(" + src_type(ty) + ")";
}

std::string src_type(const TypeExpr& ty) {
  if (ty.is<TyApp>()) {
    const auto& a = ty.as<TyApp>();
    std::string s = a.head;
    for (const auto& arg : a.args) s += " " + src_atype(arg);
    return s;
  }
  if (ty.is<TyTuple>()) {
    std::string s = "(";
    const auto& elems = ty.as<TyTuple>().elems;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) s += ", ";
      s += src_type(elems[i]);
    }
    return s + ")";
  }
  if (ty.is<TyArrow>()) {
    const auto& ar = ty.as<TyArrow>();
    return src_atype(ar.domain) + " -> " + src_type(ar.codomain);
  }
  if (ty.is<TyStar>()) return "*";
  return ty.as<TyVar>().name;
}

}  // namespace

std::string render_text(const Formula& f) { return Printer(kText).formula(f, true); }
std::string render_text(const TypeExpr& ty) { return Printer(kText).type(ty); }

std::string render_latex(const Formula& f) {
  return Printer(kLatex).formula(f, true);
}
std::string render_latex(const TypeExpr& ty) { return Printer(kLatex).type(ty); }

std::string render_decl_source(const DataDecl& d) {
  std::string s = "data " + d.type_name;
  for (const auto& p : d.type_params) s += " " + p;
  s += " =";
  for (std::size_t i = 0; i < d.constructors.size(); ++i) {
    const auto& c = d.constructors[i];
    s += i ? " | " : " ";
    s += c.name;
    for (const auto& t : c.arg_types) s += " " + src_atype(t);
  }
  return s;
}

}  // namespace indgen
