#ifndef INDGEN_RENDER_HPP
#define INDGEN_RENDER_HPP

#include <string>
#include <string_view>

#include "indgen/ast.hpp"
#include "indgen/parser.hpp"

namespace indgen {

// Unicode rendering, e.g.
//   ∀P:Nat → 𝔹. ((P Z) ∧ ∀n1:Nat. ((P n1) ⇒ (P (S n1)))) ⇒ ∀n:Nat. (P n)
// A term variable whose name clashes with a type variable in scope is
// printed with a "0" suffix.
std::string render_text(const Formula& f);
std::string render_text(const TypeExpr& ty);

// LaTeX math-mode rendering; numeric suffixes become subscripts (n_1).
std::string render_latex(const Formula& f);
std::string render_latex(const TypeExpr& ty);

// Canonical s-expression form, e.g.
//   (forall (n1 (ty Nat)) (implies (pred P (var n1)) (pred P (app S (var n1)))))
std::string render_sexpr(const Formula& f);
std::string render_sexpr(const TypeExpr& ty);

// Inverse of render_sexpr. Whitespace-insensitive; ';' starts a line
// comment. Throws ParseError.
Formula parse_sexpr(std::string_view input);

// Declaration-language source that parse_decl maps back to `d`.
std::string render_decl_source(const DataDecl& d);

}  // namespace indgen

#endif  // INDGEN_RENDER_HPP
