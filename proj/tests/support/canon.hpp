#ifndef INDGEN_TESTS_CANON_HPP
#define INDGEN_TESTS_CANON_HPP

#include <map>
#include <string>

#include "indgen/ast.hpp"

namespace indgen::testing {

// Renames every bound variable to "#k", k being the number of enclosing
// binders. Type variables and term/predicate variables are looked up in
// separate scopes; free names are kept. Two formulas are alpha-equivalent
// exactly when their canonical forms are equal.
Formula canonicalize(const Formula& f);

// Renames bound variables through `fresh`, which maps old names to new
// ones; names absent from the map are kept. Free occurrences are untouched.
Formula rename_bound(const Formula& f, const std::map<std::string, std::string>& fresh);

}  // namespace indgen::testing

#endif
