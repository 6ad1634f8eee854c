#ifndef INDGEN_TESTS_FIXTURES_HPP
#define INDGEN_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace indgen::testing {

struct Example {
  const char* key;     // fixture file stem
  const char* source;  // declaration
};

inline const std::vector<Example>& paper_examples() {
  static const std::vector<Example> xs = {
      {"nat", "data Nat = Z | S Nat"},
      {"list", "data List a = Nil | Cons a (List a)"},
      {"tsil", "data Tsil a = Snoc (Tsil a) a | Lin"},
      {"btree", "data BTree a = Leaf a | Fork (BTree a) (BTree a)"},
      {"swaptree", "data SwapTree a b = Leaf | Node a (SwapTree b a) (SwapTree b a)"},
      {"bool", "data Bool = T | F"},
      {"maybe", "data Maybe a = Nothing | Just a"},
  };
  return xs;
}

inline constexpr const char* kSTree = "data STree a = Leaf | Node a (STree a) (STree a)";
inline constexpr const char* kLambda =
    "data Lambda c = Var String | Const c | Ap (Lambda c) (Lambda c) | Abs String (Lambda c)";

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string golden_display(const std::string& key) {
  return slurp(std::string(INDGEN_GOLDEN_DIR) + "/displays/" + key + ".tex");
}

}  // namespace indgen::testing

#endif
