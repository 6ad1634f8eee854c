#include <gtest/gtest.h>

#include "indgen/parser.hpp"
#include "indgen/render.hpp"
#include "random_gen.hpp"

using namespace indgen;
using namespace indgen::testing;

namespace {

ParseError error_of(std::string_view src) {
  try {
    parse_program(src);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << src;
  return ParseError(ParseError::Category::kSyntax, {}, "none");
}

TypeExpr v(const char* n) { return TypeExpr::var(n); }

}  // namespace

TEST(ParseDecl, Nat) {
  const DataDecl d = parse_decl("data Nat = Z | S Nat");
  EXPECT_EQ(d, (DataDecl{"Nat", {}, {{"Z", {}}, {"S", {TypeExpr::app("Nat")}}}}));
}

TEST(ParseDecl, SwapTree) {
  const DataDecl d = parse_decl("data SwapTree a b = Leaf | Node a (SwapTree b a) (SwapTree b a)");
  const TypeExpr ba = TypeExpr::app("SwapTree", {v("b"), v("a")});
  EXPECT_EQ(d, (DataDecl{"SwapTree", {"a", "b"}, {{"Leaf", {}}, {"Node", {v("a"), ba, ba}}}}));
}

TEST(ParseDecl, AtomicTypeForms) {
  const DataDecl d = parse_decl(
      "data F a b = F (a, b) (a -> b) (List (Maybe a)) Int (F a b) ((a))\n  -- trailing comment\n");
  const auto& args = d.constructors[0].arg_types;
  ASSERT_EQ(args.size(), 6u);
  EXPECT_EQ(args[0], TypeExpr::tuple({v("a"), v("b")}));
  EXPECT_EQ(args[1], TypeExpr::arrow(v("a"), v("b")));
  EXPECT_EQ(args[2], TypeExpr::app("List", {TypeExpr::app("Maybe", {v("a")})}));
  EXPECT_EQ(args[3], TypeExpr::app("Int"));
  EXPECT_EQ(args[5], v("a"));
}

TEST(ParseDecl, ArrowIsRightAssociative) {
  const DataDecl d = parse_decl("data F a = F (a -> a -> a)");
  EXPECT_EQ(d.constructors[0].arg_types[0],
            TypeExpr::arrow(v("a"), TypeExpr::arrow(v("a"), v("a"))));
}

TEST(ParseDecl, MultiLineLayout) {
  const DataDecl d = parse_decl(
      "data Lambda c = Var String\n"
      "              | Const c\n"
      "              | Ap (Lambda c) (Lambda c)\n"
      "              | Abs String (Lambda c)");
  EXPECT_EQ(d.constructors.size(), 4u);
  EXPECT_EQ(d.constructors[3].arg_types[0], TypeExpr::app("String"));
}

TEST(ParseErrors, Examples) {
  EXPECT_EQ(error_of("data T a a = C a").category(), ParseError::Category::kSemantic);
  const ParseError e = error_of("data Nat =");
  EXPECT_EQ(e.category(), ParseError::Category::kSyntax);
  EXPECT_NE(std::string(e.what()).find("constructor"), std::string::npos);
  EXPECT_EQ(error_of("data Nat = Z\ndata Nat = S").category(), ParseError::Category::kSemantic);
}

TEST(ParseErrors, SemanticChecks) {
  for (const char* src : {"data T = C | C", "data T a = C b", "data T a = C (T a a)",
                          "data T A = C", "data List a = Nil | Cons a List"}) {
    SCOPED_TRACE(src);
    const ParseError e = error_of(src);
    EXPECT_NE(e.category(), ParseError::Category::kSyntax);
    EXPECT_FALSE(e.message().empty());
  }
}

TEST(ParseErrors, UnsupportedFeatures) {
  for (const char* src : {"data T = C deriving Show", "data T = C { f :: Int }", "data T = C !Int",
                          "data T = Int :+ Int", "data T a = C (a Int)"}) {
    SCOPED_TRACE(src);
    EXPECT_EQ(error_of(src).category(), ParseError::Category::kUnsupported);
  }
}

TEST(ParseErrors, Positions) {
  const ParseError e = error_of("data Nat = Z\n  | S (Nat");
  EXPECT_EQ(e.pos().line, 2u);
  EXPECT_NE(std::string(e.what()).find("2:"), std::string::npos);
  const ParseError u = error_of("data T = Ü");
  EXPECT_EQ(u.pos().line, 1u);
  EXPECT_EQ(u.pos().column, 10u);
}

TEST(ParseProgram, Examples) {
  EXPECT_EQ(parse_program("data Bool = T | F\ndata Maybe a = Nothing | Just a").size(), 2u);
  EXPECT_TRUE(parse_program("").empty());
  EXPECT_TRUE(parse_program("  -- only a comment\n").empty());
}

TEST(ParseDecl, RejectsTwoDeclarations) {
  EXPECT_THROW(parse_decl("data Bool = T | F\ndata Unit = U"), ParseError);
}

TEST(ParseProperties, RoundTrip) {
  Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    const DataDecl d = random_decl(rng);
    const std::string src = render_decl_source(d);
    DataDecl back;
    ASSERT_NO_THROW(back = parse_decl(src)) << src;
    EXPECT_EQ(back, d) << src;
  }
}

TEST(ParseProperties, ProgramKeepsOrder) {
  Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    std::vector<DataDecl> ds;
    std::set<std::string> names;
    std::string src;
    const int k = std::uniform_int_distribution<int>(0, 5)(rng);
    while (static_cast<int>(ds.size()) < k) {
      DataDecl d = random_decl(rng);
      if (!names.insert(d.type_name).second) continue;
      src += render_decl_source(d) + "\n";
      ds.push_back(std::move(d));
    }
    EXPECT_EQ(parse_program(src), ds);
  }
}

TEST(ParseProperties, ErrorPositionsInBounds) {
  Rng rng(107);
  const std::string noise = "()|=-> ,:{}!`aZ\n\t9";
  int errors = 0;
  for (int i = 0; i < 1000; ++i) {
    std::string src = render_decl_source(random_decl(rng));
    const int edits = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int j = 0; j < edits; ++j) {
      const std::size_t at = std::uniform_int_distribution<std::size_t>(0, src.size())(rng);
      if (std::bernoulli_distribution(0.5)(rng) && at < src.size())
        src.erase(at, 1);
      else
        src.insert(at, 1, noise[std::uniform_int_distribution<std::size_t>(0, noise.size() - 1)(rng)]);
    }
    try {
      parse_program(src);
    } catch (const ParseError& e) {
      ++errors;
      EXPECT_GE(e.pos().line, 1u);
      EXPECT_GE(e.pos().column, 1u);
      EXPECT_LE(e.pos().offset, src.size()) << src;
      const auto lines = 1 + std::count(src.begin(), src.end(), '\n');
      EXPECT_LE(e.pos().line, static_cast<std::size_t>(lines)) << src;
      EXPECT_FALSE(e.message().empty());
    }
  }
  EXPECT_GT(errors, 300);
}
