#ifndef INDGEN_PARSER_HPP
#define INDGEN_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indgen/ast.hpp"

namespace indgen {

struct SourcePos {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, counted in code points
  std::size_t offset = 0;  // byte offset into the input

  std::string str() const;
};

class ParseError : public std::runtime_error {
 public:
  enum class Category { kSyntax, kSemantic, kUnsupported };

  ParseError(Category category, SourcePos pos, std::string message,
             std::vector<std::string> expected = {});

  Category category() const { return category_; }
  const SourcePos& pos() const { return pos_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Category category_;
  SourcePos pos_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Parses exactly one `data` declaration; trailing whitespace and comments
// are allowed. Throws ParseError.
DataDecl parse_decl(std::string_view input);

// Parses zero or more declarations with pairwise distinct type names.
// Throws the first ParseError encountered.
std::vector<DataDecl> parse_program(std::string_view input);

}  // namespace indgen

#endif  // INDGEN_PARSER_HPP
