#include "indgen/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace indgen {

std::string SourcePos::str() const {
  return std::to_string(line) + ":" + std::to_string(column);
}

namespace {

std::string format_error(const SourcePos& pos, const std::string& message,
                         const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << pos.str() << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(Category category, SourcePos pos, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error(format_error(pos, message, expected)),
      category_(category),
      pos_(pos),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
  kData,
  kUpper,
  kLower,
  kEquals,
  kBar,
  kLParen,
  kRParen,
  kComma,
  kArrow,
  kEof,
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::kData: return "'data'";
    case Tok::kUpper: return "uppercase name";
    case Tok::kLower: return "lowercase name";
    case Tok::kEquals: return "'='";
    case Tok::kBar: return "'|'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kArrow: return "'->'";
    case Tok::kEof: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_symbol_char(char c) {
  return std::string_view("!#$%&*+./<=>?@\\^|-~:").find(c) !=
         std::string_view::npos;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    const SourcePos start = pos_;
    if (at_end()) return {Tok::kEof, "", start};
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (!at_end() && is_ident_char(peek())) word += advance();
      if (word == "data") {
        return {Tok::kData, word, start};
      } else if (word == "deriving") {
        unsupported(start, "'deriving' clauses are not supported");
      } else if (word == "where") {
        unsupported(start, "GADT syntax is not supported");
      } else {
        const bool upper = std::isupper(static_cast<unsigned char>(c));
        return {upper ? Tok::kUpper : Tok::kLower, word, start};
      }
    }
    switch (c) {
      case '(': advance(); return {Tok::kLParen, "(", start};
      case ')': advance(); return {Tok::kRParen, ")", start};
      case ',': advance(); return {Tok::kComma, ",", start};
      case '{': unsupported(start, "record syntax is not supported");
      case '`': unsupported(start, "infix constructors are not supported");
      case '!': unsupported(start, "strictness annotations are not supported");
      default: break;
    }
    if (is_symbol_char(c)) {
      std::string sym;
      while (!at_end() && is_symbol_char(peek())) sym += advance();
      if (sym == "=") return {Tok::kEquals, sym, start};
      if (sym == "|") return {Tok::kBar, sym, start};
      if (sym == "->") return {Tok::kArrow, sym, start};
      if (sym == "::")
        unsupported(start, "kind and type signatures are not supported");
      if (sym[0] == ':')
        unsupported(start, "infix constructors are not supported");
      throw ParseError(ParseError::Category::kSyntax, start,
                       "unexpected symbol '" + sym + "'");
    }
    std::string shown(1, c);
    if (static_cast<unsigned char>(c) >= 0x80) shown = "non-ASCII character";
    throw ParseError(ParseError::Category::kSyntax, start,
                     "unexpected character '" + shown + "'");
  }

 private:
  [[noreturn]] static void unsupported(const SourcePos& pos,
                                       const std::string& what) {
    throw ParseError(ParseError::Category::kUnsupported, pos,
                     "unsupported feature: " + what);
  }

  bool at_end() const { return pos_.offset >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_.offset + ahead < src_.size() ? src_[pos_.offset + ahead] : '\0';
  }

  char advance() {
    const char c = src_[pos_.offset++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++pos_.column;
    }
    return c;
  }

  void skip_space() {
    for (;;) {
      if (at_end()) return;
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        // "---" starts a comment; "-->" is an operator.
        std::size_t n = 2;
        while (peek(n) == '-') ++n;
        if (is_symbol_char(peek(n))) return;
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  SourcePos pos_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src), cur_(lexer_.next()) {}

  bool at_eof() const { return cur().kind == Tok::kEof; }

  DataDecl decl() {
    expect(Tok::kData);
    DataDecl d;
    const Token name = expect(Tok::kUpper, "type name");
    d.type_name = name.text;
    std::map<std::string, SourcePos> params;
    for (;;) {
      if (cur().kind == Tok::kLower) {
        const Token p = take();
        if (params.count(p.text))
          semantic(p.pos, "duplicate type parameter '" + p.text + "'");
        if (p.text == d.type_name)
          semantic(p.pos, "type parameter equals the type name");
        params.emplace(p.text, p.pos);
        d.type_params.push_back(p.text);
      } else if (cur().kind == Tok::kUpper) {
        semantic(cur().pos, "type parameter '" + cur().text +
                                "' must start with a lowercase letter");
      } else {
        break;
      }
    }
    expect(Tok::kEquals, "'=' or type parameter");
    decl_ = &d;
    params_ = &params;
    d.constructors.push_back(ctor());
    while (cur().kind == Tok::kBar) {
      take();
      d.constructors.push_back(ctor());
    }
    decl_ = nullptr;
    params_ = nullptr;
    return d;
  }

  void expect_eof() {
    if (!at_eof())
      syntax(cur().pos, "unexpected " + describe(cur().kind), {describe(Tok::kEof)});
  }

  const Token& cur() const { return cur_; }

 private:
  Token take() {
    Token t = std::move(cur_);
    if (t.kind != Tok::kEof) cur_ = lexer_.next();
    else cur_ = t;
    return t;
  }

  Token expect(Tok kind, const std::string& what = "") {
    if (cur().kind != kind) {
      syntax(cur().pos,
             cur().kind == Tok::kEof ? "unexpected end of input"
                                     : "unexpected " + describe(cur().kind) +
                                           (cur().text.empty() ? "" : " '" + cur().text + "'"),
             {what.empty() ? describe(kind) : what});
    }
    return take();
  }

  [[noreturn]] static void syntax(const SourcePos& pos, const std::string& msg,
                                  std::vector<std::string> expected = {}) {
    throw ParseError(ParseError::Category::kSyntax, pos, msg,
                     std::move(expected));
  }
  [[noreturn]] static void semantic(const SourcePos& pos,
                                    const std::string& msg) {
    throw ParseError(ParseError::Category::kSemantic, pos, msg);
  }
  [[noreturn]] static void unsupported(const SourcePos& pos,
                                       const std::string& msg) {
    throw ParseError(ParseError::Category::kUnsupported, pos,
                     "unsupported feature: " + msg);
  }

  ConstructorDecl ctor() {
    if (cur().kind != Tok::kUpper) {
      syntax(cur().pos,
             cur().kind == Tok::kEof ? "unexpected end of input"
                                     : "unexpected " + describe(cur().kind),
             {"constructor"});
    }
    for (const auto& c : decl_->constructors)
      if (c.name == cur().text)
        semantic(cur().pos, "duplicate constructor '" + cur().text + "'");
    ConstructorDecl c{take().text, {}};
    while (starts_atype()) c.arg_types.push_back(atype());
    return c;
  }

  bool starts_atype() const {
    const Tok k = cur().kind;
    return k == Tok::kUpper || k == Tok::kLower || k == Tok::kLParen;
  }

  TypeExpr type_var(const Token& t) {
    if (!params_->count(t.text))
      semantic(t.pos, "type variable '" + t.text + "' is not a parameter of '" +
                          decl_->type_name + "'");
    return TypeExpr::var(t.text);
  }

  TypeExpr type_name(const Token& t, std::vector<TypeExpr> args) {
    if (t.text == decl_->type_name && args.size() != decl_->type_params.size())
      semantic(t.pos, "'" + t.text + "' expects " +
                          std::to_string(decl_->type_params.size()) +
                          " type argument(s), got " +
                          std::to_string(args.size()));
    return TypeExpr::app(t.text, std::move(args));
  }

  // atype := lowerName | UpperName | "(" type ")" | "(" type "," type {...} ")"
  TypeExpr atype() {
    const Token t = take();
    switch (t.kind) {
      case Tok::kLower: return type_var(t);
      case Tok::kUpper: return type_name(t, {});
      case Tok::kLParen: return paren_rest(t);
      default: break;
    }
    syntax(t.pos, "unexpected " + describe(t.kind), {"type"});
  }

  // After "(": type ")" or a tuple.
  TypeExpr paren_rest(const Token& open) {
    std::vector<TypeExpr> elems{type()};
    while (cur().kind == Tok::kComma) {
      take();
      elems.push_back(type());
    }
    if (cur().kind != Tok::kRParen)
      syntax(cur().pos, "unclosed '(' opened at " + open.pos.str(),
             elems.size() == 1 ? std::vector<std::string>{"')'", "','", "'->'"}
                               : std::vector<std::string>{"')'", "','"});
    take();
    if (elems.size() == 1) return elems.front();
    return TypeExpr::tuple(std::move(elems));
  }

  // type := btype [ "->" type ]
  TypeExpr type() {
    TypeExpr lhs = btype();
    if (cur().kind == Tok::kArrow) {
      take();
      return TypeExpr::arrow(std::move(lhs), type());
    }
    return lhs;
  }

  // btype := (UpperName | lowerName | "(" type ")" | tuple) { atype }
  TypeExpr btype() {
    const Token head = cur();
    if (head.kind == Tok::kUpper) {
      take();
      std::vector<TypeExpr> args;
      while (starts_atype()) args.push_back(atype());
      return type_name(head, std::move(args));
    }
    if (head.kind == Tok::kLower) {
      take();
      if (starts_atype())
        unsupported(cur().pos, "application of type variable '" + head.text + "'");
      return type_var(head);
    }
    if (head.kind == Tok::kLParen) {
      take();
      TypeExpr inner = paren_rest(head);
      if (!starts_atype()) return inner;
      if (!inner.is<TyApp>())
        unsupported(cur().pos, "application of a non-constructor type");
      std::vector<TypeExpr> args = inner.as<TyApp>().args;
      while (starts_atype()) args.push_back(atype());
      return TypeExpr::app(inner.as<TyApp>().head, std::move(args));
    }
    syntax(head.pos,
           head.kind == Tok::kEof ? "unexpected end of input"
                                  : "unexpected " + describe(head.kind),
           {"type"});
  }

  Lexer lexer_;
  Token cur_;
  const DataDecl* decl_ = nullptr;
  const std::map<std::string, SourcePos>* params_ = nullptr;
};

}  // namespace

DataDecl parse_decl(std::string_view input) {
  Parser p(input);
  DataDecl d = p.decl();
  p.expect_eof();
  return d;
}

std::vector<DataDecl> parse_program(std::string_view input) {
  Parser p(input);
  std::vector<DataDecl> out;
  std::set<std::string> names;
  while (!p.at_eof()) {
    const SourcePos start = p.cur().pos;
    DataDecl d = p.decl();
    if (!names.insert(d.type_name).second)
      throw ParseError(ParseError::Category::kSemantic, start,
                       "duplicate declaration of type '" + d.type_name + "'");
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace indgen
