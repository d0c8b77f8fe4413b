#include "ncg/expr_parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace ncg {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(std::string_view src, int line0, int col0) : src_(src), line_(line0), col_(col0) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      int line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          ident += take();
        out.push_back({Tok::Ident, std::move(ident), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          digits += take();
        out.push_back({Tok::Int, std::move(digits), line, col});
      } else {
        Tok kind;
        switch (c) {
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '/': kind = Tok::Slash; break;
          case '^': kind = Tok::Caret; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          default:
            throw ExprParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        take();
        out.push_back({kind, std::string(1, c), line, col});
      }
    }
  }

 private:
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) take();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
  int col_;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, SymbolTablePtr table)
      : tokens_(std::move(tokens)), table_(std::move(table)) {}

  GradedExpr run() {
    GradedExpr e = expr();
    if (peek().kind != Tok::End)
      throw ExprParseError(peek().line, peek().col,
                           "unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool match(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  GradedExpr expr() {
    bool negate = match(Tok::Minus);
    GradedExpr value = term();
    if (negate) value = -value;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = advance().kind == Tok::Minus;
      GradedExpr rhs = term();
      value = minus ? value - rhs : value + rhs;
    }
    return value;
  }

  GradedExpr term() {
    GradedExpr value = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = advance();
      GradedExpr rhs = factor();
      if (op.kind == Tok::Star) {
        value = value * rhs;
      } else {
        try {
          value = value / rhs;
        } catch (const DivisionByZeroExpr& e) {
          throw ExprParseError(op.line, op.col, e.what());
        }
      }
    }
    return value;
  }

  GradedExpr factor() {
    GradedExpr value = base();
    if (match(Tok::Caret)) {
      bool negative = match(Tok::Minus);
      const Token& t = peek();
      if (t.kind != Tok::Int)
        throw ExprParseError(t.line, t.col, "expected integer exponent after '^'");
      advance();
      int exponent = 0;
      try {
        exponent = std::stoi(t.text);
      } catch (const std::exception&) {
        throw ExprParseError(t.line, t.col, "exponent out of range");
      }
      if (negative) exponent = -exponent;
      try {
        value = value.pow(exponent);
      } catch (const DivisionByZeroExpr& e) {
        throw ExprParseError(t.line, t.col, e.what());
      }
    }
    return value;
  }

  GradedExpr base() {
    const Token& t = advance();
    switch (t.kind) {
      case Tok::Ident: {
        if (t.text == table_->deformation_symbol()) return GradedExpr::deformation(table_);
        auto idx = table_->index_of(t.text);
        if (!idx) throw ExprParseError(t.line, t.col, "unknown symbol '" + t.text + "'");
        return GradedExpr::symbol(table_, *idx);
      }
      case Tok::Int:
        return GradedExpr::constant(table_, Rational(BigInt(t.text)));
      case Tok::LParen: {
        GradedExpr inner = expr();
        if (!match(Tok::RParen))
          throw ExprParseError(peek().line, peek().col, "expected ')'");
        return inner;
      }
      default:
        throw ExprParseError(t.line, t.col,
                             t.kind == Tok::End ? "unexpected end of expression"
                                                : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  SymbolTablePtr table_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedExpr parse_expression(std::string_view text, const SymbolTablePtr& table, int line0,
                            int col0) {
  return Parser(Lexer(text, line0, col0).run(), table).run();
}

}  // namespace ncg
