#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hodo/ratfunc.hpp"

namespace hodo {

// Surface-syntax AST for the displayed formulas. Exponents of ^ are
// nonnegative integer literals; printing a parsed tree re-parses to the same
// tree.
struct ExprAst {
  enum class Kind { Number, ImagUnit, Var, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  Rational number;             // Number
  std::string name;            // Var
  std::shared_ptr<ExprAst> lhs, rhs;  // Neg uses lhs only
  int exponent = 0;            // Pow

  static std::shared_ptr<ExprAst> make(Kind k) {
    auto node = std::make_shared<ExprAst>();
    node->kind = k;
    return node;
  }
};

namespace detail {

struct Token {
  enum class Type { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }
  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Type::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_ = {Token::Type::Int, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_ = {Token::Type::Ident, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Token::Type::Plus, "+", start}; return;
      case '-': current_ = {Token::Type::Minus, "-", start}; return;
      case '*': current_ = {Token::Type::Star, "*", start}; return;
      case '/': current_ = {Token::Type::Slash, "/", start}; return;
      case '^': current_ = {Token::Type::Caret, "^", start}; return;
      case '(': current_ = {Token::Type::LParen, "(", start}; return;
      case ')': current_ = {Token::Type::RParen, ")", start}; return;
      default:
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

// Precedence-climbing parser: ^ > unary - > * / > + -, with left-associative
// binary - and /.
class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  std::shared_ptr<ExprAst> parse() {
    auto e = parse_sum();
    if (lex_.peek().type != Token::Type::End)
      throw SyntaxError(lex_.peek().pos, "trailing input");
    return e;
  }

 private:
  std::shared_ptr<ExprAst> parse_sum() {
    auto lhs = parse_product();
    while (true) {
      auto type = lex_.peek().type;
      if (type != Token::Type::Plus && type != Token::Type::Minus) return lhs;
      lex_.take();
      auto node = ExprAst::make(type == Token::Type::Plus ? ExprAst::Kind::Add
                                                          : ExprAst::Kind::Sub);
      node->lhs = lhs;
      node->rhs = parse_product();
      lhs = node;
    }
  }
  std::shared_ptr<ExprAst> parse_product() {
    auto lhs = parse_unary();
    while (true) {
      auto type = lex_.peek().type;
      if (type != Token::Type::Star && type != Token::Type::Slash) return lhs;
      lex_.take();
      auto node = ExprAst::make(type == Token::Type::Star ? ExprAst::Kind::Mul
                                                          : ExprAst::Kind::Div);
      node->lhs = lhs;
      node->rhs = parse_unary();
      lhs = node;
    }
  }
  std::shared_ptr<ExprAst> parse_unary() {
    if (lex_.peek().type == Token::Type::Minus) {
      lex_.take();
      auto node = ExprAst::make(ExprAst::Kind::Neg);
      node->lhs = parse_unary();
      return node;
    }
    if (lex_.peek().type == Token::Type::Plus) {
      lex_.take();
      return parse_unary();
    }
    return parse_power();
  }
  std::shared_ptr<ExprAst> parse_power() {
    auto base = parse_primary();
    while (lex_.peek().type == Token::Type::Caret) {
      lex_.take();
      Token e = lex_.take();
      if (e.type != Token::Type::Int)
        throw SyntaxError(e.pos, "exponent must be a nonnegative integer literal");
      auto node = ExprAst::make(ExprAst::Kind::Pow);
      node->lhs = base;
      node->exponent = std::stoi(e.text);
      base = node;
    }
    return base;
  }
  std::shared_ptr<ExprAst> parse_primary() {
    Token t = lex_.take();
    switch (t.type) {
      case Token::Type::Int: {
        auto node = ExprAst::make(ExprAst::Kind::Number);
        node->number = *Rational::parse(t.text);
        return node;
      }
      case Token::Type::Ident: {
        if (t.text == "i") return ExprAst::make(ExprAst::Kind::ImagUnit);
        auto node = ExprAst::make(ExprAst::Kind::Var);
        node->name = t.text;
        return node;
      }
      case Token::Type::LParen: {
        auto e = parse_sum();
        Token close = lex_.take();
        if (close.type != Token::Type::RParen)
          throw SyntaxError(close.pos, "expected ')'");
        return e;
      }
      default:
        throw SyntaxError(t.pos, "expected a number, variable or '('");
    }
  }

  Lexer lex_;
};

inline int precedence(ExprAst::Kind k) {
  switch (k) {
    case ExprAst::Kind::Add:
    case ExprAst::Kind::Sub: return 1;
    case ExprAst::Kind::Mul:
    case ExprAst::Kind::Div: return 2;
    case ExprAst::Kind::Neg: return 3;
    case ExprAst::Kind::Pow: return 4;
    default: return 5;
  }
}

}  // namespace detail

inline std::shared_ptr<ExprAst> parse_ast(std::string_view text) {
  return detail::Parser(text).parse();
}

inline std::string print_ast(const ExprAst& e) {
  using K = ExprAst::Kind;
  auto wrap = [](const ExprAst& child, int min_prec) {
    std::string s = print_ast(child);
    if (detail::precedence(child.kind) < min_prec) return "(" + s + ")";
    return s;
  };
  switch (e.kind) {
    case K::Number: return e.number.to_string();
    case K::ImagUnit: return "i";
    case K::Var: return e.name;
    case K::Neg: return "-" + wrap(*e.lhs, 3);
    case K::Add: return print_ast(*e.lhs) + " + " + wrap(*e.rhs, 2);
    case K::Sub: return print_ast(*e.lhs) + " - " + wrap(*e.rhs, 2);
    case K::Mul: return wrap(*e.lhs, 2) + "*" + wrap(*e.rhs, 3);
    case K::Div: return wrap(*e.lhs, 2) + "/" + wrap(*e.rhs, 3);
    case K::Pow: return wrap(*e.lhs, 5) + "^" + std::to_string(e.exponent);
  }
  return "";
}

namespace detail {

template <class F>
RatFunc<F> eval_ast(const ExprAst& e, const std::vector<std::string>& vars) {
  using K = ExprAst::Kind;
  switch (e.kind) {
    case K::Number: {
      if constexpr (FieldTraits<F>::is_real)
        return RatFunc<F>::constant(vars, e.number);
      else
        return RatFunc<F>::constant(vars, Gaussian(e.number));
    }
    case K::ImagUnit: {
      if constexpr (FieldTraits<F>::is_real)
        throw ImaginaryInRealContext();
      else
        return RatFunc<F>::constant(vars, Gaussian::i());
    }
    case K::Var: {
      auto it = std::find(vars.begin(), vars.end(), e.name);
      if (it == vars.end()) throw UndeclaredVariable(e.name);
      return RatFunc<F>::variable(vars, e.name);
    }
    case K::Neg: return -eval_ast<F>(*e.lhs, vars);
    case K::Add: return eval_ast<F>(*e.lhs, vars) + eval_ast<F>(*e.rhs, vars);
    case K::Sub: return eval_ast<F>(*e.lhs, vars) - eval_ast<F>(*e.rhs, vars);
    case K::Mul: return eval_ast<F>(*e.lhs, vars) * eval_ast<F>(*e.rhs, vars);
    case K::Div: return eval_ast<F>(*e.lhs, vars) / eval_ast<F>(*e.rhs, vars);
    case K::Pow: return eval_ast<F>(*e.lhs, vars).pow(e.exponent);
  }
  throw Error("Internal", "unhandled expression node");
}

}  // namespace detail

// Parses an expression into a normalized rational function over the declared
// variables. F selects the coefficient field (Rational or Gaussian).
template <class F>
RatFunc<F> parse_expr(std::string_view text, const std::vector<std::string>& vars) {
  auto ast = parse_ast(text);
  return detail::eval_ast<F>(*ast, vars);
}

}  // namespace hodo
