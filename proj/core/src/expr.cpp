#include "chebpv/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace chebpv::expr {

namespace {

double (*find_builtin(std::string_view name))(double) {
  if (name == "sin") return static_cast<double (*)(double)>(std::sin);
  if (name == "cos") return static_cast<double (*)(double)>(std::cos);
  if (name == "tan") return static_cast<double (*)(double)>(std::tan);
  if (name == "exp") return static_cast<double (*)(double)>(std::exp);
  if (name == "log") return static_cast<double (*)(double)>(std::log);
  if (name == "sqrt") return static_cast<double (*)(double)>(std::sqrt);
  if (name == "abs") return static_cast<double (*)(double)>(std::fabs);
  if (name == "sinh") return static_cast<double (*)(double)>(std::sinh);
  if (name == "cosh") return static_cast<double (*)(double)>(std::cosh);
  if (name == "atan") return static_cast<double (*)(double)>(std::atan);
  return nullptr;
}

struct Token {
  enum class Type { number, ident, symbol, end };
  Type type = Type::end;
  double value = 0.0;
  std::string text;
  char symbol = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto digit = [&](std::size_t k) {
    return k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]));
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (digit(i)) ++i;
      if (i < text.size() && text[i] == '.') {
        if (!digit(i + 1)) {
          throw ParseError(i + 1, "expected digit after decimal point");
        }
        ++i;
        while (digit(i)) ++i;
      }
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (digit(j)) {  // otherwise the 'e' is not part of the number
          i = j;
          while (digit(i)) ++i;
        }
      }
      double value = 0.0;
      const auto result =
          std::from_chars(text.data() + start, text.data() + i, value);
      if (result.ec != std::errc{}) {
        throw ParseError(start, "malformed number");
      }
      out.push_back({Token::Type::number, value, {}, 0, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_')) {
        ++i;
      }
      out.push_back({Token::Type::ident, 0.0,
                     std::string(text.substr(start, i - start)), 0, start});
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '(' ||
        c == ')') {
      out.push_back({Token::Type::symbol, 0.0, {}, c, i});
      ++i;
      continue;
    }
    throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Type::end, 0.0, {}, 0, text.size()});
  return out;
}

ExprPtr make_number(double v) {
  auto node = std::make_shared<Expr>();
  node->kind = Expr::Kind::number;
  node->value = v;
  return node;
}

ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs) {
  auto node = std::make_shared<Expr>();
  node->kind = Expr::Kind::binary;
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ExprPtr run() {
    ExprPtr root = parse_expr();
    const Token& next = peek();
    if (next.type != Token::Type::end) {
      throw ParseError(next.pos, "unexpected trailing input");
    }
    return root;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& advance() { return tokens_[at_++]; }

  bool match_symbol(char c) {
    if (peek().type == Token::Type::symbol && peek().symbol == c) {
      ++at_;
      return true;
    }
    return false;
  }

  void expect_symbol(char c, const char* what) {
    if (!match_symbol(c)) throw ParseError(peek().pos, what);
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (peek().type == Token::Type::symbol &&
           (peek().symbol == '+' || peek().symbol == '-')) {
      const char op = advance().symbol;
      lhs = make_binary(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (peek().type == Token::Type::symbol &&
           (peek().symbol == '*' || peek().symbol == '/')) {
      const char op = advance().symbol;
      lhs = make_binary(op, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    if (match_symbol('-')) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::negate;
      node->lhs = parse_factor();
      return node;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (match_symbol('^')) {
      return make_binary('^', std::move(base), parse_factor());
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& tok = peek();
    if (tok.type == Token::Type::number) {
      ++at_;
      return make_number(tok.value);
    }
    if (tok.type == Token::Type::ident) {
      ++at_;
      if (tok.text == "x") {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::variable;
        return node;
      }
      if (tok.text == "pi") return make_number(std::numbers::pi);
      if (tok.text == "e") return make_number(std::numbers::e);
      auto* fn = find_builtin(tok.text);
      if (fn == nullptr) {
        throw ParseError(tok.pos, "unknown function or identifier '" +
                                      tok.text + "'");
      }
      expect_symbol('(', "expected '(' after function name");
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::call;
      node->callee = tok.text;
      node->fn = fn;
      node->lhs = parse_expr();
      expect_symbol(')', "expected ')'");
      return node;
    }
    if (match_symbol('(')) {
      ExprPtr inner = parse_expr();
      expect_symbol(')', "expected ')'");
      return inner;
    }
    throw ParseError(tok.pos, "expected a number, 'x', or '('");
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

std::string number_repr(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

double eval(const Expr& e, double x) noexcept {
  switch (e.kind) {
    case Expr::Kind::number:
      return e.value;
    case Expr::Kind::variable:
      return x;
    case Expr::Kind::negate:
      return -eval(*e.lhs, x);
    case Expr::Kind::binary: {
      const double lhs = eval(*e.lhs, x);
      const double rhs = eval(*e.rhs, x);
      switch (e.op) {
        case '+':
          return lhs + rhs;
        case '-':
          return lhs - rhs;
        case '*':
          return lhs * rhs;
        case '/':
          return lhs / rhs;
        case '^':
          return std::pow(lhs, rhs);
        default:
          return std::numeric_limits<double>::quiet_NaN();
      }
    }
    case Expr::Kind::call:
      return e.fn(eval(*e.lhs, x));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return number_repr(e.value);
    case Expr::Kind::variable:
      return "x";
    case Expr::Kind::negate:
      return "(-" + to_string(*e.lhs) + ")";
    case Expr::Kind::binary:
      return "(" + to_string(*e.lhs) + e.op + to_string(*e.rhs) + ")";
    case Expr::Kind::call:
      return e.callee + "(" + to_string(*e.lhs) + ")";
  }
  return {};
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::number:
      return a.value == b.value;
    case Expr::Kind::variable:
      return true;
    case Expr::Kind::negate:
      return structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::binary:
      return a.op == b.op && structurally_equal(*a.lhs, *b.lhs) &&
             structurally_equal(*a.rhs, *b.rhs);
    case Expr::Kind::call:
      return a.callee == b.callee && structurally_equal(*a.lhs, *b.lhs);
  }
  return false;
}

const std::vector<std::string>& builtin_functions() {
  static const std::vector<std::string> names = {
      "abs", "atan", "cos", "cosh", "exp",
      "log", "sin",  "sinh", "sqrt", "tan"};
  return names;
}

}  // namespace chebpv::expr
