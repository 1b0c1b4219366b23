#include "lpi/textio/parser.hpp"

#include <cctype>
#include <limits>

#include "lpi/errors.hpp"

namespace lpi::text {

namespace {

struct Token {
  enum class Kind { integer, identifier, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (i_ >= s_.size()) return t;
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::integer;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t.text += advance();
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::identifier;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) t.text += advance();
    } else if (std::string("+-*^()").find(c) != std::string::npos) {
      t.kind = Token::Kind::symbol;
      t.text = advance();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
    return t;
  }

 private:
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
  }
  char advance() {
    char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

  Expr parse_all() {
    Expr e = expr();
    if (cur_.kind != Token::Kind::end) fail("unexpected '" + cur_.text + "' after expression");
    return e;
  }

 private:
  bool at_symbol(const char* s) const { return cur_.kind == Token::Kind::symbol && cur_.text == s; }
  void shift() { cur_ = lex_.next(); }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur_.line, cur_.column); }
  void expect(const char* s) {
    if (!at_symbol(s)) fail(std::string("expected '") + s + "'" + found());
    shift();
  }
  std::string found() const { return cur_.kind == Token::Kind::end ? " at end of input" : ", found '" + cur_.text + "'"; }

  Expr expr() {
    std::vector<Expr> terms;
    std::vector<bool> neg;
    bool leading = false;
    bool first_negated = false;
    if (at_symbol("+") || at_symbol("-")) {
      leading = true;
      first_negated = cur_.text == "-";
      shift();
    }
    terms.push_back(term());
    neg.push_back(first_negated);
    while (at_symbol("+") || at_symbol("-")) {
      neg.push_back(cur_.text == "-");
      shift();
      terms.push_back(term());
    }
    if (terms.size() == 1 && !first_negated) {
      (void)leading;
      return std::move(terms.front());
    }
    return Expr::sum(std::move(terms), std::move(neg));
  }

  Expr term() {
    std::vector<Expr> factors{factor()};
    while (at_symbol("*")) {
      shift();
      factors.push_back(factor());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return Expr::product(std::move(factors));
  }

  Expr factor() {
    Expr base = primary();
    if (!at_symbol("^")) return base;
    shift();
    bool negative = false;
    if (at_symbol("-")) {
      negative = true;
      shift();
    }
    if (cur_.kind != Token::Kind::integer) fail("expected an integer exponent" + found());
    Integer v = Integer::parse(cur_.text);
    if (v > Integer(std::numeric_limits<std::int64_t>::max())) fail("exponent overflow: " + cur_.text);
    shift();
    std::int64_t k = *v.to_int64();
    return Expr::power(std::move(base), negative ? -k : k);
  }

  Expr primary() {
    if (cur_.kind == Token::Kind::integer) {
      Expr e = Expr::integer(Integer::parse(cur_.text));
      shift();
      return e;
    }
    if (at_symbol("(")) {
      shift();
      Expr e = expr();
      expect(")");
      return e;
    }
    if (cur_.kind == Token::Kind::identifier) {
      Token id = cur_;
      if (id.text == "S" || id.text == "AL") return macro();
      if (!is_variable(id.text)) fail("unknown variable '" + id.text + "' (expected x1..x8, x or y)");
      shift();
      return Expr::variable(id.text);
    }
    fail("expected a number, variable or '('" + found());
  }

  Expr macro() {
    Token id = cur_;
    shift();
    expect("(");
    if (cur_.kind != Token::Kind::integer) fail("expected an integer argument to " + id.text + found());
    Token arg = cur_;
    Integer n = Integer::parse(arg.text);
    const int limit = id.text == "S" ? kMaxStandardDegree : kMaxAmitsurLevitzki;
    if (n < Integer(1) || n > Integer(limit))
      throw ParseError(id.text + "(n) needs 1 <= n <= " + std::to_string(limit), arg.line, arg.column);
    shift();
    expect(")");
    return Expr::macro(id.text, n);
  }

  static bool is_variable(const std::string& s) {
    if (s == "x" || s == "y") return true;
    return s.size() == 2 && s[0] == 'x' && s[1] >= '1' && s[1] <= '8';
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

Expr parse(const std::string& text) { return Parser(text).parse_all(); }

FreeWord parse_word(const std::string& text) {
  Expr e = parse(text);
  auto l = to_laurent(e, IntegerRing{});
  if (l.size() != 1 || !(l.terms().begin()->second == Integer(1)))
    throw PreconditionError("'" + text + "' is not a single word");
  return l.terms().begin()->first;
}

UniPoly<IntegerRing> parse_integer_polynomial(const std::string& text) {
  IntegerRing zz;
  auto l = to_laurent(parse(text), zz);
  std::vector<Integer> coeffs;
  for (const auto& [w, c] : l.terms()) {
    std::size_t k = 0;
    if (!w.is_identity()) {
      if (w.syllables().size() != 1 || w.syllables()[0].generator != 1 || w.syllables()[0].exponent < 0)
        throw PreconditionError("'" + text + "' is not a polynomial in x1");
      k = static_cast<std::size_t>(w.syllables()[0].exponent);
    }
    if (k > 4096) throw PreconditionError("polynomial degree above 4096");
    if (coeffs.size() <= k) coeffs.resize(k + 1, Integer(0));
    coeffs[k] = c;
  }
  return UniPoly<IntegerRing>(zz, std::move(coeffs));
}

}  // namespace lpi::text
