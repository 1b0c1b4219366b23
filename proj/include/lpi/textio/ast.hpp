#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpi/rings/integer.hpp"

namespace lpi::text {

// Parse tree of the expression language. Parentheses leave no node of
// their own; the printer puts them back where precedence needs them.
struct Expr {
  enum class Kind { integer, variable, sum, product, power, macro };

  Kind kind = Kind::integer;
  Integer value;              // integer literal, or the macro argument
  std::string name;           // variable name, or macro name "S" / "AL"
  std::int64_t exponent = 0;  // power
  std::vector<Expr> children;
  std::vector<bool> negated;  // sum: sign of each child

  static Expr integer(Integer v);
  static Expr variable(std::string name);
  static Expr macro(std::string name, Integer arg);
  static Expr power(Expr base, std::int64_t exponent);
  static Expr product(std::vector<Expr> factors);
  static Expr sum(std::vector<Expr> terms, std::vector<bool> negated);

  friend bool operator==(const Expr& a, const Expr& b);
};

std::string print(const Expr& e);

// Structural summary used by tests and the parse report.
std::size_t node_count(const Expr& e);

// True if x or y (rather than x1..x8) appear.
bool uses_quotient_letters(const Expr& e);
bool uses_numbered_variables(const Expr& e);

}  // namespace lpi::text
