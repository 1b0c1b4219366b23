#include "lpi/textio/ast.hpp"

namespace lpi::text {

Expr Expr::integer(Integer v) {
  Expr e;
  e.kind = Kind::integer;
  e.value = std::move(v);
  return e;
}

Expr Expr::variable(std::string name) {
  Expr e;
  e.kind = Kind::variable;
  e.name = std::move(name);
  return e;
}

Expr Expr::macro(std::string name, Integer arg) {
  Expr e;
  e.kind = Kind::macro;
  e.name = std::move(name);
  e.value = std::move(arg);
  return e;
}

Expr Expr::power(Expr base, std::int64_t exponent) {
  Expr e;
  e.kind = Kind::power;
  e.exponent = exponent;
  e.children.push_back(std::move(base));
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  Expr e;
  e.kind = Kind::product;
  e.children = std::move(factors);
  return e;
}

Expr Expr::sum(std::vector<Expr> terms, std::vector<bool> negated) {
  Expr e;
  e.kind = Kind::sum;
  e.children = std::move(terms);
  e.negated = std::move(negated);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.exponent == b.exponent &&
         a.negated == b.negated && a.children == b.children;
}

namespace {

std::string wrapped(const Expr& e, bool parens) { return parens ? "(" + print(e) + ")" : print(e); }

}  // namespace

std::string print(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::integer: return e.value.str();
    case K::variable: return e.name;
    case K::macro: return e.name + "(" + e.value.str() + ")";
    case K::power: {
      const Expr& base = e.children.front();
      bool parens = base.kind == K::sum || base.kind == K::product || base.kind == K::power;
      return wrapped(base, parens) + "^" + std::to_string(e.exponent);
    }
    case K::product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += "*";
        const Expr& f = e.children[i];
        out += wrapped(f, f.kind == K::sum || f.kind == K::product);
      }
      return out;
    }
    case K::sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i == 0) {
          if (e.negated[i]) out += "-";
        } else {
          out += e.negated[i] ? " - " : " + ";
        }
        out += wrapped(e.children[i], e.children[i].kind == K::sum);
      }
      return out;
    }
  }
  return "";
}

std::size_t node_count(const Expr& e) {
  std::size_t n = 1;
  for (const auto& c : e.children) n += node_count(c);
  return n;
}

bool uses_quotient_letters(const Expr& e) {
  if (e.kind == Expr::Kind::variable && (e.name == "x" || e.name == "y")) return true;
  for (const auto& c : e.children)
    if (uses_quotient_letters(c)) return true;
  return false;
}

bool uses_numbered_variables(const Expr& e) {
  if (e.kind == Expr::Kind::macro) return true;
  if (e.kind == Expr::Kind::variable && e.name.size() > 1) return true;
  for (const auto& c : e.children)
    if (uses_numbered_variables(c)) return true;
  return false;
}

}  // namespace lpi::text
