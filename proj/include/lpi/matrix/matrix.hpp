#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpi/rings/ring.hpp"
#include "lpi/rings/unipoly.hpp"

namespace lpi {

// Square n x n matrix over an exact ring, stored row-major.
template <Ring R>
class Matrix {
 public:
  using Element = ElementOf<R>;

  Matrix(R ring, std::size_t n) : ring_(std::move(ring)), n_(n), entries_(n * n, ring_.zero()) {
    if (n == 0) throw PreconditionError("matrix dimension must be at least 1");
  }
  Matrix(R ring, std::size_t n, std::vector<Element> entries)
      : ring_(std::move(ring)), n_(n), entries_(std::move(entries)) {
    if (n == 0) throw PreconditionError("matrix dimension must be at least 1");
    if (entries_.size() != n * n) throw PreconditionError("matrix needs exactly n*n entries");
    for (const auto& e : entries_)
      if (!ring_.contains(e)) throw RingMismatch("matrix entry outside " + ring_.name());
  }

  static Matrix zero(R ring, std::size_t n) { return Matrix(std::move(ring), n); }
  static Matrix scalar(R ring, std::size_t n, const Element& c) {
    Matrix m(std::move(ring), n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = c;
    return m;
  }
  static Matrix identity(R ring, std::size_t n) {
    auto one = ring.one();
    return scalar(std::move(ring), n, one);
  }
  // Matrix unit e_{ij}, 1-based as in the usual notation.
  static Matrix unit(R ring, std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > n || j > n) throw PreconditionError("matrix unit index out of range");
    Matrix m(std::move(ring), n);
    m.entries_[(i - 1) * n + (j - 1)] = m.ring_.one();
    return m;
  }
  static Matrix from_rows(R ring, const std::vector<std::vector<Integer>>& rows) {
    std::size_t n = rows.size();
    std::vector<Element> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw PreconditionError("matrix literal is not square");
      for (const auto& v : row) e.push_back(ring.from_integer(v));
    }
    return Matrix(std::move(ring), n, std::move(e));
  }

  const R& ring() const { return ring_; }
  std::size_t n() const { return n_; }
  const std::vector<Element>& entries() const { return entries_; }
  const Element& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  Element& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return is_zero_element(e); });
  }
  bool is_identity() const { return *this == identity(ring_, n_); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_compatible(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] = r.entries_[k] + b.entries_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_compatible(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] = r.entries_[k] - b.entries_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (auto& e : r.entries_) e = -e;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_compatible(b);
    const std::size_t n = a.n_;
    Matrix r(a.ring_, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Element& aik = a.entries_[i * n + k];
        if (is_zero_element(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) r.entries_[i * n + j] = r.entries_[i * n + j] + aik * b.entries_[k * n + j];
      }
    return r;
  }
  Matrix scaled(const Element& c) const {
    Matrix r = *this;
    for (auto& e : r.entries_) e = c * e;
    return r;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
  }
  // Row-major lexicographic by entry; only meaningful within one algebra.
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    a.check_compatible(b);
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
  }

  template <Ring To>
  Matrix<To> mapped(const To& to) const {
    std::vector<ElementOf<To>> e;
    e.reserve(entries_.size());
    for (const auto& x : entries_) e.push_back(embed(ring_, to, x));
    return Matrix<To>(to, n_, std::move(e));
  }

  // "[[0,1],[0,0]]"
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) out += (j ? "," : "") + to_string(at(i, j));
      out += "]";
    }
    return out + "]";
  }

 private:
  void check_compatible(const Matrix& b) const {
    if (n_ != b.n_) throw PreconditionError("matrix dimension mismatch");
    require_same_ring(ring_, b.ring_);
  }

  R ring_;
  std::size_t n_;
  std::vector<Element> entries_;
};

template <Ring R>
Matrix<R> mat_power(const Matrix<R>& m, std::uint64_t exponent) {
  Matrix<R> result = Matrix<R>::identity(m.ring(), m.n());
  Matrix<R> base = m;
  while (exponent != 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

template <Ring R>
ElementOf<R> determinant(const Matrix<R>& m) {
  const std::size_t n = m.n();
  const R& ring = m.ring();
  if constexpr (Field<R>) {
    Matrix<R> a = m;
    auto det = ring.one();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && is_zero_element(a.at(pivot, col))) ++pivot;
      if (pivot == n) return ring.zero();
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
        det = -det;
      }
      det = det * a.at(col, col);
      auto inv = ring.inverse(a.at(col, col));
      for (std::size_t r = col + 1; r < n; ++r) {
        auto f = a.at(r, col) * inv;
        if (is_zero_element(f)) continue;
        for (std::size_t j = col; j < n; ++j) a.at(r, j) = a.at(r, j) - f * a.at(col, j);
      }
    }
    return det;
  } else {
    static_assert(std::same_as<R, IntegerRing>, "determinant needs a field or ZZ");
    // Fraction-free Bareiss elimination; every division below is exact.
    Matrix<R> a = m;
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a.at(k, k).is_zero()) {
        std::size_t pivot = k + 1;
        while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return Integer(0);
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          a.at(i, j) = divide_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
      prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
  }
}

namespace detail {

template <Field R>
std::optional<Matrix<R>> gauss_jordan_inverse(const Matrix<R>& m) {
  const std::size_t n = m.n();
  const R& ring = m.ring();
  Matrix<R> a = m;
  Matrix<R> inv = Matrix<R>::identity(ring, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero_element(a.at(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    auto s = ring.inverse(a.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = s * a.at(col, j);
      inv.at(col, j) = s * inv.at(col, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero_element(a.at(r, col))) continue;
      auto f = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) = a.at(r, j) - f * a.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace detail

// Inverse inside the algebra, or nullopt when m is not a unit. Over ZZ a
// unit means determinant +-1, so the inverse stays integral.
template <Ring R>
std::optional<Matrix<R>> mat_inverse(const Matrix<R>& m) {
  if constexpr (Field<R>) {
    return detail::gauss_jordan_inverse(m);
  } else {
    static_assert(std::same_as<R, IntegerRing>, "inverse needs a field or ZZ");
    Integer det = determinant(m);
    if (!(det == Integer(1) || det == Integer(-1))) return std::nullopt;
    auto rational = detail::gauss_jordan_inverse(m.mapped(RationalField{}));
    if (!rational) throw InternalError("unimodular matrix failed to invert over QQ");
    std::vector<Integer> e;
    e.reserve(m.n() * m.n());
    for (const auto& x : rational->entries()) {
      if (!x.is_integer()) throw InternalError("inverse of a unimodular matrix is not integral");
      e.push_back(x.numerator());
    }
    return Matrix<R>(m.ring(), m.n(), std::move(e));
  }
}

template <Ring R>
bool is_unit(const Matrix<R>& m) {
  return mat_inverse(m).has_value();
}

// g(v) = sum g_i v^i with v^0 = I. The coefficient ring of g must embed in
// the ring of v.
template <Ring From, Ring To>
Matrix<To> unipoly_eval(const UniPoly<From>& g, const Matrix<To>& v) {
  const auto& c = g.coefficients();
  Matrix<To> acc = Matrix<To>::zero(v.ring(), v.n());
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * v;
    auto ck = embed(g.ring(), v.ring(), c[k]);
    for (std::size_t i = 0; i < v.n(); ++i) acc.at(i, i) = acc.at(i, i) + ck;
  }
  return acc;
}

}  // namespace lpi
