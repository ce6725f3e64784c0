#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/rational.hpp"

namespace sforms {

using IndexSet = std::vector<int>;

/// All r-subsets of {0..n-1}, each ascending, in lexicographic order.
inline std::vector<IndexSet> subsets(int n, int r) {
  std::vector<IndexSet> out;
  if (r < 0 || r > n) return out;
  IndexSet cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Dense square-or-rectangular matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Determinant by Bareiss fraction-free elimination.
inline Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Matrix of the r-th exterior power on the basis of r-subsets (lex order):
/// entry (I, J) is the minor of A with rows I and columns J.
inline RationalMatrix exterior_power_matrix(const RationalMatrix& a, int r) {
  if (a.rows() != a.cols()) throw InputError("exterior power needs a square matrix");
  const int n = static_cast<int>(a.rows());
  if (r < 1 || r > n) throw InputError("exterior power degree out of range");
  auto basis = subsets(n, r);
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t I = 0; I < basis.size(); ++I)
    for (std::size_t J = 0; J < basis.size(); ++J) {
      RationalMatrix minor(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) minor(i, j) = a(basis[I][i], basis[J][j]);
      out(I, J) = determinant(std::move(minor));
    }
  return out;
}

}  // namespace sforms
