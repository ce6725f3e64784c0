#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/groebner.hpp"
#include "singular_forms/polynomial.hpp"

namespace sforms {

/// Element of the free module Q[x]^k, one polynomial per basis vector e_i.
struct FreeModuleElement {
  std::vector<Polynomial> components;

  FreeModuleElement() = default;
  explicit FreeModuleElement(std::vector<Polynomial> comps) : components(std::move(comps)) {}

  static FreeModuleElement zero(const RingPtr& ring, std::size_t rank) {
    return FreeModuleElement(std::vector<Polynomial>(rank, Polynomial(ring)));
  }
  static FreeModuleElement basis(const RingPtr& ring, std::size_t rank, std::size_t i) {
    auto v = zero(ring, rank);
    v.components.at(i) = Polynomial::constant(ring, 1);
    return v;
  }

  std::size_t rank() const { return components.size(); }
  const Polynomial& operator[](std::size_t i) const { return components[i]; }
  Polynomial& operator[](std::size_t i) { return components[i]; }

  bool is_zero() const {
    for (auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) s += ", ";
      s += components[i].to_string();
    }
    return s + ")";
  }

  friend bool operator==(const FreeModuleElement&, const FreeModuleElement&) = default;
};

inline FreeModuleElement operator*(const Polynomial& g, const FreeModuleElement& v) {
  FreeModuleElement r = v;
  for (auto& c : r.components) c = g * c;
  return r;
}

inline FreeModuleElement operator+(const FreeModuleElement& a, const FreeModuleElement& b) {
  if (a.rank() != b.rank()) throw InputError("rank mismatch");
  FreeModuleElement r = a;
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] += b[i];
  return r;
}

/// Dense matrix of polynomials, rows x cols, describing a map Q[x]^cols -> Q[x]^rows.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const RingPtr& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

  FreeModuleElement column(std::size_t c) const {
    FreeModuleElement v = FreeModuleElement::zero(ring_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }

  FreeModuleElement apply(const FreeModuleElement& v) const {
    if (v.rank() != cols_) throw InputError("dimension mismatch in matrix application");
    FreeModuleElement out = FreeModuleElement::zero(ring_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("dimension mismatch in matrix product");
    PolyMatrix m(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        for (std::size_t k = 0; k < a.cols_; ++k)
          if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) m.at(i, j) += a.at(i, k) * b.at(k, j);
    return m;
  }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> entries_;
};

// ---- conversion between the public types and engine vectors ----

inline Vec to_vec(const Polynomial& p, int comp = 0) {
  Vec v;
  v.reserve(p.size());
  for (auto& t : p.terms()) v.push_back({t.mono, comp, t.coef});
  return v;
}

inline Vec to_vec(const FreeModuleElement& e, int offset = 0) {
  Vec v;
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (auto& t : e[i].terms()) v.push_back({t.mono, int(i) + offset, t.coef});
  return v;
}

/// Components [offset, offset+rank) of v as a FreeModuleElement.
inline FreeModuleElement from_vec(const Vec& v, const RingPtr& ring, std::size_t rank, int offset = 0) {
  std::vector<std::vector<Polynomial::Term>> parts(rank);
  for (auto& t : v) {
    int c = t.comp - offset;
    if (c < 0 || static_cast<std::size_t>(c) >= rank) continue;
    parts[c].push_back({t.mono, t.coef});
  }
  FreeModuleElement e;
  for (auto& p : parts) e.components.push_back(Polynomial::from_terms(ring, std::move(p)));
  return e;
}

inline Polynomial poly_from_vec(const Vec& v, const RingPtr& ring) {
  std::vector<Polynomial::Term> terms;
  for (auto& t : v) terms.push_back({t.mono, t.coef});
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Relations f*e_i, i < rank, that turn Q[x]^rank into (Q[x]/(f))^rank.
inline std::vector<Vec> row_relations(const Polynomial& f, std::size_t rank, int offset = 0) {
  std::vector<Vec> out;
  if (f.is_zero()) return out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(to_vec(f, int(i) + offset));
  return out;
}

}  // namespace sforms
