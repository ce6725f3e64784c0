#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the Groebner engine.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "singular_forms/singular_forms.hpp"

namespace sftest {

using namespace sforms;

inline Polynomial poly(const std::string& vars, const std::string& text) {
  return parse_poly(text, make_ring(split_names(vars)));
}

inline Polynomial poly(const RingPtr& ring, const std::string& text) { return parse_poly(text, ring); }

/// Remainder of classical multivariate division by the list G.
inline Polynomial naive_remainder(Polynomial p, const std::vector<Polynomial>& G) {
  Polynomial rem(p.ring());
  while (!p.is_zero()) {
    const auto lead = p.lead();
    bool divided = false;
    for (auto& g : G) {
      if (g.is_zero() || !divides(g.lead().mono, lead.mono)) continue;
      Rational c = lead.coef / g.lead().coef;
      p -= Polynomial::monomial(p.ring(), quotient(lead.mono, g.lead().mono), c) * g;
      divided = true;
      break;
    }
    if (!divided) {
      rem += Polynomial::monomial(p.ring(), lead.mono, lead.coef);
      p -= Polynomial::monomial(p.ring(), lead.mono, lead.coef);
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  Monomial l = lcm(a.lead().mono, b.lead().mono);
  auto ta = Polynomial::monomial(a.ring(), quotient(l, a.lead().mono), 1 / a.lead().coef);
  auto tb = Polynomial::monomial(a.ring(), quotient(l, b.lead().mono), 1 / b.lead().coef);
  return ta * a - tb * b;
}

/// All monomials in nvars variables of weighted degree d.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, long d, const Weights& w) {
  std::vector<Monomial> out;
  Monomial m;
  auto rec = [&](auto&& self, std::size_t v, long left) -> void {
    if (v == nvars) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (long e = 0; e * w[v] <= left; ++e) {
      m.e[v] = static_cast<std::uint16_t>(e);
      self(self, v + 1, left - e * w[v]);
    }
    m.e[v] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Rank of a list of rational row vectors.
inline std::size_t row_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational fac = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= fac * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Membership of a homogeneous p in the ideal of homogeneous gens, decided in
/// the single degree deg p by linear algebra on {x^a g}.
inline bool macaulay_member(const Polynomial& p, const std::vector<Polynomial>& gens) {
  if (p.is_zero()) return true;
  const auto& ring = p.ring();
  const auto& w = ring->order.weights();
  const long D = p.degree();
  std::map<std::array<std::uint16_t, kMaxVars>, std::size_t> col;
  for (auto& m : monomials_of_degree(ring->nvars(), D, w)) col.emplace(m.e, col.size());
  auto row_of = [&](const Polynomial& q) {
    std::vector<Rational> r(col.size(), 0);
    for (auto& t : q.terms()) r[col.at(t.mono.e)] = t.coef;
    return r;
  };
  std::vector<std::vector<Rational>> rows;
  for (auto& g : gens) {
    if (g.is_zero() || g.degree() > D) continue;
    for (auto& m : monomials_of_degree(ring->nvars(), D - g.degree(), w))
      rows.push_back(row_of(Polynomial::monomial(ring, m) * g));
  }
  std::size_t before = row_rank(rows);
  rows.push_back(row_of(p));
  return row_rank(rows) == before;
}

/// Number of monomials of degree d outside the monomial ideal generated by `leads`.
inline long standard_monomial_count(std::size_t nvars, long d, const Weights& w, const std::vector<Monomial>& leads) {
  long count = 0;
  for (auto& m : monomials_of_degree(nvars, d, w))
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return divides(l, m); })) ++count;
  return count;
}

/// Determinant by cofactor expansion along the first row.
inline Rational laplace_det(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = a(i, j);
    Rational term = a(0, c) * laplace_det(minor);
    det += (c % 2 ? -term : term);
  }
  return det;
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t n, int spread = 5) {
  std::uniform_int_distribution<int> num(-spread, spread), den(1, 3);
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      a(i, j) = q;
    }
  return a;
}

/// dx_j ∧ dx_I rewritten in ascending order: (sign, sorted index set), sign
/// counted by adjacent transpositions. Sign 0 when j is already in I.
inline std::pair<int, IndexSet> wedge_front(int j, const IndexSet& I) {
  if (std::find(I.begin(), I.end(), j) != I.end()) return {0, {}};
  IndexSet s{j};
  s.insert(s.end(), I.begin(), I.end());
  int sign = 1;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b + 1 < s.size() - a; ++b)
      if (s[b] > s[b + 1]) {
        std::swap(s[b], s[b + 1]);
        sign = -sign;
      }
  return {sign, s};
}

/// df ∧ dx_I as a map from sorted index sets to coefficients.
inline std::map<IndexSet, Polynomial> wedge_df(const Polynomial& f, const IndexSet& I) {
  std::map<IndexSet, Polynomial> out;
  for (std::size_t j = 0; j < f.ring()->nvars(); ++j) {
    auto [sign, J] = wedge_front(static_cast<int>(j), I);
    if (!sign) continue;
    Polynomial c = f.derivative(j);
    if (c.is_zero()) continue;
    out.emplace(J, sign > 0 ? c : -c);
  }
  return out;
}

/// Minimal elements of {m : sum m_i a_i = c mod r} found inside the box [0, bound)^n.
inline std::vector<std::vector<long>> brute_minimal(const QuotientType& t, long c, long bound) {
  const std::size_t n = t.n();
  std::vector<std::vector<long>> fiber;
  std::vector<long> m(n, 0);
  for (;;) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += m[i] * t.a[i];
    if (((s - c) % t.r + t.r) % t.r == 0) fiber.push_back(m);
    std::size_t i = 0;
    while (i < n && ++m[i] == bound) m[i++] = 0;
    if (i == n) break;
  }
  auto leq = [](const std::vector<long>& a, const std::vector<long>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::vector<std::vector<long>> out;
  for (auto& x : fiber) {
    bool minimal = std::none_of(fiber.begin(), fiber.end(), [&](const std::vector<long>& y) { return y != x && leq(y, x); });
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Every type 1/r(a) with a sorted, 1 <= r <= r_max, dimension n.
template <class Fn>
void for_each_sorted_type(std::size_t n, long r_max, Fn&& fn) {
  for (long r = 1; r <= r_max; ++r) {
    std::vector<long> a(n, 0);
    auto rec = [&](auto&& self, std::size_t i, long lo) -> void {
      if (i == n) {
        fn(QuotientType{r, a});
        return;
      }
      for (long v = lo; v < r; ++v) {
        a[i] = v;
        self(self, i + 1, v);
      }
    };
    rec(rec, 0, 0);
  }
}

struct Fixture {
  std::string name;
  std::string vars;
  std::string f;
};

inline void PrintTo(const Fixture& f, std::ostream* os) { *os << f.name; }

/// Singular hypersurface fixtures shared by several suites.
inline const std::vector<Fixture>& singular_fixtures() {
  static const std::vector<Fixture> fx = {
      {"quadric_surface", "x,y,z", "x^2+y^2+z^2"},     {"quadric_threefold", "x,y,z,w", "x^2+y^2+z^2+w^2"},
      {"quadric_fourfold", "x,y,z,w,v", "x^2+y^2+z^2+w^2+v^2"}, {"fermat_cubic", "x,y,z", "x^3+y^3+z^3"},
      {"node", "x,y", "x*y"},                           {"whitney_umbrella", "x,y,z", "x^2-y^2*z"},
  };
  return fx;
}

}  // namespace sftest
