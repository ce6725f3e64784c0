#pragma once

// Hilbert series of monomial quotients, HS(z) = N(z) / prod_i (1 - z^{w_i}).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/monomial.hpp"
#include "singular_forms/rational.hpp"

namespace sforms {

/// Integer polynomial in z, coefficient k at index k.
using ZPoly = std::vector<Integer>;

namespace zpoly {

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly add(ZPoly a, const ZPoly& b, long shift = 0, int sign = 1) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
  trim(a);
  return a;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

/// 1 - z^w
inline ZPoly one_minus_power(long w) {
  ZPoly p(w + 1, 0);
  p[0] = 1;
  p[w] -= 1;
  return p;
}

inline Integer value_at_one(const ZPoly& p) {
  Integer s = 0;
  for (auto& c : p) s += c;
  return s;
}

/// Exact quotient by (1 - z^w), or nullopt if it does not divide.
inline std::optional<ZPoly> divide_one_minus_power(ZPoly p, long w) {
  trim(p);
  if (p.empty()) return ZPoly{};
  const std::size_t ws = static_cast<std::size_t>(w);
  if (p.size() <= ws) return std::nullopt;
  // p = (1 - z^w) q  <=>  q_k = p_k + q_{k-w}, and p_k = -q_{k-w} above deg q
  ZPoly q(p.size() - ws, 0);
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = p[k] + (k >= ws ? q[k - ws] : Integer(0));
  for (std::size_t k = q.size(); k < p.size(); ++k) {
    Integer expect = (k >= ws && k - ws < q.size()) ? Integer(-q[k - ws]) : Integer(0);
    if (p[k] != expect) return std::nullopt;
  }
  trim(q);
  return q;
}

}  // namespace zpoly

namespace detail {

inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    long da = weighted_degree(a, unit_weights()), db = weighted_degree(b, unit_weights());
    if (da != db) return da < db;
    return a.e < b.e;
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

inline ZPoly numerator_rec(std::vector<Monomial> gens, const Weights& w) {
  minimalize(gens);
  if (gens.empty()) return ZPoly{1};
  // Pick the variable occurring in the most generators.
  std::size_t best_var = 0, best_count = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    std::size_t c = 0;
    for (auto& g : gens)
      if (g.e[v]) ++c;
    if (c > best_count) {
      best_count = c;
      best_var = v;
    }
  }
  if (best_count <= 1) {
    // Pairwise coprime generators: a complete intersection.
    ZPoly r{1};
    for (auto& g : gens) r = zpoly::mul(r, zpoly::one_minus_power(weighted_degree(g, w)));
    return r;
  }
  unsigned e = 0xFFFFu;
  for (auto& g : gens)
    if (g.e[best_var]) e = std::min<unsigned>(e, g.e[best_var]);
  Monomial pivot = Monomial::variable(best_var, e);
  // N(L) = N(L + (p)) + z^{deg p} N(L : p)
  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  for (auto& g : gens) {
    Monomial q = g;
    q.e[best_var] = static_cast<std::uint16_t>(g.e[best_var] > e ? g.e[best_var] - e : 0);
    colon.push_back(q);
  }
  ZPoly a = numerator_rec(std::move(with_pivot), w);
  ZPoly b = numerator_rec(std::move(colon), w);
  return zpoly::add(a, b, weighted_degree(pivot, w));
}

}  // namespace detail

/// Numerator of the Hilbert series of Q[x]/(gens) over prod (1 - z^{w_i}).
inline ZPoly hilbert_numerator(std::vector<Monomial> gens, const Weights& w) {
  return detail::numerator_rec(std::move(gens), w);
}

/// Expands N(z) / prod_{i < nvars} (1 - z^{w_i}) as a power series up to z^max_degree.
inline std::vector<Integer> expand_series(const ZPoly& numerator, const Weights& w, std::size_t nvars,
                                          long max_degree) {
  std::vector<Integer> s(max_degree + 1, 0);
  for (std::size_t i = 0; i < numerator.size() && long(i) <= max_degree; ++i) s[i] = numerator[i];
  for (std::size_t v = 0; v < nvars; ++v) {
    long wv = w[v];
    for (long k = wv; k <= max_degree; ++k) s[k] += s[k - wv];
  }
  return s;
}

/// Total dimension sum_t HF(t) if finite (the series is a polynomial), else nullopt.
inline std::optional<Integer> total_dimension(const ZPoly& numerator, const Weights& w, std::size_t nvars) {
  ZPoly q = numerator;
  zpoly::trim(q);
  if (q.empty()) return Integer(0);
  for (std::size_t v = 0; v < nvars; ++v) {
    auto d = zpoly::divide_one_minus_power(q, w[v]);
    if (!d) return std::nullopt;
    q = std::move(*d);
  }
  return zpoly::value_at_one(q);
}

/// lim_{z->1} a(z)/b(z) for nonzero b, by cancelling common (1 - z) factors.
inline Rational ratio_at_one(ZPoly a, ZPoly b) {
  zpoly::trim(a);
  zpoly::trim(b);
  if (b.empty()) throw Error("ratio_at_one: zero denominator");
  for (;;) {
    Integer vb = zpoly::value_at_one(b);
    if (vb != 0) {
      Rational r(zpoly::value_at_one(a), vb);
      r.canonicalize();
      return r;
    }
    auto qb = zpoly::divide_one_minus_power(b, 1);
    auto qa = zpoly::divide_one_minus_power(a, 1);
    if (!qb) throw Error("ratio_at_one: inconsistent division");
    if (!qa) throw Error("ratio_at_one: numerator has a pole at z = 1");
    a = std::move(*qa);
    b = std::move(*qb);
    if (a.empty()) return Rational(0);
  }
}

}  // namespace sforms
