#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/groebner.hpp"
#include "singular_forms/hilbert.hpp"
#include "singular_forms/module.hpp"
#include "singular_forms/polynomial.hpp"

namespace sforms {

/// Ideal of Q[x] given by generators, optionally carrying its reduced
/// Groebner basis for one monomial order.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  bool has_basis() const { return static_cast<bool>(basis_); }
  const GroebnerBasis& basis() const {
    if (!basis_) throw Error("ideal has no cached Groebner basis");
    return *basis_;
  }
  const MonomialOrder& basis_order() const { return basis().order().monomial_order(); }

  /// Reduced basis as polynomials sorted under the basis order.
  std::vector<Polynomial> basis_polynomials() const {
    RingPtr r = with_order(ring_, basis_order());
    std::vector<Polynomial> out;
    for (auto& g : basis().elements()) out.push_back(poly_from_vec(g, r));
    return out;
  }

  bool is_unit() const { return basis().contains_unit_ideal(); }

  Polynomial normal_form(const Polynomial& p, std::uint64_t budget = kDefaultBudget) const {
    return poly_from_vec(basis().normal_form(to_vec(p), budget), ring_);
  }

  bool contains(const Polynomial& p, std::uint64_t budget = kDefaultBudget) const {
    return basis().member(to_vec(p), budget);
  }

  Ideal with_basis(GroebnerBasis gb) const {
    Ideal i = *this;
    i.basis_ = std::make_shared<const GroebnerBasis>(std::move(gb));
    return i;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<const GroebnerBasis> basis_;
};

/// Computes the reduced Groebner basis of `ideal` for `order` and caches it.
inline Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                            std::uint64_t budget = kDefaultBudget) {
  std::vector<Vec> gens;
  for (auto& g : ideal.generators())
    if (!g.is_zero()) gens.push_back(to_vec(g));
  GroebnerOptions opts;
  opts.budget = budget;
  return ideal.with_basis(GroebnerBasis::compute(std::move(gens), ModuleOrder(order), opts));
}

inline Ideal groebner_basis(const Ideal& ideal, std::uint64_t budget = kDefaultBudget) {
  return groebner_basis(ideal, ideal.ring()->order, budget);
}

namespace detail {

inline const Ideal& ensure_basis(const Ideal& ideal, std::optional<Ideal>& storage, std::uint64_t budget) {
  if (ideal.has_basis()) return ideal;
  storage = groebner_basis(ideal, budget);
  return *storage;
}

inline std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  for (auto& g : gb.elements()) out.push_back(g.front().mono);
  return out;
}

}  // namespace detail

/// Krull dimension of Q[x]/I by the maximal independent set of variables
/// modulo the leading-term ideal; -1 for the unit ideal.
inline int ideal_dimension(const Ideal& ideal, std::uint64_t budget = kDefaultBudget) {
  std::optional<Ideal> storage;
  const Ideal& I = detail::ensure_basis(ideal, storage, budget);
  if (I.is_unit()) return -1;
  const std::size_t n = I.ring()->nvars();
  auto leads = detail::leading_monomials(I.basis());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      for (std::size_t v = 0; v < n; ++v)
        if (m.e[v] && !(mask & (1u << v))) return false;
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

/// dim_Q Q[x]/I when finite, else nullopt. Counts standard monomials in the
/// box cut out by the pure powers among the leading terms.
inline std::optional<long> quotient_dimension(const Ideal& ideal, std::uint64_t budget = kDefaultBudget) {
  std::optional<Ideal> storage;
  const Ideal& I = detail::ensure_basis(ideal, storage, budget);
  if (I.is_unit()) return 0;
  const std::size_t n = I.ring()->nvars();
  auto leads = detail::leading_monomials(I.basis());
  std::vector<unsigned> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto& m : leads) {
      bool pure = true;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && m.e[u]) pure = false;
      if (pure && m.e[v] && (bound[v] == 0 || m.e[v] < bound[v])) bound[v] = m.e[v];
    }
    if (bound[v] == 0) return std::nullopt;
  }
  long count = 0;
  Monomial m;
  // odometer over the box
  for (;;) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return divides(l, m); });
    if (standard) ++count;
    std::size_t v = 0;
    while (v < n) {
      if (++m.e[v] < bound[v]) break;
      m.e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

/// Hilbert series numerator of Q[x]/I for the ring weights.
inline ZPoly hilbert_numerator(const Ideal& ideal, std::uint64_t budget = kDefaultBudget) {
  std::optional<Ideal> storage;
  const Ideal& I = detail::ensure_basis(ideal, storage, budget);
  return hilbert_numerator(detail::leading_monomials(I.basis()), I.ring()->order.weights());
}

}  // namespace sforms
