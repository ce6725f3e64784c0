#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/groebner.hpp"
#include "singular_forms/hilbert.hpp"
#include "singular_forms/module.hpp"
#include "singular_forms/syzygy.hpp"

namespace sforms {

/// The subquotient S/D of (Q[x]/(f))^rank, with D ⊆ S.
///
/// `shifts` are the degrees of the basis vectors; with homogeneous f and
/// generators the module is graded and the graded invariants below apply.
struct ModulePresentation {
  RingPtr ring;
  Polynomial f;
  std::size_t rank = 0;
  std::vector<int> shifts;
  std::vector<FreeModuleElement> sub;
  std::vector<FreeModuleElement> den;

  static ModulePresentation free_module(const RingPtr& ring, const Polynomial& f, std::size_t rank,
                                        std::vector<int> shifts = {}) {
    ModulePresentation m{ring, f, rank, std::move(shifts), {}, {}};
    m.shifts.resize(rank, 0);
    for (std::size_t i = 0; i < rank; ++i) m.sub.push_back(FreeModuleElement::basis(ring, rank, i));
    return m;
  }

  /// S + f*F
  std::vector<Vec> sub_vecs() const { return with_relations(sub); }
  /// D + f*F
  std::vector<Vec> den_vecs() const { return with_relations(den); }

  int base_degree() const { return shifts.empty() ? 0 : *std::min_element(shifts.begin(), shifts.end()); }

 private:
  std::vector<Vec> with_relations(const std::vector<FreeModuleElement>& gens) const {
    std::vector<Vec> out;
    for (auto& g : gens) {
      if (g.rank() != rank) throw InputError("presentation generator has wrong rank");
      Vec v = to_vec(g);
      if (!v.empty()) out.push_back(std::move(v));
    }
    for (auto& r : row_relations(f, rank)) out.push_back(std::move(r));
    return out;
  }
};

inline ModuleContext context_for(const ModulePresentation& m, std::uint64_t budget) {
  return ModuleContext{m.ring, budget, ModuleOrderKind::TermOverPosition};
}

inline GroebnerBasis presentation_basis(const std::vector<Vec>& gens, const ModulePresentation& m,
                                        std::uint64_t budget) {
  GroebnerOptions opts;
  opts.budget = budget;
  opts.shifts = m.shifts;
  return GroebnerBasis::compute(gens, context_for(m, budget).order(), opts);
}

/// D ⊆ S + f*F.
inline bool is_valid(const ModulePresentation& m, std::uint64_t budget = kDefaultBudget) {
  auto gb = presentation_basis(m.sub_vecs(), m, budget);
  for (auto& d : m.den)
    if (!gb.member(to_vec(d), budget)) return false;
  return true;
}

/// S/D = 0, decided by membership of every generator of S in D + f*F.
inline bool is_zero(const ModulePresentation& m, std::uint64_t budget = kDefaultBudget) {
  auto gb = presentation_basis(m.den_vecs(), m, budget);
  for (auto& s : m.sub)
    if (!gb.member(to_vec(s), budget)) return false;
  return true;
}

inline bool is_graded(const ModulePresentation& m) {
  if (!m.f.is_homogeneous()) return false;
  const auto& mo = m.ring->order;
  auto check = [&](const std::vector<FreeModuleElement>& gens) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](const FreeModuleElement& g) { return vec::is_homogeneous(to_vec(g), mo, m.shifts); });
  };
  return check(m.sub) && check(m.den);
}

inline void require_graded(const ModulePresentation& m) {
  if (!is_graded(m)) throw InputError("graded engine requires homogeneous data");
}

struct MinimalGenerators {
  std::size_t count = 0;
  /// Degrees relative to the lowest basis degree, ascending.
  std::vector<int> degrees;
};

namespace detail {

/// Rank over Q of a set of vectors given as sparse term lists.
inline std::size_t rational_rank(const std::vector<Vec>& rows) {
  std::map<std::pair<int, std::array<std::uint16_t, kMaxVars>>, std::size_t> column_of;
  std::vector<std::vector<Rational>> dense;
  for (auto& r : rows)
    for (auto& t : r) column_of.try_emplace({t.comp, t.mono.e}, column_of.size());
  for (auto& r : rows) {
    std::vector<Rational> d(column_of.size(), 0);
    for (auto& t : r) d[column_of[{t.comp, t.mono.e}]] = t.coef;
    dense.push_back(std::move(d));
  }
  std::size_t rank = 0, cols = column_of.size();
  for (std::size_t c = 0; c < cols && rank < dense.size(); ++c) {
    std::size_t piv = rank;
    while (piv < dense.size() && dense[piv][c] == 0) ++piv;
    if (piv == dense.size()) continue;
    std::swap(dense[piv], dense[rank]);
    for (std::size_t r = rank + 1; r < dense.size(); ++r) {
      if (dense[r][c] == 0) continue;
      Rational factor = dense[r][c] / dense[rank][c];
      for (std::size_t k = c; k < cols; ++k) dense[r][k] -= factor * dense[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Size and degrees of a minimal homogeneous generating set: the Q-dimension
/// of M / m M for the irrelevant ideal m.
inline MinimalGenerators minimal_generators(const ModulePresentation& m, std::uint64_t budget = kDefaultBudget) {
  require_graded(m);
  const auto& mo = m.ring->order;
  std::vector<Vec> gens = m.den_vecs();
  for (auto& s : m.sub) {
    Vec v = to_vec(s);
    for (std::size_t x = 0; x < m.ring->nvars(); ++x) gens.push_back(vec::shift(v, Monomial::variable(x)));
  }
  auto gb = presentation_basis(gens, m, budget);

  std::map<long, std::vector<Vec>> by_degree;
  for (auto& s : m.sub) {
    Vec nf = gb.normal_form(to_vec(s), budget);
    if (nf.empty()) continue;
    by_degree[vec::term_degree(nf.front(), mo, m.shifts)].push_back(std::move(nf));
  }
  MinimalGenerators out;
  for (auto& [deg, rows] : by_degree) {
    std::size_t r = detail::rational_rank(rows);
    out.count += r;
    out.degrees.insert(out.degrees.end(), r, static_cast<int>(deg - m.base_degree()));
  }
  return out;
}

namespace detail {

inline ZPoly quotient_numerator(const GroebnerBasis& gb, const ModulePresentation& m) {
  std::vector<std::vector<Monomial>> leads(m.rank);
  for (auto& g : gb.elements()) leads.at(g.front().comp).push_back(g.front().mono);
  ZPoly total;
  const int base = m.base_degree();
  for (std::size_t c = 0; c < m.rank; ++c) {
    ZPoly part = hilbert_numerator(leads[c], m.ring->order.weights());
    total = zpoly::add(total, part, m.shifts[c] - base);
  }
  return total;
}

}  // namespace detail

/// Numerator of the Hilbert series of S/D (degrees relative to the lowest
/// basis degree) over prod (1 - z^{w_i}).
inline ZPoly hilbert_numerator(const ModulePresentation& m, std::uint64_t budget = kDefaultBudget) {
  require_graded(m);
  auto gd = presentation_basis(m.den_vecs(), m, budget);
  auto gs = presentation_basis(m.sub_vecs(), m, budget);
  ZPoly nd = detail::quotient_numerator(gd, m);
  ZPoly ns = detail::quotient_numerator(gs, m);
  return zpoly::add(nd, ns, 0, -1);
}

/// dim_Q of S/D in relative degrees 0..max_degree.
inline std::vector<long> hilbert_prefix(const ModulePresentation& m, long max_degree,
                                        std::uint64_t budget = kDefaultBudget) {
  auto s = expand_series(hilbert_numerator(m, budget), m.ring->order.weights(), m.ring->nvars(), max_degree);
  std::vector<long> out;
  for (auto& c : s) out.push_back(c.get_si());
  return out;
}

/// dim_Q of S/D if finite.
inline std::optional<Integer> total_dimension(const ModulePresentation& m, std::uint64_t budget = kDefaultBudget) {
  return total_dimension(hilbert_numerator(m, budget), m.ring->order.weights(), m.ring->nvars());
}

/// Rank of S/D over Q[x]/(f): the ratio of leading Hilbert coefficients.
inline Rational generic_rank(const ModulePresentation& m, std::uint64_t budget = kDefaultBudget) {
  ZPoly nm = hilbert_numerator(m, budget);
  ZPoly na = m.f.is_zero() ? ZPoly{1} : zpoly::one_minus_power(m.f.degree());
  return ratio_at_one(nm, na);
}

/// The submodule (0 :_M J^infinity) of M = S/D, same ambient data.
inline ModulePresentation module_saturation(const ModulePresentation& m, const std::vector<Polynomial>& J,
                                            std::uint64_t budget = kDefaultBudget) {
  auto ctx = context_for(m, budget);
  auto sat = saturate_vecs(m.den_vecs(), J, m.rank, m.shifts, ctx);
  bool full = m.sub.size() == m.rank;
  for (std::size_t i = 0; full && i < m.rank; ++i) full = m.sub[i] == FreeModuleElement::basis(m.ring, m.rank, i);
  if (!full) sat = intersect_vecs(sat, m.sub_vecs(), m.rank, m.shifts, ctx);
  ModulePresentation out = m;
  out.sub.clear();
  for (auto& v : sat) {
    auto e = from_vec(v, m.ring, m.rank);
    out.sub.push_back(std::move(e));
  }
  return out;
}

/// Mutual containment of the submodules S_a + D_a + fF and S_b + D_b + fF.
inline bool same_submodule(const ModulePresentation& a, const ModulePresentation& b,
                           std::uint64_t budget = kDefaultBudget) {
  auto ga = a.sub_vecs(), gb = b.sub_vecs();
  auto da = a.den_vecs(), db = b.den_vecs();
  ga.insert(ga.end(), da.begin(), da.end());
  gb.insert(gb.end(), db.begin(), db.end());
  auto ctx = context_for(a, budget);
  return contained_in(ga, gb, ctx, a.shifts) && contained_in(gb, ga, ctx, a.shifts);
}

}  // namespace sforms
