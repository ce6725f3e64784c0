#pragma once

// Submodule calculus on top of the Groebner engine: membership, kernels of
// matrices over Q[x]/(f), intersections, quotients (N : g) and saturation.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/groebner.hpp"
#include "singular_forms/module.hpp"
#include "singular_forms/polynomial.hpp"

namespace sforms {

/// Settings for module computations in one ring.
struct ModuleContext {
  RingPtr ring;
  std::uint64_t budget = kDefaultBudget;
  ModuleOrderKind kind = ModuleOrderKind::TermOverPosition;

  ModuleOrder order(std::vector<int> blocks = {}) const {
    return ModuleOrder(ring->order, kind, std::move(blocks));
  }
};

namespace detail {

inline std::vector<int> padded(const std::vector<int>& shifts, std::size_t rank) {
  std::vector<int> s = shifts;
  s.resize(rank, 0);
  return s;
}

}  // namespace detail

/// Generators of the submodule of Q[x]^q of coefficient vectors c with
/// sum_j c_j * columns[j] in span(relations). Columns and relations live in
/// components [0, target_rank).
inline std::vector<Vec> kernel_vecs(const std::vector<Vec>& columns, std::size_t target_rank,
                                    const std::vector<Vec>& relations, const std::vector<int>& target_shifts,
                                    const ModuleContext& ctx) {
  const std::size_t q = columns.size();
  const int t = static_cast<int>(target_rank);
  const auto& mo = ctx.ring->order;
  std::vector<int> shifts = detail::padded(target_shifts, target_rank);

  // Grading of the source basis: degree of its column, so that homogeneous
  // input yields homogeneous syzygies. Zero columns borrow a common degree.
  std::vector<int> src(q, 0);
  std::vector<bool> known(q, false);
  int fallback = 0;
  bool have_fallback = false;
  for (std::size_t j = 0; j < q; ++j) {
    if (columns[j].empty()) continue;
    Vec c = columns[j];
    vec::normalize(c, ctx.order());
    src[j] = static_cast<int>(vec::term_degree(c.front(), mo, shifts));
    known[j] = true;
    if (!have_fallback) {
      fallback = src[j];
      have_fallback = true;
    }
  }
  for (std::size_t j = 0; j < q; ++j)
    if (!known[j]) src[j] = fallback;

  std::vector<int> blocks(target_rank + q, 0);
  for (std::size_t i = 0; i < target_rank; ++i) blocks[i] = 1;
  std::vector<int> all_shifts = shifts;
  all_shifts.insert(all_shifts.end(), src.begin(), src.end());

  std::vector<Vec> gens;
  gens.reserve(q + relations.size());
  for (std::size_t j = 0; j < q; ++j) {
    Vec g = columns[j];
    g.push_back({Monomial{}, t + int(j), Rational(1)});
    gens.push_back(std::move(g));
  }
  for (auto& r : relations) gens.push_back(r);

  GroebnerOptions opts;
  opts.budget = ctx.budget;
  opts.shifts = all_shifts;
  auto gb = GroebnerBasis::compute(std::move(gens), ctx.order(blocks), opts);

  std::vector<Vec> out;
  for (auto& g : gb.elements()) {
    if (g.front().comp < t) continue;  // still has a target part
    Vec k = g;
    for (auto& term : k) term.comp -= t;
    vec::normalize(k, ctx.order());
    out.push_back(std::move(k));
  }
  return out;
}

/// U ∩ V inside Q[x]^rank.
inline std::vector<Vec> intersect_vecs(const std::vector<Vec>& U, const std::vector<Vec>& V, std::size_t rank,
                                       const std::vector<int>& shifts, const ModuleContext& ctx) {
  const int k = static_cast<int>(rank);
  std::vector<int> blocks(2 * rank, 0);
  for (std::size_t i = 0; i < rank; ++i) blocks[i] = 1;
  std::vector<int> s = detail::padded(shifts, rank);
  std::vector<int> all = s;
  all.insert(all.end(), s.begin(), s.end());

  std::vector<Vec> gens;
  for (auto& u : U) {
    Vec g = u;
    for (auto& term : u) g.push_back({term.mono, term.comp + k, term.coef});
    gens.push_back(std::move(g));
  }
  for (auto& v : V) gens.push_back(v);

  GroebnerOptions opts;
  opts.budget = ctx.budget;
  opts.shifts = all;
  auto gb = GroebnerBasis::compute(std::move(gens), ctx.order(blocks), opts);
  std::vector<Vec> out;
  for (auto& g : gb.elements()) {
    if (g.front().comp < k) continue;
    Vec w = g;
    for (auto& term : w) term.comp -= k;
    vec::normalize(w, ctx.order());
    out.push_back(std::move(w));
  }
  return out;
}

/// (N : g) = { v in Q[x]^rank : g*v in N }.
inline std::vector<Vec> colon_vecs(const std::vector<Vec>& N, const Polynomial& g, std::size_t rank,
                                   const std::vector<int>& shifts, const ModuleContext& ctx) {
  std::vector<Vec> columns;
  for (std::size_t i = 0; i < rank; ++i) columns.push_back(to_vec(g, int(i)));
  return kernel_vecs(columns, rank, N, shifts, ctx);
}

/// True when every element of `sub` lies in the span of `gens`.
inline bool contained_in(const std::vector<Vec>& sub, const std::vector<Vec>& gens, const ModuleContext& ctx,
                         const std::vector<int>& shifts = {}) {
  GroebnerOptions opts;
  opts.budget = ctx.budget;
  opts.shifts = shifts;
  auto gb = GroebnerBasis::compute(gens, ctx.order(), opts);
  for (auto& v : sub)
    if (!gb.member(v, ctx.budget)) return false;
  return true;
}

/// (N : J^infinity) = intersection over generators g of J of (N : g^infinity).
inline std::vector<Vec> saturate_vecs(const std::vector<Vec>& N, const std::vector<Polynomial>& J, std::size_t rank,
                                      const std::vector<int>& shifts, const ModuleContext& ctx) {
  std::vector<Vec> result;
  bool have = false;
  for (auto& g : J) {
    if (g.is_zero()) continue;
    std::vector<Vec> cur = N;
    for (;;) {
      auto next = colon_vecs(cur, g, rank, shifts, ctx);
      // N ⊆ (N : g) always; stop once the reverse inclusion holds.
      if (contained_in(next, cur, ctx, shifts)) break;
      cur = std::move(next);
    }
    if (!have) {
      result = std::move(cur);
      have = true;
    } else {
      result = intersect_vecs(result, cur, rank, shifts, ctx);
    }
  }
  if (!have) {
    // J = 0: every element is killed by a power of J only if it is zero.
    return N;
  }
  return result;
}

// ---- public surface ----

/// Groebner structure of a submodule of (Q[x]/(f))^rank: the generators plus
/// the row relations f*e_i.
class ModuleGroebner {
 public:
  ModuleGroebner(RingPtr ring, std::size_t rank, GroebnerBasis gb)
      : ring_(std::move(ring)), rank_(rank), gb_(std::move(gb)) {}

  std::size_t rank() const { return rank_; }
  const GroebnerBasis& basis() const { return gb_; }

  bool membership(const FreeModuleElement& v, std::uint64_t budget = kDefaultBudget) const {
    if (v.rank() != rank_) throw InputError("rank mismatch in membership test");
    return gb_.member(to_vec(v), budget);
  }

  FreeModuleElement normal_form(const FreeModuleElement& v, std::uint64_t budget = kDefaultBudget) const {
    if (v.rank() != rank_) throw InputError("rank mismatch in normal form");
    return from_vec(gb_.normal_form(to_vec(v), budget), ring_, rank_);
  }

 private:
  RingPtr ring_;
  std::size_t rank_;
  GroebnerBasis gb_;
};

inline ModuleGroebner module_groebner(const std::vector<FreeModuleElement>& gens, const Polynomial& f,
                                      std::size_t rank, const ModuleContext& ctx) {
  std::vector<Vec> all;
  for (auto& g : gens) {
    if (g.rank() != rank) throw InputError("rank mismatch among module generators");
    all.push_back(to_vec(g));
  }
  for (auto& r : row_relations(f, rank)) all.push_back(std::move(r));
  GroebnerOptions opts;
  opts.budget = ctx.budget;
  return ModuleGroebner(ctx.ring, rank, GroebnerBasis::compute(std::move(all), ctx.order(), opts));
}

/// Generators of the kernel of the map A^cols -> A^rows given by `map`,
/// A = Q[x]/(f).
inline std::vector<FreeModuleElement> module_kernel(const PolyMatrix& map, const Polynomial& f,
                                                    const ModuleContext& ctx,
                                                    const std::vector<int>& target_shifts = {}) {
  std::vector<Vec> columns;
  for (std::size_t c = 0; c < map.cols(); ++c) columns.push_back(to_vec(map.column(c)));
  auto ker = kernel_vecs(columns, map.rows(), row_relations(f, map.rows()), target_shifts, ctx);
  std::vector<FreeModuleElement> out;
  for (auto& k : ker) out.push_back(from_vec(k, ctx.ring, map.cols()));
  return out;
}

}  // namespace sforms
