#pragma once

// Buchberger's algorithm for submodules of free modules over Q[x].
//
// Everything (ideals, modules over Q[x]/(f), kernels, intersections) goes
// through this one engine: an ideal is a rank-one module, and quotient rings
// are handled by the caller adding the row relations f*e_i as generators.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/monomial.hpp"
#include "singular_forms/order.hpp"
#include "singular_forms/rational.hpp"

namespace sforms {

struct VecTerm {
  Monomial mono;
  int comp = 0;
  Rational coef;
  friend bool operator==(const VecTerm&, const VecTerm&) = default;
};

/// Sparse element of a free module, terms strictly descending in a ModuleOrder.
using Vec = std::vector<VecTerm>;

namespace vec {

inline void sort(Vec& v, const ModuleOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const VecTerm& a, const VecTerm& b) {
    return ord.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
}

/// Sorts, merges equal terms and drops zeros.
inline void normalize(Vec& v, const ModuleOrder& ord) {
  sort(v, ord);
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

/// a - c * x^m * b
inline Vec sub_mul(const Vec& a, const Rational& c, const Monomial& m, const Vec& b,
                   const ModuleOrder& ord) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial mb;
  bool have_b = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_b) {
      mb = b[j].mono * m;
      have_b = true;
    }
    int cmp = i == a.size()   ? -1
              : j == b.size() ? 1
                              : ord.compare(a[i].mono, a[i].comp, mb, b[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({mb, b[j].comp, -(c * b[j].coef)});
      ++j;
      have_b = false;
    } else {
      Rational s = a[i].coef - c * b[j].coef;
      if (s != 0) out.push_back({mb, b[j].comp, std::move(s)});
      ++i;
      ++j;
      have_b = false;
    }
  }
  return out;
}

inline Vec scale(Vec v, const Rational& c) {
  if (c == 0) return {};
  for (auto& t : v) t.coef *= c;
  return v;
}

inline Vec shift(Vec v, const Monomial& m) {
  for (auto& t : v) t.mono = t.mono * m;
  return v;
}

/// Orders basis elements by descending leading term.
inline void sort_basis(std::vector<Vec>& basis, const ModuleOrder& ord) {
  std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) {
    return ord.compare(a.front().mono, a.front().comp, b.front().mono, b.front().comp) > 0;
  });
}

inline void make_monic(Vec& v) {
  if (v.empty() || v.front().coef == 1) return;
  Rational inv = 1 / v.front().coef;
  for (auto& t : v) t.coef *= inv;
}

/// Weighted degree of a term under per-component degree shifts.
inline long term_degree(const VecTerm& t, const MonomialOrder& mo, const std::vector<int>& shifts) {
  long s = static_cast<std::size_t>(t.comp) < shifts.size() ? shifts[t.comp] : 0;
  return mo.degree(t.mono) + s;
}

inline bool is_homogeneous(const Vec& v, const MonomialOrder& mo, const std::vector<int>& shifts) {
  if (v.empty()) return true;
  long d = term_degree(v.front(), mo, shifts);
  return std::all_of(v.begin(), v.end(),
                     [&](const VecTerm& t) { return term_degree(t, mo, shifts) == d; });
}

}  // namespace vec

/// Options shared by every Groebner-based computation.
struct GroebnerOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Degree shifts of the basis vectors (grading); used only for pair selection.
  std::vector<int> shifts;
};

/// A reduced Groebner basis of a submodule, with normal forms and membership.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  static GroebnerBasis compute(std::vector<Vec> generators, const ModuleOrder& ord,
                               const GroebnerOptions& opts = {}) {
    GroebnerBasis gb;
    gb.ord_ = ord;
    Budget budget(opts.budget);
    Builder b(gb.ord_, opts.shifts, budget);
    for (auto& g : generators) {
      vec::normalize(g, gb.ord_);
      if (g.empty()) continue;
      Vec r = b.reduce(std::move(g));
      if (!r.empty()) b.insert(std::move(r));
    }
    b.run();
    gb.elements_ = b.reduced_basis();
    gb.index();
    return gb;
  }

  const ModuleOrder& order() const { return ord_; }
  const std::vector<Vec>& elements() const { return elements_; }
  bool contains_unit_ideal() const {
    return std::any_of(elements_.begin(), elements_.end(),
                       [](const Vec& g) { return g.front().mono.is_one(); });
  }

  /// Fully reduced remainder; zero exactly for members of the submodule.
  Vec normal_form(Vec v, std::uint64_t budget = kDefaultBudget) const {
    vec::normalize(v, ord_);
    Budget b(budget);
    return reduce_full(std::move(v), elements_, by_comp_, ord_, b);
  }

  bool member(const Vec& v, std::uint64_t budget = kDefaultBudget) const {
    return normal_form(v, budget).empty();
  }

  /// Leading terms (monomial, component) of the basis.
  std::vector<std::pair<Monomial, int>> leading_terms() const {
    std::vector<std::pair<Monomial, int>> out;
    for (auto& g : elements_) out.emplace_back(g.front().mono, g.front().comp);
    return out;
  }

 private:
  using CompIndex = std::vector<std::vector<std::size_t>>;

  static const Vec* find_reducer(const VecTerm& t, const std::vector<Vec>& basis,
                                 const CompIndex& by_comp, const std::vector<bool>* active) {
    if (static_cast<std::size_t>(t.comp) >= by_comp.size()) return nullptr;
    for (std::size_t idx : by_comp[t.comp]) {
      if (active && !(*active)[idx]) continue;
      const Vec& g = basis[idx];
      if (divides(g.front().mono, t.mono)) return &g;
    }
    return nullptr;
  }

  static Vec reduce_full(Vec v, const std::vector<Vec>& basis, const CompIndex& by_comp,
                         const ModuleOrder& ord, Budget& budget,
                         const std::vector<bool>* active = nullptr) {
    Vec rem;
    // Terms moved to rem are final; v shrinks from the front.
    std::size_t start = 0;
    while (start < v.size()) {
      const VecTerm& t = v[start];
      const Vec* g = find_reducer(t, basis, by_comp, active);
      if (!g) {
        rem.push_back(v[start]);
        ++start;
        continue;
      }
      budget.charge();
      Rational c = t.coef / g->front().coef;
      Monomial m = quotient(t.mono, g->front().mono);
      Vec tail(v.begin() + static_cast<std::ptrdiff_t>(start), v.end());
      v = vec::sub_mul(tail, c, m, *g, ord);
      start = 0;
    }
    return rem;
  }

  // Gebauer-Moeller bookkeeping for one Buchberger run.
  class Builder {
   public:
    Builder(const ModuleOrder& ord, const std::vector<int>& shifts, Budget& budget)
        : ord_(ord), shifts_(shifts), budget_(budget) {}

    Vec reduce(Vec v) {
      Vec r = reduce_full(std::move(v), polys_, by_comp_, ord_, budget_, &active_);
      vec::make_monic(r);
      return r;
    }

    void insert(Vec h) {
      const std::size_t hi = polys_.size();
      const Monomial hm = h.front().mono;
      const int hc = h.front().comp;
      polys_.push_back(std::move(h));
      active_.push_back(true);
      if (static_cast<std::size_t>(hc) >= by_comp_.size()) by_comp_.resize(hc + 1);

      // Candidate new pairs (g, h) with g active in the same component.
      std::vector<Pair> cand;
      for (std::size_t gi : by_comp_[hc]) {
        if (!active_[gi]) continue;
        cand.push_back(make_pair(gi, hi));
      }
      // Chain criterion among the new pairs: keep the lcm-minimal ones
      // (one representative for equal lcms).
      std::vector<Pair> kept;
      for (std::size_t a = 0; a < cand.size(); ++a) {
        bool drop = false;
        for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
          if (a == b) continue;
          if (divides(cand[b].lcm, cand[a].lcm)) {
            if (!(cand[b].lcm == cand[a].lcm) || b < a) drop = true;
          }
        }
        if (drop) continue;
        // Product criterion: valid only when both elements live in a single
        // component (then they behave like polynomials).
        if (coprime(polys_[cand[a].i].front().mono, hm) && single_component(cand[a].i) &&
            single_component(hi))
          continue;
        kept.push_back(cand[a]);
      }
      // Prune old pairs made redundant by h.
      std::vector<Pair> next;
      next.reserve(pairs_.size() + kept.size());
      for (auto& p : pairs_) {
        if (p.comp == hc && divides(hm, p.lcm)) {
          Monomial l1 = lcm(polys_[p.i].front().mono, hm);
          Monomial l2 = lcm(polys_[p.j].front().mono, hm);
          if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
        }
        next.push_back(p);
      }
      for (auto& p : kept) next.push_back(p);
      pairs_ = std::move(next);
      // Drop active elements whose lead is a multiple of the new lead.
      for (std::size_t gi : by_comp_[hc]) {
        if (active_[gi] && divides(hm, polys_[gi].front().mono)) active_[gi] = false;
      }
      by_comp_[hc].push_back(hi);
    }

    void run() {
      while (!pairs_.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k)
          if (less(pairs_[k], pairs_[best])) best = k;
        Pair p = pairs_[best];
        pairs_[best] = pairs_.back();
        pairs_.pop_back();
        Vec s = spoly(p);
        if (s.empty()) continue;
        Vec r = reduce(std::move(s));
        if (!r.empty()) insert(std::move(r));
      }
    }

    std::vector<Vec> reduced_basis() {
      std::vector<Vec> g;
      for (std::size_t k = 0; k < polys_.size(); ++k)
        if (active_[k]) g.push_back(polys_[k]);
      // Minimal already (GM removes divisible leads); tail-reduce each element.
      vec::sort_basis(g, ord_);
      CompIndex idx;
      for (std::size_t k = 0; k < g.size(); ++k) {
        int c = g[k].front().comp;
        if (static_cast<std::size_t>(c) >= idx.size()) idx.resize(c + 1);
        idx[c].push_back(k);
      }
      std::vector<Vec> out;
      out.reserve(g.size());
      for (std::size_t k = 0; k < g.size(); ++k) {
        Vec head{g[k].front()};
        Vec tail(g[k].begin() + 1, g[k].end());
        Vec red = reduce_full(std::move(tail), g, idx, ord_, budget_);
        head.insert(head.end(), red.begin(), red.end());
        out.push_back(std::move(head));
      }
      return out;
    }

   private:
    struct Pair {
      std::size_t i, j;
      Monomial lcm;
      int comp;
      long degree;
    };

    bool single_component(std::size_t k) const {
      const Vec& v = polys_[k];
      return std::all_of(v.begin(), v.end(), [&](const VecTerm& t) { return t.comp == v.front().comp; });
    }

    Pair make_pair(std::size_t i, std::size_t j) const {
      Pair p{i, j, lcm(polys_[i].front().mono, polys_[j].front().mono), polys_[i].front().comp, 0};
      p.degree = vec::term_degree({p.lcm, p.comp, 0}, ord_.monomial_order(), shifts_);
      return p;
    }

    bool less(const Pair& a, const Pair& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      int c = ord_.compare(a.lcm, a.comp, b.lcm, b.comp);
      if (c != 0) return c < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    }

    Vec spoly(const Pair& p) const {
      const Vec& a = polys_[p.i];
      const Vec& b = polys_[p.j];
      Vec sa = vec::shift(a, quotient(p.lcm, a.front().mono));
      // Both elements are monic.
      return vec::sub_mul(sa, Rational(1), quotient(p.lcm, b.front().mono), b, ord_);
    }

    const ModuleOrder& ord_;
    const std::vector<int>& shifts_;
    Budget& budget_;
    std::vector<Vec> polys_;
    std::vector<bool> active_;
    CompIndex by_comp_;
    std::vector<Pair> pairs_;
  };

  void index() {
    by_comp_.clear();
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      int c = elements_[k].front().comp;
      if (static_cast<std::size_t>(c) >= by_comp_.size()) by_comp_.resize(c + 1);
      by_comp_[c].push_back(k);
    }
  }

  ModuleOrder ord_;
  std::vector<Vec> elements_;
  CompIndex by_comp_;
};

}  // namespace sforms
