#pragma once

// The complex 0 -> F_0 -> F_1 -> ... -> F_{n+1} -> 0 over A = Q[x]/(f),
// F_p = free module on dx_I, |I| = p, with differential "wedge with df",
// and its cohomology as module presentations.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/exterior.hpp"
#include "singular_forms/grading.hpp"
#include "singular_forms/ideal.hpp"
#include "singular_forms/module.hpp"
#include "singular_forms/presentation.hpp"
#include "singular_forms/syzygy.hpp"

namespace sforms {

struct KoszulOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Hilbert functions are reported in relative degrees 0..degree_prefix.
  long degree_prefix = 8;
};

class KoszulComplex {
 public:
  const RingPtr& ring() const { return ring_; }
  const Polynomial& f() const { return f_; }
  /// Dimension of X = {f = 0}; the ambient space has n + 1 variables.
  int n() const { return n_; }
  const std::vector<IndexSet>& basis(int p) const { return bases_.at(p); }
  const std::vector<int>& shifts(int p) const { return shifts_.at(p); }
  std::size_t rank(int p) const { return (p < 0 || p > n_ + 1) ? 0 : bases_[p].size(); }

  /// alpha^p : F_p -> F_{p+1}, for 0 <= p <= n.
  const PolyMatrix& map(int p) const {
    if (p < 0 || p > n_) throw InputError("alpha^" + std::to_string(p) + " is the zero map");
    return alpha_[p];
  }

  friend KoszulComplex build_koszul(const Polynomial& f, std::uint64_t budget);

 private:
  RingPtr ring_;
  Polynomial f_;
  int n_ = 0;
  std::vector<std::vector<IndexSet>> bases_;
  std::vector<std::vector<int>> shifts_;
  std::vector<PolyMatrix> alpha_;
};

namespace detail {

inline int position_of(const std::vector<IndexSet>& basis, const IndexSet& s) {
  // bases are lexicographic, so binary search works
  auto it = std::lower_bound(basis.begin(), basis.end(), s);
  if (it == basis.end() || *it != s) throw Error("index set not in basis");
  return int(it - basis.begin());
}

}  // namespace detail

/// Builds the complex and checks alpha^{p+1} * alpha^p = 0 modulo f.
inline KoszulComplex build_koszul(const Polynomial& input, std::uint64_t budget = kDefaultBudget) {
  if (input.ring()->nvars() < 2) throw InputError("need >= 2 variables");
  if (input.is_constant()) throw InputError("f must be non-constant");
  Polynomial f = graded_form(input);

  KoszulComplex K;
  K.ring_ = f.ring();
  K.f_ = f;
  const int m = static_cast<int>(K.ring_->nvars());
  K.n_ = m - 1;
  const auto& w = K.ring_->order.weights();
  for (int p = 0; p <= m; ++p) {
    K.bases_.push_back(subsets(m, p));
    std::vector<int> sh;
    for (auto& I : K.bases_.back()) {
      int s = 0;
      for (int i : I) s += w[i];
      sh.push_back(s);
    }
    K.shifts_.push_back(std::move(sh));
  }
  std::vector<Polynomial> partials;
  for (int j = 0; j < m; ++j) partials.push_back(f.derivative(j));

  for (int p = 0; p <= K.n_; ++p) {
    const auto& src = K.bases_[p];
    const auto& dst = K.bases_[p + 1];
    PolyMatrix a(K.ring_, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const IndexSet& I = src[c];
      for (int j = 0; j < m; ++j) {
        if (std::find(I.begin(), I.end(), j) != I.end()) continue;
        int below = int(std::count_if(I.begin(), I.end(), [j](int i) { return i < j; }));
        IndexSet J = I;
        J.insert(std::upper_bound(J.begin(), J.end(), j), j);
        int r = detail::position_of(dst, J);
        a.at(r, c) = below % 2 ? -partials[j] : partials[j];
      }
    }
    K.alpha_.push_back(std::move(a));
  }

  Ideal principal = groebner_basis(Ideal(K.ring_, {f}), budget);
  for (int p = 0; p + 1 <= K.n_; ++p) {
    PolyMatrix prod = K.alpha_[p + 1] * K.alpha_[p];
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c)
        if (!principal.contains(prod.at(r, c), budget))
          throw Error("internal error: Koszul composite is not zero modulo f");
  }
  return K;
}

/// H^p(K) = ker alpha^p / im alpha^{p-1} with graded data.
struct CohomologyModule {
  int p = 0;
  ModulePresentation presentation;
  bool is_zero = true;
  std::size_t min_gen_count = 0;
  std::vector<int> min_gen_degrees;
  std::vector<long> hilbert_prefix;
  std::optional<Integer> total_dimension;
};

namespace detail {

inline std::vector<FreeModuleElement> columns_of(const PolyMatrix& m) {
  std::vector<FreeModuleElement> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto col = m.column(c);
    if (!col.is_zero()) out.push_back(std::move(col));
  }
  return out;
}

/// ker alpha^p as a submodule of F_p (all of F_p when p = n + 1).
inline std::vector<FreeModuleElement> kernel_of_alpha(const KoszulComplex& K, int p, std::uint64_t budget) {
  if (p == K.n() + 1) {
    std::vector<FreeModuleElement> all;
    for (std::size_t i = 0; i < K.rank(p); ++i) all.push_back(FreeModuleElement::basis(K.ring(), K.rank(p), i));
    return all;
  }
  ModuleContext ctx{K.ring(), budget, ModuleOrderKind::TermOverPosition};
  return module_kernel(K.map(p), K.f(), ctx, K.shifts(p + 1));
}

inline std::vector<FreeModuleElement> image_of_alpha(const KoszulComplex& K, int p) {
  if (p < 0 || p > K.n()) return {};
  return columns_of(K.map(p));
}

inline ModulePresentation make_presentation(const KoszulComplex& K, int p, std::vector<FreeModuleElement> sub,
                                            std::vector<FreeModuleElement> den) {
  ModulePresentation m;
  m.ring = K.ring();
  m.f = K.f();
  m.rank = K.rank(p);
  m.shifts = K.shifts(p);
  m.sub = std::move(sub);
  m.den = std::move(den);
  return m;
}

inline void check_degree(const KoszulComplex& K, int p, int lo, int hi) {
  if (p < lo || p > hi)
    throw InputError("degree p = " + std::to_string(p) + " out of range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "] for n = " + std::to_string(K.n()));
}

}  // namespace detail

inline CohomologyModule koszul_cohomology(const KoszulComplex& K, int p, const KoszulOptions& opts = {}) {
  detail::check_degree(K, p, 0, K.n() + 1);
  CohomologyModule H;
  H.p = p;
  H.presentation = detail::make_presentation(K, p, detail::kernel_of_alpha(K, p, opts.budget),
                                             detail::image_of_alpha(K, p - 1));
  H.is_zero = is_zero(H.presentation, opts.budget);
  if (!H.is_zero) {
    auto mg = minimal_generators(H.presentation, opts.budget);
    H.min_gen_count = mg.count;
    H.min_gen_degrees = mg.degrees;
  }
  ZPoly num = hilbert_numerator(H.presentation, opts.budget);
  const auto& w = K.ring()->order.weights();
  for (auto& c : expand_series(num, w, K.ring()->nvars(), opts.degree_prefix)) H.hilbert_prefix.push_back(c.get_si());
  H.total_dimension = total_dimension(num, w, K.ring()->nvars());
  return H;
}

struct VanishingPattern {
  int n = 0;
  /// zero[p] <=> H^p(K) = 0, p = 0..n+1
  std::vector<bool> zero;
  /// torsion of the p-forms is nonzero <=> H^p != 0
  std::vector<bool> tor_nonzero;
  /// cotorsion of the p-forms is nonzero <=> H^{p+1} != 0
  std::vector<bool> cotor_nonzero;
};

inline VanishingPattern vanishing_pattern(const KoszulComplex& K, const KoszulOptions& opts = {}) {
  VanishingPattern v;
  v.n = K.n();
  for (int p = 0; p <= K.n() + 1; ++p) {
    auto S = detail::kernel_of_alpha(K, p, opts.budget);
    auto M = detail::make_presentation(K, p, std::move(S), detail::image_of_alpha(K, p - 1));
    v.zero.push_back(is_zero(M, opts.budget));
  }
  for (int p = 0; p <= K.n() + 1; ++p) {
    v.tor_nonzero.push_back(!v.zero[p]);
    v.cotor_nonzero.push_back(p + 1 <= K.n() + 1 ? !v.zero[p + 1] : false);
  }
  return v;
}

inline VanishingPattern vanishing_pattern(const Polynomial& f, const KoszulOptions& opts = {}) {
  return vanishing_pattern(build_koszul(f, opts.budget), opts);
}

/// The ideal (f, df/dx_1, ..., df/dx_{n+1}).
inline Ideal singular_ideal(const Polynomial& f) {
  std::vector<Polynomial> gens{f};
  for (std::size_t j = 0; j < f.ring()->nvars(); ++j) gens.push_back(f.derivative(j));
  return Ideal(f.ring(), std::move(gens));
}

/// dim_Q Q[x]/(f, df), or nullopt when the singular locus is positive-dimensional.
inline std::optional<long> tjurina_dimension(const Polynomial& input, std::uint64_t budget = kDefaultBudget) {
  if (input.ring()->nvars() < 2) throw InputError("need >= 2 variables");
  if (input.is_constant()) throw InputError("f must be non-constant");
  Polynomial f = graded_form(input);
  return quotient_dimension(groebner_basis(singular_ideal(f), budget), budget);
}

/// Reflexive p-forms as ker alpha^{p+1} inside F_{p+1}.
inline ModulePresentation reflexive_presentation(const KoszulComplex& K, int p, std::uint64_t budget = kDefaultBudget) {
  detail::check_degree(K, p, 0, K.n());
  return detail::make_presentation(K, p + 1, detail::kernel_of_alpha(K, p + 1, budget), {});
}

/// Kaehler p-forms F_p / im alpha^{p-1}.
inline ModulePresentation kahler_presentation(const KoszulComplex& K, int p) {
  detail::check_degree(K, p, 1, K.n() + 1);
  auto full = ModulePresentation::free_module(K.ring(), K.f(), K.rank(p), K.shifts(p));
  full.den = detail::image_of_alpha(K, p - 1);
  return full;
}

/// Torsion-free part of the Kaehler p-forms, realised as im alpha^p ⊆ F_{p+1}.
inline ModulePresentation torsion_free_presentation(const KoszulComplex& K, int p) {
  detail::check_degree(K, p, 0, K.n() + 1);
  if (p == K.n() + 1) return detail::make_presentation(K, p, {}, {});
  return detail::make_presentation(K, p + 1, detail::image_of_alpha(K, p), {});
}

struct TorsionOracleReport {
  int p = 0;
  /// (0 :_{Omega^p} J^infinity), J = (f, df)
  ModulePresentation saturation;
  /// ker alpha^p / im alpha^{p-1} inside the same quotient
  ModulePresentation kernel_image;
  bool saturation_in_kernel = false;
  bool kernel_in_saturation = false;
  bool zero = false;
  std::size_t min_gen_count = 0;

  bool agree() const { return saturation_in_kernel && kernel_in_saturation; }
};

/// Computes the torsion of the Kaehler p-forms by saturation and compares it
/// with the image of ker alpha^p.
inline TorsionOracleReport torsion_oracle(const KoszulComplex& K, int p, std::uint64_t budget = kDefaultBudget) {
  detail::check_degree(K, p, 1, K.n() + 1);
  TorsionOracleReport r;
  r.p = p;
  auto omega = kahler_presentation(K, p);
  auto J = singular_ideal(K.f()).generators();
  r.saturation = module_saturation(omega, J, budget);
  r.kernel_image = detail::make_presentation(K, p, detail::kernel_of_alpha(K, p, budget), omega.den);

  auto ctx = context_for(omega, budget);
  auto with_den = [&](const ModulePresentation& m) {
    auto v = m.sub_vecs();
    auto d = m.den_vecs();
    v.insert(v.end(), d.begin(), d.end());
    return v;
  };
  auto sat = with_den(r.saturation);
  auto ker = with_den(r.kernel_image);
  r.saturation_in_kernel = contained_in(sat, ker, ctx, omega.shifts);
  r.kernel_in_saturation = contained_in(ker, sat, ctx, omega.shifts);
  r.zero = is_zero(r.kernel_image, budget);
  if (!r.zero) r.min_gen_count = minimal_generators(r.kernel_image, budget).count;
  return r;
}

}  // namespace sforms
