#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "singular_forms/exterior.hpp"
#include "singular_forms/ideal.hpp"
#include "singular_forms/koszul.hpp"
#include "singular_forms/presentation.hpp"

namespace sforms {

/// Codimension of Sing(X) in X, X = {f = 0} of dimension n.
struct SingularLocus {
  int n = 0;
  /// n + 2 when X is smooth
  int d = 0;
  bool smooth = false;
  int singular_ideal_dimension = -1;
};

inline SingularLocus singular_locus_codim(const Polynomial& input, std::uint64_t budget = kDefaultBudget) {
  if (input.ring()->nvars() < 2) throw InputError("need >= 2 variables");
  if (input.is_constant()) throw InputError("f must be non-constant");
  Polynomial f = graded_form(input);
  SingularLocus s;
  s.n = static_cast<int>(f.ring()->nvars()) - 1;
  auto J = groebner_basis(singular_ideal(f), budget);
  s.singular_ideal_dimension = ideal_dimension(J, budget);
  s.smooth = s.singular_ideal_dimension < 0;
  s.d = s.smooth ? s.n + 2 : s.n - s.singular_ideal_dimension;
  return s;
}

/// f is reduced iff Sing(X) is a proper closed subset of X.
inline bool is_reduced(const SingularLocus& s) { return s.smooth || s.singular_ideal_dimension < s.n; }

/// The saturation criterion (f) : (df)^infinity = (f), for cross-checking.
inline bool is_reduced_by_saturation(const Polynomial& input, std::uint64_t budget = kDefaultBudget) {
  Polynomial f = graded_form(input);
  const auto& ring = f.ring();
  ModuleContext ctx{ring, budget, ModuleOrderKind::TermOverPosition};
  std::vector<Polynomial> partials;
  for (std::size_t j = 0; j < ring->nvars(); ++j) {
    auto dj = f.derivative(j);
    if (!dj.is_zero()) partials.push_back(dj);
  }
  auto sat = saturate_vecs({to_vec(f)}, partials, 1, {0}, ctx);
  Ideal principal = groebner_basis(Ideal(ring, {f}), budget);
  for (auto& v : sat)
    if (!principal.contains(poly_from_vec(v, ring), budget)) return false;
  return true;
}

/// Hypersurfaces satisfy S2, so normality is regularity in codimension one.
inline bool normality_check(const Polynomial& f, std::uint64_t budget = kDefaultBudget) {
  auto s = singular_locus_codim(f, budget);
  if (!is_reduced(s)) throw InputError("f is not reduced: its singular locus contains a component of X");
  return s.smooth || s.d >= 2;
}

struct CorankProfile {
  int p = 0;
  long at_origin = 0;
  long generic = 0;

  friend bool operator==(const CorankProfile&, const CorankProfile&) = default;
};

/// Embedding dimension of X at the origin.
inline int embedding_dimension(const Polynomial& f) {
  const int m = static_cast<int>(f.ring()->nvars());
  for (int j = 0; j < m; ++j)
    if (f.derivative(j).constant_term() != 0) return m - 1;
  return m;
}

inline CorankProfile corank_profile(const Polynomial& f, int p) {
  const int n = static_cast<int>(f.ring()->nvars()) - 1;
  if (p < 1 || p > n + 1)
    throw InputError("degree p = " + std::to_string(p) + " out of range [1, " + std::to_string(n + 1) + "]");
  return {p, binomial(embedding_dimension(f), p), binomial(n, p)};
}

struct FreenessVerdict {
  /// "reflexive" (double dual), "torsion-free" (Kaehler modulo torsion) or "kahler"
  std::string object;
  int p = 0;
  bool free = false;
  long min_gens = 0;
  long generic_rank = 0;
  std::string rationale;

  friend bool operator==(const FreenessVerdict&, const FreenessVerdict&) = default;
};

struct TheoremCheck {
  std::string theorem;
  /// "consistent", "CONTRADICTION" or "no verdict"
  std::string status;
  std::string detail;

  friend bool operator==(const TheoremCheck&, const TheoremCheck&) = default;
};

struct SingularityReport {
  std::string f;
  std::vector<std::string> vars;
  std::vector<int> weights;
  int n = 0;
  int m = 0;
  int d = 0;
  bool smooth = false;
  bool normal = false;
  int e = 0;
  std::vector<bool> vanishing;
  std::vector<bool> tor_table;
  std::vector<bool> cotor_table;
  std::optional<long> tjurina;
  std::vector<CorankProfile> coranks;
  std::vector<FreenessVerdict> reflexive;
  std::vector<FreenessVerdict> torsion_free;
  std::vector<FreenessVerdict> kahler;
  std::vector<TheoremCheck> verdicts;

  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

namespace detail {

inline long rank_as_long(const Rational& r) {
  if (r.get_den() != 1) throw Error("non-integral generic rank " + r.get_str());
  return r.get_num().get_si();
}

inline FreenessVerdict module_verdict(std::string object, int p, const ModulePresentation& m, long expected_rank,
                                      std::string rationale, std::uint64_t budget) {
  FreenessVerdict v;
  v.object = std::move(object);
  v.p = p;
  v.min_gens = is_zero(m, budget) ? 0 : static_cast<long>(minimal_generators(m, budget).count);
  v.generic_rank = rank_as_long(generic_rank(m, budget));
  if (v.generic_rank != expected_rank)
    throw Error("generic rank " + std::to_string(v.generic_rank) + " differs from expected " +
                std::to_string(expected_rank));
  v.free = v.min_gens == v.generic_rank;
  v.rationale = std::move(rationale);
  return v;
}

}  // namespace detail

inline FreenessVerdict reflexive_verdict(const KoszulComplex& K, int p, std::uint64_t budget = kDefaultBudget) {
  return detail::module_verdict("reflexive", p, reflexive_presentation(K, p, budget), binomial(K.n(), p),
                                "minimal generators of ker alpha^(p+1) vs C(n,p)", budget);
}

inline FreenessVerdict torsion_free_verdict(const KoszulComplex& K, int p, std::uint64_t budget = kDefaultBudget) {
  return detail::module_verdict("torsion-free", p, torsion_free_presentation(K, p), binomial(K.n(), p),
                                "minimal generators of im alpha^p vs C(n,p)", budget);
}

/// Freeness of Kaehler p-forms by constancy of the corank.
inline FreenessVerdict kahler_verdict(const KoszulComplex& K, int p) {
  auto c = corank_profile(K.f(), p);
  FreenessVerdict v;
  v.object = "kahler";
  v.p = p;
  v.min_gens = c.at_origin;
  v.generic_rank = c.generic;
  v.free = c.at_origin == c.generic;
  v.rationale = "corank C(e,p) at the origin vs C(n,p) at smooth points";
  return v;
}

struct AnalyzeOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Empty means 1..n.
  std::vector<int> plist;
};

namespace detail {

inline TheoremCheck check_theorem(std::string name, bool applicable, std::string why_not,
                                  const std::vector<FreenessVerdict>& verdicts, int lo, int hi, bool smooth) {
  TheoremCheck t;
  t.theorem = std::move(name);
  if (smooth) {
    t.status = "consistent";
    t.detail = "smooth point";
    return t;
  }
  if (!applicable) {
    t.status = "no verdict";
    t.detail = std::move(why_not);
    return t;
  }
  std::vector<int> checked, free;
  for (auto& v : verdicts) {
    if (v.p < lo || v.p > hi) continue;
    checked.push_back(v.p);
    if (v.free) free.push_back(v.p);
  }
  auto list = [](const std::vector<int>& ps) {
    std::string s;
    for (int p : ps) s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
  };
  if (!free.empty()) {
    t.status = "CONTRADICTION";
    t.detail = "free at singular point for p = " + list(free);
  } else {
    t.status = "consistent";
    t.detail = checked.empty() ? "no p in range requested" : "not free for p = " + list(checked);
  }
  return t;
}

}  // namespace detail

inline SingularityReport analyze_hypersurface(const Polynomial& input, const AnalyzeOptions& opts = {}) {
  const auto budget = opts.budget;
  auto K = build_koszul(input, budget);
  const Polynomial& f = K.f();
  const int n = K.n();

  SingularityReport r;
  r.f = f.to_string();
  r.vars = f.ring()->names;
  const auto& w = f.ring()->order.weights();
  r.weights.assign(w.begin(), w.begin() + f.ring()->nvars());
  r.n = n;
  r.m = n + 1;

  auto locus = singular_locus_codim(f, budget);
  if (!is_reduced(locus)) throw InputError("f is not reduced: its singular locus contains a component of X");
  r.d = locus.d;
  r.smooth = locus.smooth;
  r.normal = locus.smooth || locus.d >= 2;
  r.e = embedding_dimension(f);

  KoszulOptions kopts;
  kopts.budget = budget;
  auto pattern = vanishing_pattern(K, kopts);
  r.vanishing = pattern.zero;
  r.tor_table = pattern.tor_nonzero;
  r.cotor_table = pattern.cotor_nonzero;
  r.tjurina = tjurina_dimension(f, budget);

  for (int p = 1; p <= n + 1; ++p) r.coranks.push_back(corank_profile(f, p));

  std::vector<int> plist = opts.plist;
  if (plist.empty())
    for (int p = 1; p <= n; ++p) plist.push_back(p);
  for (int p : plist)
    if (p < 0 || p > n + 1)
      throw InputError("degree p = " + std::to_string(p) + " out of range [0, " + std::to_string(n + 1) + "]");
  std::sort(plist.begin(), plist.end());
  plist.erase(std::unique(plist.begin(), plist.end()), plist.end());

  for (int p : plist) {
    if (p <= n) r.reflexive.push_back(reflexive_verdict(K, p, budget));
    if (p >= 1 && p <= n) r.torsion_free.push_back(torsion_free_verdict(K, p, budget));
    if (p >= 1) r.kahler.push_back(kahler_verdict(K, p));
  }

  const bool singular = !r.smooth;
  const bool lz1 = singular && r.normal && r.d >= 3;
  r.verdicts.push_back(detail::check_theorem(
      "generalized Lipman-Zariski for hypersurfaces", lz1,
      r.normal ? "singular locus has codimension 2" : "X is not normal", r.reflexive, 1, n - 1, r.smooth));
  r.verdicts.push_back(detail::check_theorem("weak generalized Lipman-Zariski", singular && r.normal,
                                             "X is not normal", r.torsion_free, 1, n, r.smooth));
  r.verdicts.push_back(detail::check_theorem("very weak generalized Lipman-Zariski", singular, "", r.kahler, 1,
                                             r.e, r.smooth));
  return r;
}

}  // namespace sforms
