#pragma once

// Cyclic quotient singularities C^n / mu_r of type 1/r(a_1, ..., a_n).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/exterior.hpp"

namespace sforms {

struct QuotientType {
  long r = 1;
  std::vector<long> a;

  std::size_t n() const { return a.size(); }
  /// "1/r(a1,...,an)"
  std::string to_string() const {
    std::string s = "1/" + std::to_string(r) + "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
  }
  friend bool operator==(const QuotientType&, const QuotientType&) = default;
  friend auto operator<=>(const QuotientType&, const QuotientType&) = default;
};

/// Raised for types with a quasi-reflection: k acts non-trivially on exactly
/// one coordinate, `index`.
class NotSmallError : public InputError {
 public:
  NotSmallError(long k, std::size_t index, const std::string& type)
      : InputError("type " + type + " is not small: k=" + std::to_string(k) + " acts as a quasi-reflection (only a" +
                   std::to_string(index + 1) + " nonzero)"),
        k_(k),
        index_(index) {}
  long k() const { return k_; }
  std::size_t index() const { return index_; }

 private:
  long k_;
  std::size_t index_;
};

inline long mod(long x, long r) {
  long m = x % r;
  return m < 0 ? m + r : m;
}

inline bool is_faithful(const QuotientType& t) {
  long g = t.r;
  for (long x : t.a) g = std::gcd(g, x);
  return g == 1;
}

/// First k in 1..r-1 acting as a quasi-reflection, or 0.
inline long quasi_reflection(const QuotientType& t, std::size_t* index = nullptr) {
  const std::size_t n = t.n();
  for (long k = 1; k < t.r; ++k) {
    std::size_t zeros = 0, moved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mod(k * t.a[i], t.r) == 0)
        ++zeros;
      else
        moved = i;
    }
    if (zeros + 1 == n) {
      if (index) *index = moved;
      return k;
    }
  }
  return 0;
}

inline bool is_small(const QuotientType& t) { return quasi_reflection(t) == 0; }

struct ValidatedType {
  QuotientType type;
  /// gcd divided out of r and the weights (1 if already faithful)
  long reduced_by = 1;
};

inline ValidatedType validate_type(long r, std::vector<long> a) {
  if (r < 1) throw InputError("r must be positive");
  if (a.empty()) throw InputError("a type needs at least one weight");
  for (auto& x : a) x = mod(x, r);
  long g = r;
  for (long x : a) g = std::gcd(g, x);
  ValidatedType v;
  v.reduced_by = g;
  v.type.r = r / g;
  for (long x : a) v.type.a.push_back(x / g);
  std::size_t index = 0;
  if (long k = quasi_reflection(v.type, &index)) throw NotSmallError(k, index, v.type.to_string());
  return v;
}

inline long weighted_residue(const QuotientType& t, const std::vector<long>& m) {
  long s = 0;
  for (std::size_t i = 0; i < t.n(); ++i) s = mod(s + m[i] * t.a[i], t.r);
  return s;
}

/// Minimal elements (coordinatewise order) of {m in N^n : sum m_i a_i = c mod r}.
///
/// m is minimal iff no nonzero d <= m has sum d_i a_i = 0; that set is closed
/// under going down, so a depth-first search with a running count of
/// sub-vectors per residue prunes everything else.
inline std::vector<std::vector<long>> fiber_minimal_elements(const QuotientType& t, long c) {
  const long r = t.r;
  const std::size_t n = t.n();
  c = mod(c, r);
  std::vector<std::vector<long>> out;
  std::vector<long> m(n, 0);
  // counts[i][rho] = number of d <= (m_0..m_{i-1}) with residue rho, capped at 2
  std::vector<std::vector<unsigned char>> counts(n + 1, std::vector<unsigned char>(r, 0));
  counts[0][0] = 1;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (weighted_residue(t, m) == c) out.push_back(m);
      return;
    }
    auto& next = counts[i + 1];
    const auto& prev = counts[i];
    std::fill(next.begin(), next.end(), 0);
    for (long v = 0;; ++v) {
      long shift = mod(v * t.a[i], r);
      for (long rho = 0; rho < r; ++rho) {
        if (!prev[rho]) continue;
        auto& cell = next[mod(rho + shift, r)];
        cell = static_cast<unsigned char>(std::min(2, cell + prev[rho]));
      }
      if (next[0] > 1) break;
      m[i] = v;
      self(self, i + 1);
      // deeper levels overwrite counts[i + 2..]; counts[i + 1] is ours
    }
    m[i] = 0;
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Whether the fiber over c has a least element, without enumerating it.
/// The coordinatewise infimum mu has mu_i = least v with
/// gcd(r, a_j : j != i) | (c - v a_i); a least element exists iff mu is in the fiber.
inline bool fiber_has_least_element(const QuotientType& t, long c) {
  const long r = t.r;
  const std::size_t n = t.n();
  std::vector<long> mu(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long g = r;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) g = std::gcd(g, t.a[j]);
    long v = 0;
    while (mod(c - v * t.a[i], g) != 0) {
      if (++v > g) return false;
    }
    mu[i] = v;
  }
  return weighted_residue(t, mu) == mod(c, r);
}

/// Fiber target of the form dx_I: invariance of x^m dx_I needs
/// sum m_i a_i = -sum_{i in I} a_i.
inline long form_target(const QuotientType& t, const IndexSet& I) {
  long s = 0;
  for (int i : I) s += t.a[i];
  return mod(-s, t.r);
}

struct InvariantForm {
  IndexSet I;
  std::vector<long> m;
  friend bool operator==(const InvariantForm&, const InvariantForm&) = default;
};

/// Minimal generators x^m dx_I of the invariant p-forms.
inline std::vector<InvariantForm> invariant_form_generators(const QuotientType& t, int p) {
  const int n = static_cast<int>(t.n());
  if (p < 0 || p > n) throw InputError("degree p = " + std::to_string(p) + " out of range [0, " + std::to_string(n) + "]");
  std::vector<InvariantForm> out;
  for (auto& I : subsets(n, p))
    for (auto& m : fiber_minimal_elements(t, form_target(t, I))) out.push_back({I, m});
  return out;
}

struct QuotientFreeness {
  int p = 0;
  bool free = false;
  long generator_count = 0;
  long rank = 0;
};

/// Reflexive p-forms are free iff the minimal generator count equals C(n,p).
inline QuotientFreeness reflexive_freeness(const QuotientType& t, int p) {
  QuotientFreeness q;
  q.p = p;
  q.generator_count = static_cast<long>(invariant_form_generators(t, p).size());
  q.rank = binomial(static_cast<long>(t.n()), p);
  q.free = q.generator_count == q.rank;
  return q;
}

/// Same verdict as reflexive_freeness, via least elements only: each fiber is
/// non-empty, so the count is C(n,p) iff every fiber has a least element.
inline bool reflexive_free_fast(const QuotientType& t, int p) {
  const int n = static_cast<int>(t.n());
  if (p < 0 || p > n) throw InputError("degree p = " + std::to_string(p) + " out of range [0, " + std::to_string(n) + "]");
  for (auto& I : subsets(n, p))
    if (!fiber_has_least_element(t, form_target(t, I))) return false;
  return true;
}

/// Reid-Tai: every k in 1..r-1 has age sum_i (k a_i mod r) > r.
inline bool reid_tai_terminal(const QuotientType& t) {
  for (long k = 1; k < t.r; ++k) {
    long age = 0;
    for (long x : t.a) age += mod(k * x, t.r);
    if (age <= t.r) return false;
  }
  return true;
}

inline bool gorenstein_check(const QuotientType& t) {
  long s = 0;
  for (long x : t.a) s += x;
  return mod(s, t.r) == 0;
}

/// No non-identity element fixes a coordinate axis pointwise.
inline bool is_isolated(const QuotientType& t) {
  for (long k = 1; k < t.r; ++k)
    for (long x : t.a)
      if (mod(k * x, t.r) == 0) return false;
  return true;
}

/// Lexicographically least sorted unit rescaling of the weights.
inline QuotientType canonical_type(const QuotientType& t) {
  QuotientType best;
  bool have = false;
  for (long u = 1; u <= std::max<long>(t.r - 1, 1); ++u) {
    if (std::gcd(u, t.r) != 1) continue;
    QuotientType c{t.r, {}};
    for (long x : t.a) c.a.push_back(mod(u * x, t.r));
    std::sort(c.a.begin(), c.a.end());
    if (!have || c.a < best.a) {
      best = std::move(c);
      have = true;
    }
  }
  return best;
}

struct ClassifiedType {
  QuotientType type;
  bool terminal = false;
  bool isolated = false;
  bool gorenstein = false;
  long generator_count = 0;
};

namespace detail {

template <class Fn>
void for_each_sorted_tuple(std::size_t n, long r, Fn&& fn) {
  std::vector<long> a(n, 0);
  auto rec = [&](auto&& self, std::size_t i, long lo) -> void {
    if (i == n) {
      fn(a);
      return;
    }
    for (long v = lo; v < r; ++v) {
      a[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

/// All canonical small faithful types in dimension n with r <= r_max whose
/// reflexive (n-1)-forms are free.
inline std::vector<ClassifiedType> classify_dimension(int n, long r_max) {
  if (n < 2) throw InputError("dimension must be at least 2");
  if (r_max < 1) throw InputError("r_max must be at least 1");
  std::vector<ClassifiedType> out;
  for (long r = 1; r <= r_max; ++r) {
    detail::for_each_sorted_tuple(static_cast<std::size_t>(n), r, [&](const std::vector<long>& a) {
      QuotientType t{r, a};
      if (!reflexive_free_fast(t, n - 1)) return;
      if (!is_faithful(t) || !is_small(t)) return;
      if (!(canonical_type(t) == t)) return;
      ClassifiedType c;
      c.type = t;
      c.terminal = reid_tai_terminal(t);
      c.isolated = is_isolated(t);
      c.gorenstein = gorenstein_check(t);
      c.generator_count = reflexive_freeness(t, n - 1).generator_count;
      out.push_back(std::move(c));
    });
  }
  return out;
}

/// For each i, whether {a_j : j != i} generates Z/r.
inline std::vector<bool> complement_generates(const QuotientType& t) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < t.n(); ++i) {
    long g = t.r;
    for (std::size_t j = 0; j < t.n(); ++j)
      if (j != i) g = std::gcd(g, t.a[j]);
    out.push_back(g == 1);
  }
  return out;
}

}  // namespace sforms
