#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/polynomial.hpp"

namespace sforms {

namespace detail {

inline bool homogeneous_for(const Polynomial& f, const std::vector<int>& w) {
  long d = -1;
  for (auto& t : f.terms()) {
    long e = 0;
    for (std::size_t i = 0; i < w.size(); ++i) e += long(t.mono.e[i]) * w[i];
    if (d < 0) d = e;
    if (e != d) return false;
  }
  return true;
}

}  // namespace detail

/// Smallest positive integer weights (by sum, then lexicographically, entries
/// at most max_weight) making f weighted-homogeneous. Variables absent from f
/// get weight 1.
inline std::optional<std::vector<int>> find_grading_weights(const Polynomial& f, int max_weight = 12) {
  const std::size_t n = f.ring()->nvars();
  std::vector<int> unit(n, 1);
  if (detail::homogeneous_for(f, unit)) return unit;

  std::vector<std::size_t> present;
  for (std::size_t v = 0; v < n; ++v)
    for (auto& t : f.terms())
      if (t.mono.e[v]) {
        present.push_back(v);
        break;
      }
  const std::size_t k = present.size();
  if (k > 6) return std::nullopt;

  std::vector<int> w(n, 1), part(k, 1);
  // Enumerate compositions of `sum` into k parts in [1, max_weight], lex order.
  auto search = [&](auto&& self, std::size_t idx, int remaining) -> bool {
    if (idx + 1 == k) {
      if (remaining < 1 || remaining > max_weight) return false;
      part[idx] = remaining;
      for (std::size_t i = 0; i < k; ++i) w[present[i]] = part[i];
      return detail::homogeneous_for(f, w);
    }
    for (int v = 1; v <= max_weight && v <= remaining - int(k - idx - 1); ++v) {
      part[idx] = v;
      if (self(self, idx + 1, remaining - v)) return true;
    }
    return false;
  };
  for (int sum = int(k); sum <= int(k) * max_weight; ++sum)
    if (search(search, 0, sum)) return w;
  return std::nullopt;
}

/// Returns f in a ring whose weights make it homogeneous. Declared non-unit
/// weights are taken as given; with default unit weights a grading is
/// searched for.
inline Polynomial graded_form(const Polynomial& f) {
  const auto& ring = f.ring();
  if (f.is_homogeneous()) return f;
  bool declared = false;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (ring->order.weights()[i] != 1) declared = true;
  if (declared) throw InputError("graded engine requires homogeneous data: f is not homogeneous for the given weights");
  auto w = find_grading_weights(f);
  if (!w) throw InputError("graded engine requires homogeneous data: no positive weights make f homogeneous");
  auto r = with_order(ring, MonomialOrder(ring->order.kind(), *w));
  return change_ring(f, r);
}

}  // namespace sforms
