#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "singular_forms/errors.hpp"

namespace sforms {

/// Upper bound on the number of ring variables.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector x^e. Unused trailing slots are zero, so every operation can
/// run over the full array without knowing the ring's variable count.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  std::uint16_t operator[](std::size_t i) const { return e[i]; }
  std::uint16_t& operator[](std::size_t i) { return e[i]; }

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.e[i]) + b.e[i];
    if (s > 0xFFFFu) throw Error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

/// a | b
inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

/// b / a, assuming a | b.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

/// Grading weights, one positive integer per variable.
using Weights = std::array<int, kMaxVars>;

inline Weights unit_weights() {
  Weights w;
  w.fill(1);
  return w;
}

inline long weighted_degree(const Monomial& m, const Weights& w) {
  long d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) d += long(m.e[i]) * w[i];
  return d;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

}  // namespace sforms
