#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/monomial.hpp"
#include "singular_forms/order.hpp"
#include "singular_forms/rational.hpp"

namespace sforms {

/// Ring context Q[x_1..x_m]: ordered variable names plus the active order.
struct Ring {
  std::vector<std::string> names;
  MonomialOrder order;

  std::size_t nvars() const { return names.size(); }

  int index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : int(it - names.begin());
  }

  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names, MonomialOrder order = {}) {
  if (names.empty()) throw InputError("a ring needs at least one variable");
  if (names.size() > kMaxVars)
    throw InputError("at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InputError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw InputError("duplicate variable name '" + names[i] + "'");
  }
  return std::make_shared<const Ring>(Ring{std::move(names), order});
}

inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return std::make_shared<const Ring>(Ring{ring->names, order});
}

/// Exact polynomial over Q. Terms are kept sorted strictly descending in the
/// ring's monomial order and never carry a zero coefficient.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw InputError("variable index out of range");
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::variable(i), Rational(1)});
    return p;
  }

  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (auto& t : terms) acc[t.mono] += t.coef;
    Polynomial p(std::move(ring));
    for (auto& [m, c] : acc)
      if (c != 0) p.terms_.push_back({m, c});
    p.sort();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& lead() const { return terms_.front(); }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    return 0;
  }

  /// Largest weighted degree of a term; -1 for the zero polynomial.
  long degree() const {
    long d = -1;
    for (auto& t : terms_) d = std::max(d, ring_->order.degree(t.mono));
    return d;
  }

  /// Weighted-homogeneous for the ring weights (zero counts as homogeneous).
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = ring_->order.degree(terms_[0].mono);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return ring_->order.degree(t.mono) == d; });
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (t.mono.e[var] == 0) continue;
      Term d{t.mono, Rational(t.coef * int(t.mono.e[var]))};
      d.mono.e[var] -= 1;
      out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.add(b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.add(b, -1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (auto& s : a.terms_)
      for (auto& t : b.terms_) acc[s.mono * t.mono] += s.coef * t.coef;
    Polynomial p(a.ring_);
    for (auto& [m, c] : acc)
      if (c != 0) p.terms_.push_back({m, c});
    p.sort();
    return p;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& a) {
    if (c == 0) return Polynomial(a.ring_);
    Polynomial p = a;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(ring_, 1), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_ && (a.ring_ == b.ring_ || (a.ring_ && b.ring_ && *a.ring_ == *b.ring_));
  }

  /// Renders in the input grammar, e.g. "x^2-3/2*y*z+1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : terms_) {
      Rational c = t.coef;
      if (c < 0) {
        out += '-';
        c = -c;
      } else if (!first) {
        out += '+';
      }
      first = false;
      std::string mono = monomial_string(t.mono);
      if (mono.empty()) {
        out += c.get_str();
      } else {
        if (c != 1) out += c.get_str() + "*";
        out += mono;
      }
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (m.e[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += ring_->names[i];
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
  }

 private:
  static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && *a.ring_ == *b.ring_))
      throw Error("polynomials from different rings");
  }

  void sort() {
    const auto& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& x, const Term& y) { return ord.compare(x.mono, y.mono) > 0; });
  }

  Polynomial add(const Polynomial& b, int sign) const {
    check_same_ring(*this, b);
    const auto& ord = ring_->order;
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      int c = i == terms_.size()     ? -1
              : j == b.terms_.size() ? 1
                                     : ord.compare(terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        p.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (sign < 0) t.coef = -t.coef;
        p.terms_.push_back(std::move(t));
      } else {
        Rational s = sign > 0 ? Rational(terms_[i].coef + b.terms_[j].coef) : Rational(terms_[i].coef - b.terms_[j].coef);
        if (s != 0) p.terms_.push_back({terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return p;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Re-sorts p's terms under another ring with the same variables.
inline Polynomial change_ring(const Polynomial& p, const RingPtr& ring) {
  if (p.ring()->names != ring->names) throw Error("change_ring: variable lists differ");
  return Polynomial::from_terms(ring, p.terms());
}

}  // namespace sforms
