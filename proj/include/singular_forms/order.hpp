#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/monomial.hpp"

namespace sforms {

enum class OrderKind { Lex, GRevLex };

/// Monomial order. Weights define the grading; graded reverse lex compares the
/// weighted degree first, pure lex ignores them.
class MonomialOrder {
 public:
  MonomialOrder() : weights_(unit_weights()) {}
  explicit MonomialOrder(OrderKind kind) : kind_(kind), weights_(unit_weights()) {}
  MonomialOrder(OrderKind kind, const std::vector<int>& weights)
      : kind_(kind), weights_(unit_weights()) {
    if (weights.size() > kMaxVars) throw InputError("too many weights");
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] < 1) throw InputError("weights must be positive integers");
      weights_[i] = weights[i];
    }
  }

  OrderKind kind() const { return kind_; }
  const Weights& weights() const { return weights_; }
  long degree(const Monomial& m) const { return weighted_degree(m, weights_); }

  /// Returns +1 if a > b, -1 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == OrderKind::GRevLex) {
      long da = degree(a), db = degree(b);
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = kMaxVars; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::GRevLex;
  Weights weights_;
};

enum class ModuleOrderKind { TermOverPosition, PositionOverTerm };

/// Extension of a monomial order to terms x^m e_c of a free module.
///
/// Components may be grouped into blocks; a term in a higher block is larger
/// than any term in a lower block, which makes block orders eliminate the high
/// components. Inside a block the kind decides. e_0 > e_1 > ... on ties.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  explicit ModuleOrder(MonomialOrder mono,
                       ModuleOrderKind kind = ModuleOrderKind::TermOverPosition,
                       std::vector<int> blocks = {})
      : mono_(mono), kind_(kind), blocks_(std::move(blocks)) {}

  const MonomialOrder& monomial_order() const { return mono_; }
  ModuleOrderKind kind() const { return kind_; }

  int block(int comp) const {
    return static_cast<std::size_t>(comp) < blocks_.size() ? blocks_[comp] : 0;
  }

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    int ba = block(ca), bb = block(cb);
    if (ba != bb) return ba > bb ? 1 : -1;
    if (kind_ == ModuleOrderKind::PositionOverTerm && ca != cb)
      return ca < cb ? 1 : -1;
    int c = mono_.compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

 private:
  MonomialOrder mono_;
  ModuleOrderKind kind_ = ModuleOrderKind::TermOverPosition;
  std::vector<int> blocks_;
};

}  // namespace sforms
