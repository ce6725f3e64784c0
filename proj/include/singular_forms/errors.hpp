#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sforms {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad type, inhomogeneous data, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a polynomial expression; carries the 0-based offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A Groebner or syzygy loop ran out of its reduction budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : Error("budget exceeded: more than " + std::to_string(limit) +
              " reduction steps"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Counts reduction steps of one Groebner run and throws when over the limit.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge() {
    if (++used_ > limit_) throw BudgetExceeded(limit_);
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace sforms
