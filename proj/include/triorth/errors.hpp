#ifndef TRIORTH_ERRORS_HPP
#define TRIORTH_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace triorth {

/// Operands have incompatible lengths or shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that must be nonsingular or of full row rank is not.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of the operation (zero code, n out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Precondition of a construction is violated (e.g. extension vector not admissible).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller broke an API contract (e.g. element not in the ground set).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive computation would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace triorth

#endif  // TRIORTH_ERRORS_HPP
