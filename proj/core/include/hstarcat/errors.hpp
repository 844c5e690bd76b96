#ifndef HSTARCAT_ERRORS_HPP
#define HSTARCAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hstarcat {

/// Malformed or inconsistent input (bad tables, shape mismatches, mixed
/// semirings). CLI exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation not available for this semiring (e.g. enumeration over nat,
/// kernel machinery over a non-positive semiring).
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// Enumeration budget exceeded. CLI exit code 3.
struct budget_error : std::runtime_error {
  budget_error(const std::string& msg, std::size_t partial = 0)
      : std::runtime_error(msg), partial_size(partial) {}
  std::size_t partial_size;
};

/// A stated precondition failed; carries a witness of the violation.
struct precondition_error : std::runtime_error {
  precondition_error(const std::string& msg, std::string w = {})
      : std::runtime_error(msg), witness(std::move(w)) {}
  std::string witness;
};

/// An equation that should hold by theorem failed; signals a bug or a
/// violated hypothesis. CLI exit code 1.
struct check_failure : std::runtime_error {
  check_failure(const std::string& msg, std::string w = {})
      : std::runtime_error(msg), witness(std::move(w)) {}
  std::string witness;
};

}  // namespace hstarcat

#endif
