#ifndef MCL_ERRORS_HPP
#define MCL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcl {

// Ambient dimension disagreement between operands.
struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

// Precondition violation on otherwise well-formed input.
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A built-in cross-validation failed; computation results cannot be trusted.
// The CLI maps this to exit code 3.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace mcl

#endif
