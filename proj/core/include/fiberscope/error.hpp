#pragma once

#include <stdexcept>
#include <string>

namespace fiberscope {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input (bad matrix sizes, invalid monodromy
/// files, non-symplectic matrices where symplectic ones are required, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A word was expected to lie in a subgroup but does not.
class MembershipError : public Error {
 public:
  explicit MembershipError(const std::string& what) : Error(what) {}
};

/// A configured resource cap (index bound, orbit budget, ...) was exceeded
/// in a context where partial results are not meaningful.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

}  // namespace fiberscope
