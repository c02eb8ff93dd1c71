#ifndef LZWALK_ERRORS_HPP
#define LZWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lzwalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A closed form is singular for the given parameters (division by a vanishing quantity).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The requested work exceeds a fixed size limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The two roots of the lambda quadratic cannot be told apart and no series fallback applies.
class BranchAmbiguityError : public Error {
 public:
  using Error::Error;
};

/// Pointwise evaluation hit a zero of a generating-function denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity only exists for a normalizable edge state.
class DelocalizedError : public Error {
 public:
  using Error::Error;
};

}  // namespace lzwalk

#endif  // LZWALK_ERRORS_HPP
