#ifndef EXEL_ERRORS_HPP_
#define EXEL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace exel {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure specification is referentially broken (duplicate labels,
/// references to unlisted elements, malformed tables).
class MalformedSpec : public Error {
 public:
  using Error::Error;
};

/// A structure specification is well-formed but violates a defining axiom.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

/// An element id does not belong to the structure it was used with.
class UnknownElement : public Error {
 public:
  using Error::Error;
};

/// Operands belong to (or are invalid for) different groupoids.
class MixedGroupoids : public Error {
 public:
  using Error::Error;
};

/// A word has adjacent letters that do not compose in the groupoid.
class NonComposableWord : public Error {
 public:
  using Error::Error;
};

/// A subset passed where a range-closed subset is required.
class NotRClosed : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded its configured budget before saturating.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An input value fails the axioms required by the operation.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Elements from different algebra/action contexts were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace exel

#endif  // EXEL_ERRORS_HPP_
