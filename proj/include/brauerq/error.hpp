#ifndef BRAUERQ_ERROR_HPP
#define BRAUERQ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauerq {

enum class ErrorKind {
  ParseError,
  InvalidArgument,
  CompositeModulus,
  NotSquarefree,
  Reducible,
  InconclusiveIrreducibility,
  IndexPrime,
  ReciprocityViolation,
  BadArchimedean,
  BadPlace,
  NonUniformSplitting,
  NonIntegralRelativeDegree,
  NotSplittingEquivalent,
  AmbiguousTransport,
  FieldMismatch,
  OddRamification,
  ComplexRamification,
  HypothesisViolation,
  TotallyDefinite,
  MissingTrustedFlags,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (CLI, bindings) can map it to an exit status or exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace brauerq

#endif  // BRAUERQ_ERROR_HPP
