#include "brauerq/error.hpp"

namespace brauerq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::InconclusiveIrreducibility: return "InconclusiveIrreducibility";
    case ErrorKind::IndexPrime: return "IndexPrime";
    case ErrorKind::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorKind::BadArchimedean: return "BadArchimedean";
    case ErrorKind::BadPlace: return "BadPlace";
    case ErrorKind::NonUniformSplitting: return "NonUniformSplitting";
    case ErrorKind::NonIntegralRelativeDegree: return "NonIntegralRelativeDegree";
    case ErrorKind::NotSplittingEquivalent: return "NotSplittingEquivalent";
    case ErrorKind::AmbiguousTransport: return "AmbiguousTransport";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::OddRamification: return "OddRamification";
    case ErrorKind::ComplexRamification: return "ComplexRamification";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::TotallyDefinite: return "TotallyDefinite";
    case ErrorKind::MissingTrustedFlags: return "MissingTrustedFlags";
  }
  return "Unknown";
}

}  // namespace brauerq
