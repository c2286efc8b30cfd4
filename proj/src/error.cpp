#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::ZeroVolume: return "ZeroVolume";
    case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::NonMaximalCone: return "NonMaximalCone";
    case ErrorKind::WallCountViolation: return "WallCountViolation";
    case ErrorKind::OverlappingCones: return "OverlappingCones";
    case ErrorKind::UnusedRay: return "UnusedRay";
    case ErrorKind::NotQCartier: return "NotQCartier";
    case ErrorKind::NotAmple: return "NotAmple";
    case ErrorKind::NotInPolytope: return "NotInPolytope";
    case ErrorKind::NotQGorenstein: return "NotQGorenstein";
    case ErrorKind::TrivialValuation: return "TrivialValuation";
    case ErrorKind::NotInteriorToMaximalCone: return "NotInteriorToMaximalCone";
    case ErrorKind::NotQFano: return "NotQFano";
    case ErrorKind::InterpolationMismatch: return "InterpolationMismatch";
    case ErrorKind::CertificateViolation: return "CertificateViolation";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

ToricError::ToricError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

}  // namespace toric
