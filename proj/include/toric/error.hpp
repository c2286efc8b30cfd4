#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorKind {
  // polyhedral primitives
  Unbounded,
  Empty,
  ZeroVolume,
  DuplicateAbscissa,
  OutOfDomain,
  ResourceLimit,
  // fan validation
  NonPrimitiveRay,
  NonMaximalCone,
  WallCountViolation,
  OverlappingCones,
  UnusedRay,
  // divisors and valuations
  NotQCartier,
  NotAmple,
  NotInPolytope,
  NotQGorenstein,
  TrivialValuation,
  NotInteriorToMaximalCone,
  NotQFano,
  // self-checks
  InterpolationMismatch,
  CertificateViolation,
  // front end
  Parse,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` drives CLI exit codes.
class ToricError : public std::runtime_error {
 public:
  ToricError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace toric
