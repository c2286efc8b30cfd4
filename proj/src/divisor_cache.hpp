#pragma once

#include "toric/toricvar.hpp"

#include <exception>
#include <mutex>
#include <optional>

namespace toric {

// Thread-safe compute-once slot that also remembers a thrown error.
template <typename T>
class Lazy {
 public:
  template <typename F>
  const T& get(F&& compute) const {
    std::call_once(once_, [&] {
      try {
        value_.emplace(compute());
      } catch (...) {
        error_ = std::current_exception();
      }
    });
    if (error_) std::rethrow_exception(error_);
    return *value_;
  }

 private:
  mutable std::once_flag once_;
  mutable std::optional<T> value_;
  mutable std::exception_ptr error_;
};

struct ToricDivisor::Cache {
  Lazy<FanDiagnostics> diagnostics;
  Lazy<Polytope> polytope;
  Lazy<CartierData> cartier;
  Lazy<AmpleCertificate> ample;
  Lazy<RationalVector> barycenter;
};

const FanDiagnostics& cached_diagnostics(const ToricDivisor& d);
const RationalVector& cached_barycenter(const ToricDivisor& d);

}  // namespace toric
