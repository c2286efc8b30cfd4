#include "toric/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace toric {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    auto v = std::stoull(raw);
    return v == 0 ? fallback : static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

std::atomic<std::size_t>& threads() {
  static std::atomic<std::size_t> value{env_or("TT_THREADS", 1)};
  return value;
}

std::atomic<std::size_t>& lattice_cap() {
  static std::atomic<std::size_t> value{env_or("TT_MAX_LATTICE_POINTS", 1000000)};
  return value;
}

}  // namespace

std::size_t worker_threads() { return threads().load(); }
void set_worker_threads(std::size_t n) { threads().store(n == 0 ? 1 : n); }

std::size_t max_lattice_points() { return lattice_cap().load(); }
void set_max_lattice_points(std::size_t n) { lattice_cap().store(n); }

}  // namespace toric
