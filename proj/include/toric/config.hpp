#pragma once

#include <cstddef>

namespace toric {

// Process-wide knobs. Defaults come from TT_THREADS and TT_MAX_LATTICE_POINTS
// (1 thread, 1000000 points) and can be overridden at runtime.

std::size_t worker_threads();
void set_worker_threads(std::size_t n);

std::size_t max_lattice_points();
void set_max_lattice_points(std::size_t n);

}  // namespace toric
