#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polydyn/rational.hpp"

namespace polydyn {

/// Deterministic point #index of the seeded quasi-uniform sample on the
/// complex sup-ball (polydisk) of the given radius: each coordinate is
/// drawn uniformly from the disk |w| <= radius. Depends only on
/// (seed, index, dim, radius), never on scheduling.
std::vector<Complex> sample_polydisk_point(uint64_t seed, uint64_t index, int dim,
                                           double radius);

/// Thread cap from POLYDYN_THREADS (0 or unset = hardware auto).
int thread_count();

/// Runs fn(0..n-1), possibly in parallel under the POLYDYN_THREADS cap.
/// Callers aggregate by index, so results are scheduling-independent.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace polydyn
