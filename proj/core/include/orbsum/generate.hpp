#pragma once

#include <cstdint>
#include <random>

#include "orbsum/realization.hpp"

namespace orbsum {

struct GenerateOptions {
  int max_edges = 7;
  bool allow_vertex_sums = false;
  /// When >= 2, retry until the realization contains a cyclic sum of this
  /// order (bounded retries).
  int want_cyclic_order = 2;
};

/// A random valid, efficient realization over a small fixed atom pool.
/// Fully determined by the rng state.
RealizationTree random_efficient_realization(std::mt19937_64& rng,
                                             const GenerateOptions& options);

/// Seeded bounded draw used throughout; identical across platforms.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace orbsum
