#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbsum/realization.hpp"

namespace orbsum {

/// True iff neither side obtained by cutting the edge caps to a discal
/// orbifold, i.e. neither side's canonical form is the bare identity atom
/// of the edge's type.
bool edge_essential(const RealizationTree& t, std::size_t edge_index);

enum class SplitStrategy { FirstFit, Random };

struct SplitStep {
  enum class Action { Cut, Contract };

  int phase = 1;  // 1 = ordinary, 2 = cyclic, 3 = vertex
  Action action = Action::Cut;
  SphericalType edge_type = SphericalType::ordinary();
  std::string edge_desc;

  std::string to_string() const;
};

struct SplitTrace {
  std::vector<SplitStep> steps;
  CanonicalForm final;
};

/// Simulates the three-phase split-and-cap process on the forest of current
/// components: phase 1 removes ordinary sums (cutting essential ones,
/// contracting trivial ones), then phase 2 cyclic, then phase 3 vertex.
/// Capping is symbolic: a cut side is already the closed orbifold of that
/// side. The strategy picks which eligible edge goes next; the final
/// components and cut labels do not depend on it.
SplitTrace run_split(const RealizationTree& t, SplitStrategy strategy,
                     std::uint64_t seed = 0);

}  // namespace orbsum
