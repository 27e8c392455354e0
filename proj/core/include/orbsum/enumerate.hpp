#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "orbsum/cyclicity.hpp"
#include "orbsum/realization.hpp"

namespace orbsum {

/// All trees with the given node count, one representative per isomorphism
/// class, generated by canonical leaf growth.
std::vector<SimpleGraph> unlabeled_trees(int node_count);

/// All forests with 1..max_edges edges whose nodes carry a C/N colouring,
/// one representative per isomorphism class, with no isolated nodes.
/// Returned as cyclicity graphs with edges in a fixed order.
std::vector<CyclicityGraph> colored_forests(int max_edges);

/// Calls fn for every permutation of 0..n-1 in lexicographic order.
void for_each_permutation(
    std::size_t n, const std::function<void(const Ordering&)>& fn);

/// Calls fn for every edge order of the tree that is a valid realization
/// order, i.e. every prefix of which is connected. The associated root is
/// an endpoint of the first edge.
void for_each_valid_build_order(
    const RealizationTree& t,
    const std::function<void(const std::vector<std::size_t>&)>& fn);

/// The same tree with its edges re-ordered by the given valid build order;
/// the root moves to an endpoint of the first edge.
RealizationTree with_build_order(const RealizationTree& t,
                                 const std::vector<std::size_t>& order);

/// All realizations reachable from t by legal slides and trivial
/// contractions, deduplicated by certificate (t included).
std::vector<RealizationTree> move_equivalents(const RealizationTree& t,
                                              std::size_t max_states = 20000);

struct FamilyResult {
  std::vector<RealizationTree> instances;
  /// Every isomorphism class with at most this many edges is present.
  int complete_through_edges = 0;
};

/// Valid trees over a fixed four-atom alphabet (two order-2 circles, an
/// order-3 circle, and a two-vertex (2,2,3) graph) plus the matching
/// identity atoms, grown exhaustively by edge count up to max_edges and
/// deduplicated by certificate. Generation stops at the instance cap;
/// complete_through_edges reports how far the enumeration is exhaustive.
FamilyResult confluence_family(int max_edges, std::size_t max_instances);

}  // namespace orbsum
