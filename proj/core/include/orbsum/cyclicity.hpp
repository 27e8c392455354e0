#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbsum/realization.hpp"

namespace orbsum {

/// The cyclicity graph of a realization for a fixed order p: one node per
/// vertex-free order-p circle of each summand (class C), one node per
/// summand owning at least one vertex-bearing component (class N), and one
/// edge per p-cyclic sum joining the components it glues. The edge order is
/// the order induced by the realization. Always a forest.
struct CyclicityGraph {
  struct Node {
    bool in_n = false;
    std::string label;
  };

  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;
};

/// Ordering of a graph's edges: a permutation of 0..edges-1.
using Ordering = std::vector<int>;

Ordering identity_ordering(std::size_t n);

/// Requires a valid, efficient realization without vertex sums; throws
/// InvalidTree, Inefficient, or HasVertexSums.
CyclicityGraph build_Tp(const RealizationTree& t, ConeOrder p);

/// alpha(k) is 0 when both ends of edge sigma(k) already reach class N
/// through earlier edges alone, else 1. Values per position.
std::vector<int> alpha_values(const CyclicityGraph& g, const Ordering& sigma);

int alpha_sum(const CyclicityGraph& g, const Ordering& sigma);
int alpha_sum(const CyclicityGraph& g);

/// Splits an N-node of valence >= 2 into one valence-1 N-node per incident
/// edge. Edge positions are preserved. Throws NotBlowable.
CyclicityGraph blow_up(const CyclicityGraph& g, int node_index);

/// Number of p-cyclic sums of the realization involving at least one
/// vertex-free singular component. Computed through the cyclicity graph and
/// independently by replaying the sums with component merging; the two
/// routes are compared on every call.
int nu(const RealizationTree& t, ConeOrder p);

/// The replay route alone: walk the sums in realization order, merging
/// singular components across cyclic sums, and count the qualifying
/// p-cyclic ones. Refuses vertex sums.
int nu_by_replay(const RealizationTree& t, ConeOrder p);

/// Plain undirected graph on nodes 0..node_count-1.
struct SimpleGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
};

bool is_tree(const SimpleGraph& g);

/// External nodes: valence <= 1.
std::vector<int> external_nodes(const SimpleGraph& g);

/// beta(k) is 1 when both ends of edge sigma(k) reach an external node
/// through earlier edges alone. For any tree and any ordering the sum is
/// #external - 1. Throws NotATree.
std::vector<int> beta_values(const SimpleGraph& tree, const Ordering& sigma);

int beta_sum(const SimpleGraph& tree, const Ordering& sigma);

struct EulerCheck {
  int chi_start = 0;
  int chi_end = 0;
  int beta_total = 0;
};

/// Rebuilds the beta identity through Euler characteristics: attach a
/// circle through the external nodes, add the tree edges in the given
/// order, and track chi of the component containing the circle. Each step
/// must lose exactly beta(k); the totals satisfy chi_end = 1 - #external.
EulerCheck euler_check(const SimpleGraph& tree, const Ordering& sigma);

}  // namespace orbsum
