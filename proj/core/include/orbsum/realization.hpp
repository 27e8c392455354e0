#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbsum/atom.hpp"
#include "orbsum/spherical.hpp"

namespace orbsum {

using NodeId = int;

/// Where a cyclic or vertex sum meets the singular set of one endpoint.
/// Ordinary sums carry no attachment. `vertex` indexes the component's
/// vertex-triple list and is present exactly for vertex sums.
struct Attachment {
  NodeId node = 0;
  int component = 0;
  std::optional<int> vertex;

  bool operator==(const Attachment&) const = default;
};

struct SumEdge {
  SphericalType type = SphericalType::ordinary();
  NodeId a = 0;
  NodeId b = 0;
  std::optional<Attachment> at_a;
  std::optional<Attachment> at_b;

  bool touches(NodeId n) const { return a == n || b == n; }
  NodeId other(NodeId n) const { return n == a ? b : a; }
  const std::optional<Attachment>& at(NodeId n) const {
    return n == a ? at_a : at_b;
  }
  std::optional<Attachment>& at(NodeId n) { return n == a ? at_a : at_b; }

  bool operator==(const SumEdge&) const = default;
};

struct TreeNode {
  NodeId id = 0;
  std::string label;
  Atom atom;

  bool operator==(const TreeNode&) const = default;
};

/// An ordered realization of a closed 3-orbifold as a tree of summands:
/// nodes carry atoms, edges carry sum types with attachment data, and the
/// edge sequence is the order in which the sums are performed. Node ids are
/// stable across moves; moves return new trees.
class RealizationTree {
 public:
  RealizationTree() = default;

  NodeId add_node(Atom atom, std::string label = "");
  void add_edge(SumEdge e);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const std::vector<SumEdge>& edges() const { return edges_; }
  NodeId root() const { return root_; }
  void set_root(NodeId id) { root_ = id; }

  const TreeNode* find_node(NodeId id) const;
  const TreeNode& node(NodeId id) const;
  const Atom& atom_of(NodeId id) const { return node(id).atom; }

  void set_edges(std::vector<SumEdge> edges) { edges_ = std::move(edges); }
  void remove_node(NodeId id);

  bool operator==(const RealizationTree&) const = default;

 private:
  std::vector<TreeNode> nodes_;
  std::vector<SumEdge> edges_;
  NodeId root_ = 0;
  NodeId next_id_ = 0;
};

struct Violation {
  std::string message;
};

/// Every violated structural invariant: tree shape, growth order of the
/// edge sequence, and attachment compatibility. Empty result means valid.
std::vector<Violation> validate(const RealizationTree& t);

bool is_valid(const RealizationTree& t);

/// Throws Error(InvalidTree) listing the first violation.
void require_valid(const RealizationTree& t);

struct EfficiencyViolation {
  NodeId node = 0;
  std::size_t edge_index = 0;
};

/// Incidences of an identity node with an edge of its own class. Matching
/// is by class; with valid attachments the orders agree automatically.
std::vector<EfficiencyViolation> efficiency_violations(
    const RealizationTree& t);

/// True iff some endpoint of edges()[edge_index] is an identity atom whose
/// type equals the edge's sum type, i.e. the sum can be scheduled first and
/// is then a sum with the identity element.
bool contract_applicable(const RealizationTree& t, std::size_t edge_index);

/// Deletes the identity endpoint of a trivial edge and re-attaches its
/// remaining sums to the surviving endpoint; cyclic and vertex re-attachments
/// target the survivor's singular component involved in the contracted sum
/// (the merged strand). Throws NotTrivial if no endpoint qualifies.
RealizationTree contract_trivial(const RealizationTree& t,
                                 std::size_t edge_index);

/// True iff slide(t, edge_e, moved_end, edge_f) is permitted: e ordinary, or
/// e and f cyclic of the same order attached to the same component at the
/// shared endpoint. Vertex edges never slide.
bool slide_legal(const RealizationTree& t, std::size_t edge_e,
                 NodeId moved_end, std::size_t edge_f);

/// Moves one end of edge e across edge f (both incident to moved_end); the
/// moved end re-attaches on the far side of f. Throws IllegalSlide.
RealizationTree slide(const RealizationTree& t, std::size_t edge_e,
                      NodeId moved_end, std::size_t edge_f);

struct CanonicalForm {
  std::vector<std::string> summands;      // sorted
  std::vector<SphericalType> sum_labels;  // sorted

  /// "summands: a, b; labels: ordinary, cyclic(2)"
  std::string to_string() const;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// The residual tree after contracting trivial edges until none applies.
RealizationTree canonicalize_tree(const RealizationTree& t);

/// Summand-name and sum-label multisets of the residual tree. Independent
/// of the contraction order.
CanonicalForm canonicalize(const RealizationTree& t);

bool equivalent(const RealizationTree& t1, const RealizationTree& t2);

/// Rewrites the edge sequence to the lexicographically least valid build
/// order (by current positions), preserving the relative order of edges.
RealizationTree renormalize_order(const RealizationTree& t);

/// The two sides obtained by deleting edge e: first the side containing
/// e.a, then the side containing e.b. Each side keeps its nodes and edges
/// (order re-normalized); the root moves to the cut endpoint when the
/// original root lands on the other side.
std::pair<RealizationTree, RealizationTree> split_at_edge(
    const RealizationTree& t, std::size_t edge_index);

/// Canonical encoding of the underlying labelled tree, invariant under node
/// renumbering and edge reordering. Used for deduplication in searches.
std::string certificate(const RealizationTree& t);

std::string describe_edge(const RealizationTree& t, std::size_t edge_index);

}  // namespace orbsum
