#include "orbsum/cyclicity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "orbsum/error.hpp"

namespace orbsum {

namespace {

/// Union-find with a per-component flag ("reaches the target node class").
class FlaggedComponents {
 public:
  explicit FlaggedComponents(const std::vector<bool>& flags)
      : parent_(flags.size()), flag_(flags) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool flagged(int x) { return flag_[find(x)]; }

  /// Returns false if x and y were already in one component.
  bool unite(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return false;
    parent_[rx] = ry;
    flag_[ry] = flag_[ry] || flag_[rx];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<bool> flag_;
};

void check_ordering(std::size_t edge_count, const Ordering& sigma) {
  if (sigma.size() != edge_count) {
    throw std::invalid_argument("ordering size does not match edge count");
  }
  std::vector<bool> seen(edge_count, false);
  for (int k : sigma) {
    if (k < 0 || static_cast<std::size_t>(k) >= edge_count || seen[k]) {
      throw std::invalid_argument("ordering is not a permutation of edges");
    }
    seen[k] = true;
  }
}

}  // namespace

Ordering identity_ordering(std::size_t n) {
  Ordering sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  return sigma;
}

CyclicityGraph build_Tp(const RealizationTree& t, ConeOrder p) {
  require_valid(t);
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    if (t.edges()[i].type.is_vertex()) {
      raise(ErrorCode::HasVertexSums,
            "realization contains a vertex sum: " + describe_edge(t, i));
    }
  }
  if (!efficiency_violations(t).empty()) {
    raise(ErrorCode::Inefficient,
          "cyclicity graph requires an efficient realization");
  }

  CyclicityGraph g;
  std::map<std::pair<NodeId, int>, int> circle_node;  // (summand, component)
  std::map<NodeId, int> n_node;
  for (const TreeNode& n : t.nodes()) {
    bool has_graph_component = false;
    const auto& comps = n.atom.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (comps[c].is_circle() && comps[c].circle_order() == p) {
        circle_node[{n.id, static_cast<int>(c)}] =
            static_cast<int>(g.nodes.size());
        g.nodes.push_back({false, n.label + ".c" + std::to_string(c)});
      }
      if (comps[c].has_vertices()) has_graph_component = true;
    }
    if (has_graph_component) {
      n_node[n.id] = static_cast<int>(g.nodes.size());
      g.nodes.push_back({true, n.label + ".N"});
    }
  }

  auto endpoint_node = [&](const Attachment& att) {
    const SingularComponent& comp =
        t.atom_of(att.node).components()[att.component];
    if (comp.is_circle()) {
      // Validity guarantees the circle has order p.
      return circle_node.at({att.node, att.component});
    }
    return n_node.at(att.node);
  };

  std::vector<std::pair<int, int>> edges;
  for (const SumEdge& e : t.edges()) {
    if (!e.type.is_cyclic() || e.type.order() != p) continue;
    edges.emplace_back(endpoint_node(*e.at_a), endpoint_node(*e.at_b));
  }
  g.edges = std::move(edges);

  FlaggedComponents cycles(std::vector<bool>(g.nodes.size(), false));
  for (const auto& [u, v] : g.edges) {
    if (!cycles.unite(u, v)) {
      throw std::logic_error("cyclicity graph is not a forest");
    }
  }
  return g;
}

std::vector<int> alpha_values(const CyclicityGraph& g, const Ordering& sigma) {
  check_ordering(g.edges.size(), sigma);
  std::vector<bool> flags(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) flags[i] = g.nodes[i].in_n;
  FlaggedComponents comps(flags);
  std::vector<int> values(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const auto& [u, v] = g.edges[sigma[k]];
    values[k] = (comps.flagged(u) && comps.flagged(v)) ? 0 : 1;
    comps.unite(u, v);
  }
  return values;
}

int alpha_sum(const CyclicityGraph& g, const Ordering& sigma) {
  std::vector<int> values = alpha_values(g, sigma);
  return std::accumulate(values.begin(), values.end(), 0);
}

int alpha_sum(const CyclicityGraph& g) {
  return alpha_sum(g, identity_ordering(g.edges.size()));
}

CyclicityGraph blow_up(const CyclicityGraph& g, int node_index) {
  if (node_index < 0 ||
      static_cast<std::size_t>(node_index) >= g.nodes.size()) {
    throw std::out_of_range("blow_up: node index out of range");
  }
  if (!g.nodes[node_index].in_n) {
    raise(ErrorCode::NotBlowable, "only N-nodes can be blown up");
  }
  std::vector<std::size_t> incident;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].first == node_index || g.edges[i].second == node_index)
      incident.push_back(i);
  }
  if (incident.size() < 2) {
    raise(ErrorCode::NotBlowable, "node has valence " +
                                      std::to_string(incident.size()) +
                                      ", need at least 2");
  }
  CyclicityGraph out = g;
  for (std::size_t j = 0; j < incident.size(); ++j) {
    int fresh = static_cast<int>(out.nodes.size());
    out.nodes.push_back(
        {true, g.nodes[node_index].label + "#" + std::to_string(j)});
    auto& e = out.edges[incident[j]];
    if (e.first == node_index) e.first = fresh;
    if (e.second == node_index) e.second = fresh;
  }
  return out;
}

int nu_by_replay(const RealizationTree& t, ConeOrder p) {
  require_valid(t);
  // One replay element per singular component instance of each summand.
  std::map<std::pair<NodeId, int>, int> element;
  std::vector<bool> has_vertices;
  for (const TreeNode& n : t.nodes()) {
    const auto& comps = n.atom.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
      element[{n.id, static_cast<int>(c)}] =
          static_cast<int>(has_vertices.size());
      has_vertices.push_back(comps[c].has_vertices());
    }
  }
  FlaggedComponents merged(has_vertices);
  int count = 0;
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    const SumEdge& e = t.edges()[i];
    if (e.type.is_ordinary()) continue;
    if (e.type.is_vertex()) {
      raise(ErrorCode::HasVertexSums,
            "replay cannot handle vertex sums: " + describe_edge(t, i));
    }
    int ua = element.at({e.at_a->node, e.at_a->component});
    int ub = element.at({e.at_b->node, e.at_b->component});
    if (e.type.order() == p &&
        (!merged.flagged(ua) || !merged.flagged(ub))) {
      ++count;
    }
    // A cyclic sum of two circles yields one circle; a circle glued into a
    // vertex-bearing component yields a vertex-bearing component.
    merged.unite(ua, ub);
  }
  return count;
}

int nu(const RealizationTree& t, ConeOrder p) {
  CyclicityGraph g = build_Tp(t, p);
  int via_graph = alpha_sum(g);
  int via_replay = nu_by_replay(t, p);
  if (via_graph != via_replay) {
    std::ostringstream os;
    os << "nu disagreement: cyclicity graph gives " << via_graph
       << ", replay gives " << via_replay;
    throw std::logic_error(os.str());
  }
  return via_graph;
}

bool is_tree(const SimpleGraph& g) {
  if (g.node_count <= 0) return false;
  if (g.edges.size() + 1 != static_cast<std::size_t>(g.node_count))
    return false;
  FlaggedComponents comps(std::vector<bool>(g.node_count, false));
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= g.node_count || v < 0 || v >= g.node_count || u == v)
      return false;
    if (!comps.unite(u, v)) return false;
  }
  return true;
}

std::vector<int> external_nodes(const SimpleGraph& g) {
  std::vector<int> valence(g.node_count, 0);
  for (const auto& [u, v] : g.edges) {
    ++valence[u];
    ++valence[v];
  }
  std::vector<int> ext;
  for (int i = 0; i < g.node_count; ++i) {
    if (valence[i] <= 1) ext.push_back(i);
  }
  return ext;
}

std::vector<int> beta_values(const SimpleGraph& tree, const Ordering& sigma) {
  if (!is_tree(tree)) {
    raise(ErrorCode::NotATree, "beta is defined for trees only");
  }
  check_ordering(tree.edges.size(), sigma);
  std::vector<bool> flags(tree.node_count, false);
  for (int e : external_nodes(tree)) flags[e] = true;
  FlaggedComponents comps(flags);
  std::vector<int> values(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const auto& [u, v] = tree.edges[sigma[k]];
    values[k] = (comps.flagged(u) && comps.flagged(v)) ? 1 : 0;
    comps.unite(u, v);
  }
  return values;
}

int beta_sum(const SimpleGraph& tree, const Ordering& sigma) {
  std::vector<int> values = beta_values(tree, sigma);
  return std::accumulate(values.begin(), values.end(), 0);
}

namespace {

/// Euler characteristic (V - E) of the component containing marker node 0
/// in a graph given by an adjacency-pair list over arbitrary int labels.
int chi_of_circle_component(
    int start, const std::vector<std::pair<int, int>>& edges) {
  std::set<int> comp{start};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [u, v] : edges) {
      bool cu = comp.count(u) > 0;
      bool cv = comp.count(v) > 0;
      if (cu != cv) {
        comp.insert(u);
        comp.insert(v);
        grew = true;
      }
    }
  }
  int e_in = 0;
  for (const auto& [u, v] : edges) {
    if (comp.count(u)) ++e_in;
  }
  return static_cast<int>(comp.size()) - e_in;
}

}  // namespace

EulerCheck euler_check(const SimpleGraph& tree, const Ordering& sigma) {
  if (!is_tree(tree)) {
    raise(ErrorCode::NotATree, "euler_check is defined for trees only");
  }
  std::vector<int> ext = external_nodes(tree);
  std::vector<int> beta = beta_values(tree, sigma);

  // The circle is a cycle through the external nodes; with one external
  // node it degenerates to a loop. Either way its chi is 0.
  std::vector<std::pair<int, int>> complex_edges;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    complex_edges.emplace_back(ext[i], ext[(i + 1) % ext.size()]);
  }
  EulerCheck result;
  result.chi_start = chi_of_circle_component(ext.front(), complex_edges);
  if (result.chi_start != 0) {
    throw std::logic_error("circle complex must have chi 0");
  }
  int chi_prev = result.chi_start;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    complex_edges.push_back(tree.edges[sigma[k]]);
    int chi_now = chi_of_circle_component(ext.front(), complex_edges);
    if (chi_now != chi_prev - beta[k]) {
      throw std::logic_error("chi drop does not match beta at step " +
                             std::to_string(k));
    }
    chi_prev = chi_now;
  }
  result.chi_end = chi_prev;
  result.beta_total = std::accumulate(beta.begin(), beta.end(), 0);
  if (result.beta_total != result.chi_start - result.chi_end) {
    throw std::logic_error("beta total does not match chi difference");
  }
  return result;
}

}  // namespace orbsum
