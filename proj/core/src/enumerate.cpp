#include "orbsum/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace orbsum {

namespace {

std::vector<std::vector<int>> adjacency(const SimpleGraph& g) {
  std::vector<std::vector<int>> adj(g.node_count);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::string encode_rooted(const std::vector<std::vector<int>>& adj, int node,
                          int parent, const std::vector<char>& color) {
  std::vector<std::string> parts;
  for (int next : adj[node]) {
    if (next != parent) parts.push_back(encode_rooted(adj, next, node, color));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  out += color.empty() ? 'x' : color[node];
  out += '(';
  for (const std::string& p : parts) out += p;
  out += ')';
  return out;
}

/// Isomorphism code of a (possibly coloured) graph: minimum rooted code
/// over all roots, per connected component, components sorted.
std::string iso_code(const SimpleGraph& g, const std::vector<char>& color) {
  auto adj = adjacency(g);
  std::vector<int> comp(g.node_count, -1);
  int comps = 0;
  for (int start = 0; start < g.node_count; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = comps;
    while (!stack.empty()) {
      int n = stack.back();
      stack.pop_back();
      for (int m : adj[n]) {
        if (comp[m] < 0) {
          comp[m] = comps;
          stack.push_back(m);
        }
      }
    }
    ++comps;
  }
  std::vector<std::string> codes(comps);
  for (int n = 0; n < g.node_count; ++n) {
    std::string enc = encode_rooted(adj, n, -1, color);
    if (codes[comp[n]].empty() || enc < codes[comp[n]]) codes[comp[n]] = enc;
  }
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const std::string& c : codes) out += c + "|";
  return out;
}

}  // namespace

std::vector<SimpleGraph> unlabeled_trees(int node_count) {
  std::vector<SimpleGraph> current;
  current.push_back(SimpleGraph{1, {}});
  for (int n = 2; n <= node_count; ++n) {
    std::vector<SimpleGraph> next;
    std::set<std::string> seen;
    for (const SimpleGraph& t : current) {
      for (int attach = 0; attach < t.node_count; ++attach) {
        SimpleGraph grown = t;
        grown.edges.emplace_back(attach, grown.node_count);
        grown.node_count += 1;
        std::string code = iso_code(grown, {});
        if (seen.insert(code).second) next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<CyclicityGraph> colored_forests(int max_edges) {
  // Coloured trees by edge count, one per isomorphism class.
  std::vector<std::vector<std::pair<SimpleGraph, std::vector<char>>>> by_edges(
      max_edges + 1);
  for (int e = 1; e <= max_edges; ++e) {
    std::set<std::string> seen;
    for (const SimpleGraph& shape : unlabeled_trees(e + 1)) {
      std::vector<char> color(shape.node_count, 'c');
      for (int mask = 0; mask < (1 << shape.node_count); ++mask) {
        for (int i = 0; i < shape.node_count; ++i) {
          color[i] = (mask >> i) & 1 ? 'n' : 'c';
        }
        std::string code = iso_code(shape, color);
        if (seen.insert(code).second) by_edges[e].emplace_back(shape, color);
      }
    }
  }

  // Forests: multisets of coloured trees with total edge count <= max_edges.
  std::vector<CyclicityGraph> forests;
  struct Part {
    int edges;
    std::size_t index;
  };
  std::vector<Part> chosen;

  auto emit = [&]() {
    CyclicityGraph g;
    for (const Part& part : chosen) {
      const auto& [shape, color] = by_edges[part.edges][part.index];
      int offset = static_cast<int>(g.nodes.size());
      for (int i = 0; i < shape.node_count; ++i) {
        g.nodes.push_back({color[i] == 'n',
                           "t" + std::to_string(offset + i)});
      }
      for (const auto& [u, v] : shape.edges) {
        g.edges.emplace_back(offset + u, offset + v);
      }
    }
    forests.push_back(std::move(g));
  };

  // Parts are taken in non-decreasing (edges, index) order so each multiset
  // appears once.
  std::function<void(int, int, std::size_t)> rec = [&](int budget,
                                                       int min_edges,
                                                       std::size_t min_index) {
    if (!chosen.empty()) emit();
    for (int e = min_edges; e <= budget; ++e) {
      std::size_t start = (e == min_edges) ? min_index : 0;
      for (std::size_t i = start; i < by_edges[e].size(); ++i) {
        chosen.push_back({e, i});
        rec(budget - e, e, i);
        chosen.pop_back();
      }
    }
  };
  rec(max_edges, 1, 0);
  return forests;
}

void for_each_permutation(std::size_t n,
                          const std::function<void(const Ordering&)>& fn) {
  Ordering sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    fn(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

namespace {

void build_orders_rec(
    const RealizationTree& t, std::vector<std::size_t>& order,
    std::vector<bool>& used, std::set<NodeId>& grown,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (order.size() == t.edges().size()) {
    fn(order);
    return;
  }
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    if (used[i]) continue;
    const SumEdge& e = t.edges()[i];
    bool in_a = grown.count(e.a) > 0;
    bool in_b = grown.count(e.b) > 0;
    bool first = order.empty();
    if (!first && in_a == in_b) continue;
    used[i] = true;
    order.push_back(i);
    std::vector<NodeId> added;
    for (NodeId n : {e.a, e.b}) {
      if (grown.insert(n).second) added.push_back(n);
    }
    build_orders_rec(t, order, used, grown, fn);
    for (NodeId n : added) grown.erase(n);
    order.pop_back();
    used[i] = false;
  }
}

}  // namespace

void for_each_valid_build_order(
    const RealizationTree& t,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (t.edges().empty()) {
    fn({});
    return;
  }
  std::vector<std::size_t> order;
  std::vector<bool> used(t.edges().size(), false);
  std::set<NodeId> grown;
  build_orders_rec(t, order, used, grown, fn);
}

RealizationTree with_build_order(const RealizationTree& t,
                                 const std::vector<std::size_t>& order) {
  RealizationTree out = t;
  std::vector<SumEdge> edges;
  edges.reserve(order.size());
  for (std::size_t i : order) edges.push_back(t.edges()[i]);
  out.set_edges(std::move(edges));
  if (!order.empty()) out.set_root(t.edges()[order.front()].a);
  return out;
}

std::vector<RealizationTree> move_equivalents(const RealizationTree& t,
                                              std::size_t max_states) {
  std::vector<RealizationTree> out;
  std::set<std::string> seen;
  std::vector<RealizationTree> queue{t};
  seen.insert(certificate(t));
  while (!queue.empty() && out.size() < max_states) {
    RealizationTree current = std::move(queue.back());
    queue.pop_back();
    out.push_back(current);
    const std::size_t edge_count = current.edges().size();
    for (std::size_t i = 0; i < edge_count; ++i) {
      if (contract_applicable(current, i)) {
        RealizationTree next = contract_trivial(current, i);
        if (seen.insert(certificate(next)).second) queue.push_back(next);
      }
      for (std::size_t f = 0; f < edge_count; ++f) {
        if (f == i) continue;
        for (NodeId end : {current.edges()[i].a, current.edges()[i].b}) {
          if (!current.edges()[f].touches(end)) continue;
          if (!slide_legal(current, i, end, f)) continue;
          RealizationTree next = slide(current, i, end, f);
          if (seen.insert(certificate(next)).second) queue.push_back(next);
        }
      }
    }
  }
  return out;
}

FamilyResult confluence_family(int max_edges, std::size_t max_instances) {
  // Alphabet: two distinct order-2 circle atoms, an order-3 circle atom,
  // and a two-vertex graph atom, plus the identities their sums can meet.
  std::vector<Atom> alphabet;
  alphabet.push_back(Atom::irreducible("K", {SingularComponent::circle(ConeOrder(2))}));
  alphabet.push_back(Atom::irreducible("L", {SingularComponent::circle(ConeOrder(2))}));
  alphabet.push_back(Atom::irreducible("M", {SingularComponent::circle(ConeOrder(3))}));
  Triple w_triple = make_vertex_triple(ConeOrder(2), ConeOrder(2), ConeOrder(3));
  alphabet.push_back(Atom::irreducible(
      "W", {SingularComponent::graph({ConeOrder(2), ConeOrder(2), ConeOrder(3)},
                                     {w_triple, w_triple})}));
  alphabet.push_back(builtin_identity(SphericalType::ordinary()));
  alphabet.push_back(builtin_identity(SphericalType::cyclic(ConeOrder(2))));
  alphabet.push_back(builtin_identity(SphericalType::cyclic(ConeOrder(3))));
  alphabet.push_back(builtin_identity(SphericalType::vertex(w_triple)));

  std::vector<SphericalType> types{
      SphericalType::ordinary(), SphericalType::cyclic(ConeOrder(2)),
      SphericalType::cyclic(ConeOrder(3)), SphericalType::vertex(w_triple)};

  FamilyResult result;
  std::set<std::string> seen;
  std::vector<RealizationTree> frontier;
  for (const Atom& a : alphabet) {
    RealizationTree t;
    t.add_node(a, a.name() + "0");
    if (seen.insert(certificate(t)).second) {
      frontier.push_back(t);
      result.instances.push_back(t);
    }
  }
  result.complete_through_edges = 0;

  auto used_vertex_slots = [](const RealizationTree& t, NodeId n) {
    std::set<std::pair<int, int>> used;
    for (const SumEdge& e : t.edges()) {
      for (const auto* att : {&e.at_a, &e.at_b}) {
        if (*att && (*att)->node == n && (*att)->vertex) {
          used.insert({(*att)->component, *(*att)->vertex});
        }
      }
    }
    return used;
  };

  bool capped = false;
  for (int edges = 1; edges <= max_edges && !capped; ++edges) {
    std::vector<RealizationTree> next;
    for (const RealizationTree& base : frontier) {
      if (capped) break;
      for (const TreeNode& host : base.nodes()) {
        if (capped) break;
        for (const Atom& atom : alphabet) {
          if (capped) break;
          for (const SphericalType& type : types) {
            if (capped) break;
            // Enumerate attachment choices for both endpoints.
            std::vector<std::pair<std::optional<Attachment>,
                                  std::optional<Attachment>>> choices;
            if (type.is_ordinary()) {
              choices.push_back({std::nullopt, std::nullopt});
            } else if (type.is_cyclic()) {
              ConeOrder p = type.order();
              for (std::size_t hc = 0; hc < host.atom.components().size();
                   ++hc) {
                if (!host.atom.components()[hc].has_order(p)) continue;
                for (std::size_t nc = 0; nc < atom.components().size(); ++nc) {
                  if (!atom.components()[nc].has_order(p)) continue;
                  choices.push_back(
                      {Attachment{host.id, static_cast<int>(hc), std::nullopt},
                       Attachment{-1, static_cast<int>(nc), std::nullopt}});
                }
              }
            } else {
              auto used = used_vertex_slots(base, host.id);
              for (std::size_t hc = 0; hc < host.atom.components().size();
                   ++hc) {
                const auto& comp = host.atom.components()[hc];
                if (!comp.has_vertices()) continue;
                for (std::size_t hv = 0; hv < comp.vertex_triples().size();
                     ++hv) {
                  if (comp.vertex_triples()[hv] != type.triple()) continue;
                  if (used.count({static_cast<int>(hc),
                                  static_cast<int>(hv)})) {
                    continue;
                  }
                  for (std::size_t nc = 0; nc < atom.components().size();
                       ++nc) {
                    const auto& ncomp = atom.components()[nc];
                    if (!ncomp.has_vertices()) continue;
                    for (std::size_t nv = 0;
                         nv < ncomp.vertex_triples().size(); ++nv) {
                      if (ncomp.vertex_triples()[nv] != type.triple())
                        continue;
                      choices.push_back(
                          {Attachment{host.id, static_cast<int>(hc),
                                      static_cast<int>(hv)},
                           Attachment{-1, static_cast<int>(nc),
                                      static_cast<int>(nv)}});
                    }
                  }
                }
              }
            }
            for (const auto& [host_att, new_att] : choices) {
              RealizationTree grown = base;
              NodeId fresh = grown.add_node(
                  atom, atom.name() + std::to_string(grown.nodes().size()));
              SumEdge e;
              e.type = type;
              e.a = fresh;
              e.b = host.id;
              if (new_att) {
                e.at_a = *new_att;
                e.at_a->node = fresh;
              }
              if (host_att) e.at_b = *host_att;
              grown.add_edge(std::move(e));
              if (!seen.insert(certificate(grown)).second) continue;
              next.push_back(grown);
              result.instances.push_back(grown);
              if (result.instances.size() >= max_instances) {
                capped = true;
                break;
              }
            }
          }
        }
      }
    }
    if (!capped) result.complete_through_edges = edges;
    frontier = std::move(next);
  }
  return result;
}

}  // namespace orbsum
