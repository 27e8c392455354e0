#include "orbsum/generate.hpp"

#include <optional>
#include <set>
#include <vector>

namespace orbsum {

namespace {

std::vector<Atom> atom_pool(bool with_identities) {
  std::vector<Atom> pool;
  ConeOrder two(2), three(3);
  Triple t223 = make_vertex_triple(two, two, three);
  Triple t233 = make_vertex_triple(two, three, three);
  pool.push_back(Atom::irreducible("A", {SingularComponent::circle(two)}));
  pool.push_back(Atom::irreducible("B", {SingularComponent::circle(three)}));
  pool.push_back(Atom::irreducible(
      "C", {SingularComponent::circle(two), SingularComponent::circle(two)}));
  pool.push_back(Atom::irreducible(
      "D", {SingularComponent::circle(two), SingularComponent::circle(three)}));
  pool.push_back(Atom::irreducible(
      "G", {SingularComponent::graph({two, two, three}, {t223})}));
  pool.push_back(Atom::irreducible(
      "H", {SingularComponent::graph({two, three, three}, {t233, t233})}));
  pool.push_back(Atom::irreducible("P", {}));
  if (with_identities) {
    pool.push_back(builtin_identity(SphericalType::ordinary()));
    pool.push_back(builtin_identity(SphericalType::cyclic(two)));
    pool.push_back(builtin_identity(SphericalType::cyclic(three)));
  }
  return pool;
}

struct AttachChoice {
  int component;
  std::optional<int> vertex;
};

std::vector<AttachChoice> attach_choices(
    const Atom& atom, const SphericalType& type,
    const std::set<std::pair<int, int>>& used_vertex_slots) {
  std::vector<AttachChoice> out;
  const auto& comps = atom.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (type.is_cyclic()) {
      if (comps[c].has_order(type.order())) {
        out.push_back({static_cast<int>(c), std::nullopt});
      }
    } else if (type.is_vertex() && comps[c].has_vertices()) {
      const auto& triples = comps[c].vertex_triples();
      for (std::size_t v = 0; v < triples.size(); ++v) {
        if (triples[v] == type.triple() &&
            !used_vertex_slots.count({static_cast<int>(c),
                                      static_cast<int>(v)})) {
          out.push_back({static_cast<int>(c), static_cast<int>(v)});
        }
      }
    }
  }
  return out;
}

}  // namespace

RealizationTree random_efficient_realization(std::mt19937_64& rng,
                                             const GenerateOptions& options) {
  const std::vector<Atom> pool = atom_pool(true);
  std::vector<SphericalType> sum_types{
      SphericalType::ordinary(), SphericalType::cyclic(ConeOrder(2)),
      SphericalType::cyclic(ConeOrder(3))};
  if (options.allow_vertex_sums) {
    sum_types.push_back(SphericalType::vertex(
        make_vertex_triple(ConeOrder(2), ConeOrder(2), ConeOrder(3))));
    sum_types.push_back(SphericalType::vertex(
        make_vertex_triple(ConeOrder(2), ConeOrder(3), ConeOrder(3))));
  }

  for (int attempt = 0; attempt < 256; ++attempt) {
    int node_count = 1 + static_cast<int>(draw(rng, options.max_edges + 1));
    RealizationTree t;
    std::vector<NodeId> ids;
    std::vector<std::size_t> atom_of;  // index into pool, per node
    // Used (node, component, vertex) slots, keyed per node.
    std::vector<std::set<std::pair<int, int>>> used(node_count);

    for (int i = 0; i < node_count; ++i) {
      std::size_t k = draw(rng, pool.size());
      atom_of.push_back(k);
      ids.push_back(t.add_node(pool[k], pool[k].name() + std::to_string(i)));
    }

    bool stuck = false;
    for (int i = 1; i < node_count && !stuck; ++i) {
      int host = static_cast<int>(draw(rng, i));
      // Candidate sum types compatible with both atoms and not trivially
      // inefficient at an identity endpoint.
      struct Option {
        SphericalType type;
        AttachChoice at_new;
        AttachChoice at_host;
      };
      std::vector<Option> options_here;
      for (const SphericalType& type : sum_types) {
        const Atom& atom_new = pool[atom_of[i]];
        const Atom& atom_host = pool[atom_of[host]];
        const auto& id_new = atom_new.identity_of();
        const auto& id_host = atom_host.identity_of();
        if ((id_new && id_new->kind() == type.kind()) ||
            (id_host && id_host->kind() == type.kind())) {
          continue;  // keep the realization efficient by construction
        }
        if (type.is_ordinary()) {
          options_here.push_back({type, {0, std::nullopt}, {0, std::nullopt}});
          continue;
        }
        auto new_choices = attach_choices(atom_new, type, used[i]);
        auto host_choices = attach_choices(atom_host, type, used[host]);
        for (const AttachChoice& nc : new_choices) {
          for (const AttachChoice& hc : host_choices) {
            options_here.push_back({type, nc, hc});
          }
        }
      }
      if (options_here.empty()) {
        stuck = true;
        break;
      }
      const Option& pick = options_here[draw(rng, options_here.size())];
      SumEdge e;
      e.type = pick.type;
      e.a = ids[i];
      e.b = ids[host];
      if (!pick.type.is_ordinary()) {
        e.at_a = Attachment{ids[i], pick.at_new.component, pick.at_new.vertex};
        e.at_b =
            Attachment{ids[host], pick.at_host.component, pick.at_host.vertex};
        if (pick.at_new.vertex) {
          used[i].insert({pick.at_new.component, *pick.at_new.vertex});
        }
        if (pick.at_host.vertex) {
          used[host].insert({pick.at_host.component, *pick.at_host.vertex});
        }
      }
      t.add_edge(std::move(e));
    }
    if (stuck) continue;

    if (options.want_cyclic_order >= 2) {
      bool has_p = false;
      for (const SumEdge& e : t.edges()) {
        if (e.type.is_cyclic() &&
            e.type.order().value() == options.want_cyclic_order) {
          has_p = true;
          break;
        }
      }
      if (!has_p) continue;
    }
    if (!is_valid(t) || !efficiency_violations(t).empty()) continue;
    return t;
  }
  // Fallback: a minimal guaranteed instance.
  RealizationTree t;
  ConeOrder p(options.want_cyclic_order >= 2 ? options.want_cyclic_order : 2);
  NodeId a = t.add_node(Atom::irreducible(
      "A", {SingularComponent::circle(p)}), "A0");
  NodeId b = t.add_node(Atom::irreducible(
      "B", {SingularComponent::circle(p)}), "B1");
  SumEdge e;
  e.type = SphericalType::cyclic(p);
  e.a = b;
  e.b = a;
  e.at_a = Attachment{b, 0, std::nullopt};
  e.at_b = Attachment{a, 0, std::nullopt};
  t.add_edge(std::move(e));
  return t;
}

}  // namespace orbsum
