#include "orbsum/realization.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "orbsum/error.hpp"

namespace orbsum {

NodeId RealizationTree::add_node(Atom atom, std::string label) {
  NodeId id = next_id_++;
  if (label.empty()) label = "n" + std::to_string(id);
  nodes_.push_back(TreeNode{id, std::move(label), std::move(atom)});
  if (nodes_.size() == 1) root_ = id;
  return id;
}

void RealizationTree::add_edge(SumEdge e) { edges_.push_back(std::move(e)); }

const TreeNode* RealizationTree::find_node(NodeId id) const {
  for (const TreeNode& n : nodes_) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

const TreeNode& RealizationTree::node(NodeId id) const {
  const TreeNode* n = find_node(id);
  if (!n) throw std::out_of_range("no node with id " + std::to_string(id));
  return *n;
}

void RealizationTree::remove_node(NodeId id) {
  std::erase_if(nodes_, [id](const TreeNode& n) { return n.id == id; });
}

namespace {

std::string node_ref(const RealizationTree& t, NodeId id) {
  const TreeNode* n = t.find_node(id);
  return n ? n->label : ("#" + std::to_string(id));
}

void check_attachment(const RealizationTree& t, const SumEdge& e,
                      std::size_t idx, NodeId end,
                      std::vector<Violation>& out) {
  const std::optional<Attachment>& att = e.at(end);
  std::ostringstream os;
  os << "edge " << idx << " (" << describe_edge(t, idx) << ") at "
     << node_ref(t, end) << ": ";
  const std::string where = os.str();
  if (e.type.is_ordinary()) {
    if (att) out.push_back({where + "unexpected attachment on ordinary sum"});
    return;
  }
  if (!att) {
    out.push_back({where + "missing attachment"});
    return;
  }
  if (att->node != end) {
    out.push_back({where + "attachment names the wrong node"});
    return;
  }
  const TreeNode* n = t.find_node(end);
  if (!n) return;  // endpoint error reported elsewhere
  const auto& comps = n->atom.components();
  if (att->component < 0 ||
      static_cast<std::size_t>(att->component) >= comps.size()) {
    out.push_back({where + "component index out of range"});
    return;
  }
  const SingularComponent& comp = comps[att->component];
  if (e.type.is_cyclic()) {
    if (att->vertex) {
      out.push_back({where + "unexpected vertex index on cyclic attachment"});
    }
    if (!comp.has_order(e.type.order())) {
      out.push_back({where + "order mismatch: component carries no order-" +
                     std::to_string(e.type.order().value()) + " strand"});
    }
    return;
  }
  // vertex sum
  if (!comp.has_vertices()) {
    out.push_back({where + "vertex attachment must target a graph component"});
    return;
  }
  if (!att->vertex) {
    out.push_back({where + "missing vertex index"});
    return;
  }
  const auto& triples = comp.vertex_triples();
  if (*att->vertex < 0 ||
      static_cast<std::size_t>(*att->vertex) >= triples.size()) {
    out.push_back({where + "vertex index out of range"});
    return;
  }
  if (triples[*att->vertex] != e.type.triple()) {
    out.push_back({where + "triple mismatch at the attached vertex"});
  }
}

}  // namespace

std::vector<Violation> validate(const RealizationTree& t) {
  std::vector<Violation> out;
  if (t.nodes().empty()) {
    out.push_back({"tree has no nodes"});
    return out;
  }
  std::set<NodeId> ids;
  for (const TreeNode& n : t.nodes()) {
    if (!ids.insert(n.id).second) {
      out.push_back({"duplicate node id " + std::to_string(n.id)});
    }
  }
  if (!ids.count(t.root())) {
    out.push_back({"root is not a node of the tree"});
    return out;
  }
  if (t.edges().size() + 1 != t.nodes().size()) {
    out.push_back({"edge count " + std::to_string(t.edges().size()) +
                   " does not match node count " +
                   std::to_string(t.nodes().size())});
  }

  bool endpoints_ok = true;
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    const SumEdge& e = t.edges()[i];
    if (!ids.count(e.a) || !ids.count(e.b)) {
      out.push_back({"edge " + std::to_string(i) + " has unknown endpoint"});
      endpoints_ok = false;
      continue;
    }
    if (e.a == e.b) {
      out.push_back({"edge " + std::to_string(i) + " is a self-loop at " +
                     node_ref(t, e.a)});
      endpoints_ok = false;
    }
  }

  if (endpoints_ok) {
    // Growth order: each sum must join one node not yet present to the
    // component containing the root built so far.
    std::set<NodeId> grown{t.root()};
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
      const SumEdge& e = t.edges()[i];
      bool in_a = grown.count(e.a) > 0;
      bool in_b = grown.count(e.b) > 0;
      if (in_a == in_b) {
        out.push_back({"edge " + std::to_string(i) + " (" +
                       describe_edge(t, i) + ") is not a growth step: " +
                       (in_a ? "both endpoints already present"
                             : "neither endpoint present yet")});
        grown.insert(e.a);
        grown.insert(e.b);
      } else {
        grown.insert(in_a ? e.b : e.a);
      }
    }

    std::map<std::tuple<NodeId, int, int>, int> vertex_uses;
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
      const SumEdge& e = t.edges()[i];
      check_attachment(t, e, i, e.a, out);
      check_attachment(t, e, i, e.b, out);
      for (const auto* att : {&e.at_a, &e.at_b}) {
        if (*att && (*att)->vertex) {
          auto key = std::make_tuple((*att)->node, (*att)->component,
                                     *(*att)->vertex);
          if (++vertex_uses[key] == 2) {
            out.push_back({"edge " + std::to_string(i) +
                           ": singular vertex already used by another sum at " +
                           node_ref(t, (*att)->node)});
          }
        }
      }
    }
  }
  return out;
}

bool is_valid(const RealizationTree& t) { return validate(t).empty(); }

void require_valid(const RealizationTree& t) {
  std::vector<Violation> v = validate(t);
  if (!v.empty()) raise(ErrorCode::InvalidTree, v.front().message);
}

std::vector<EfficiencyViolation> efficiency_violations(
    const RealizationTree& t) {
  require_valid(t);
  std::vector<EfficiencyViolation> out;
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    const SumEdge& e = t.edges()[i];
    for (NodeId end : {e.a, e.b}) {
      const auto& identity = t.atom_of(end).identity_of();
      if (identity && identity->kind() == e.type.kind()) {
        out.push_back({end, i});
      }
    }
  }
  return out;
}

RealizationTree renormalize_order(const RealizationTree& t) {
  RealizationTree result = t;
  const std::vector<SumEdge>& old_edges = t.edges();
  std::vector<bool> placed(old_edges.size(), false);
  std::vector<SumEdge> ordered;
  ordered.reserve(old_edges.size());
  std::set<NodeId> grown{t.root()};
  for (std::size_t step = 0; step < old_edges.size(); ++step) {
    bool advanced = false;
    for (std::size_t i = 0; i < old_edges.size(); ++i) {
      if (placed[i]) continue;
      const SumEdge& e = old_edges[i];
      bool in_a = grown.count(e.a) > 0;
      bool in_b = grown.count(e.b) > 0;
      if (in_a != in_b) {
        placed[i] = true;
        grown.insert(in_a ? e.b : e.a);
        ordered.push_back(e);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      raise(ErrorCode::InvalidTree,
            "edge sequence cannot be ordered as a growth from the root");
    }
  }
  result.set_edges(std::move(ordered));
  return result;
}

namespace {

void assert_valid_after_move(const RealizationTree& t, const char* op) {
  std::vector<Violation> v = validate(t);
  if (!v.empty()) {
    throw std::logic_error(std::string(op) +
                           " produced an invalid tree: " + v.front().message);
  }
}

bool matching_identity(const RealizationTree& t, NodeId n,
                       const SphericalType& sum_type) {
  const auto& identity = t.atom_of(n).identity_of();
  return identity && identity->kind() == sum_type.kind();
}

}  // namespace

bool contract_applicable(const RealizationTree& t, std::size_t edge_index) {
  if (edge_index >= t.edges().size()) return false;
  const SumEdge& e = t.edges()[edge_index];
  return matching_identity(t, e.a, e.type) || matching_identity(t, e.b, e.type);
}

RealizationTree contract_trivial(const RealizationTree& t,
                                 std::size_t edge_index) {
  if (edge_index >= t.edges().size()) {
    throw std::out_of_range("contract_trivial: edge index out of range");
  }
  const SumEdge e = t.edges()[edge_index];
  bool match_a = matching_identity(t, e.a, e.type);
  bool match_b = matching_identity(t, e.b, e.type);
  if (!match_a && !match_b) {
    raise(ErrorCode::NotTrivial,
          "neither endpoint of " + describe_edge(t, edge_index) +
              " is an identity of type " + e.type.to_string());
  }
  NodeId victim;
  if (match_a && match_b) {
    // Identity summed with identity: keep the root if it is involved.
    victim = (e.a == t.root()) ? e.b : e.a;
  } else {
    victim = match_a ? e.a : e.b;
  }
  NodeId survivor = e.other(victim);

  // Re-attachment targets on the survivor come from the contracted sum:
  // the merged strand (cyclic) or the absorbed vertex slot (vertex).
  int target_comp = -1;
  std::optional<int> target_vertex;
  if (!e.type.is_ordinary()) {
    const std::optional<Attachment>& att = e.at(survivor);
    if (!att) {
      raise(ErrorCode::ReattachmentImpossible,
            "contracted sum lacks an attachment on the survivor");
    }
    target_comp = att->component;
    target_vertex = att->vertex;
  }

  RealizationTree result = t;
  result.remove_node(victim);
  std::vector<SumEdge> edges;
  edges.reserve(t.edges().size() - 1);
  const auto& comps = t.atom_of(survivor).components();
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    if (i == edge_index) continue;
    SumEdge g = t.edges()[i];
    if (g.touches(victim)) {
      std::optional<Attachment>& att = g.at(victim);
      if (att) {
        if (target_comp < 0 ||
            static_cast<std::size_t>(target_comp) >= comps.size()) {
          raise(ErrorCode::ReattachmentImpossible,
                "survivor has no component to receive the re-attached sum");
        }
        const SingularComponent& comp = comps[target_comp];
        if (g.type.is_cyclic()) {
          if (!comp.has_order(g.type.order())) {
            raise(ErrorCode::ReattachmentImpossible,
                  "merged strand does not carry order " +
                      std::to_string(g.type.order().value()));
          }
          att = Attachment{survivor, target_comp, std::nullopt};
        } else {
          // A vertex sum at the identity's other vertex lands on the vertex
          // slot the contracted sum occupied.
          if (!target_vertex || !comp.has_vertices() ||
              comp.vertex_triples()[*target_vertex] != g.type.triple()) {
            raise(ErrorCode::ReattachmentImpossible,
                  "no matching vertex slot on the survivor");
          }
          att = Attachment{survivor, target_comp, target_vertex};
        }
      }
      if (g.a == victim) {
        g.a = survivor;
      } else {
        g.b = survivor;
      }
      if (g.a == g.b) {
        raise(ErrorCode::ReattachmentImpossible,
              "re-attachment would create a self-loop");
      }
    }
    edges.push_back(std::move(g));
  }
  result.set_edges(std::move(edges));
  if (victim == t.root()) result.set_root(survivor);
  result = renormalize_order(result);
  assert_valid_after_move(result, "contract_trivial");
  return result;
}

bool slide_legal(const RealizationTree& t, std::size_t edge_e, NodeId moved_end,
                 std::size_t edge_f) {
  if (edge_e >= t.edges().size() || edge_f >= t.edges().size()) return false;
  if (edge_e == edge_f) return false;
  const SumEdge& e = t.edges()[edge_e];
  const SumEdge& f = t.edges()[edge_f];
  if (!e.touches(moved_end) || !f.touches(moved_end)) return false;
  if (e.type.is_ordinary()) return true;
  if (e.type.is_vertex()) return false;  // a singular vertex stays in its atom
  if (f.type != e.type) return false;
  const auto& ea = e.at(moved_end);
  const auto& fa = f.at(moved_end);
  return ea && fa && ea->component == fa->component;
}

RealizationTree slide(const RealizationTree& t, std::size_t edge_e,
                      NodeId moved_end, std::size_t edge_f) {
  if (!slide_legal(t, edge_e, moved_end, edge_f)) {
    raise(ErrorCode::IllegalSlide,
          "slide of edge " + std::to_string(edge_e) + " across " +
              std::to_string(edge_f) + " at node " +
              node_ref(t, moved_end) + " is not permitted");
  }
  const SumEdge& f = t.edges()[edge_f];
  NodeId target = f.other(moved_end);
  SumEdge e = t.edges()[edge_e];
  NodeId fixed_end = e.other(moved_end);
  if (target == fixed_end) {
    raise(ErrorCode::IllegalSlide, "slide would duplicate an existing edge");
  }
  if (e.a == moved_end) {
    e.a = target;
  } else {
    e.b = target;
  }
  if (e.type.is_cyclic()) {
    // The strand crosses the sum sphere of f: re-attach on the component
    // carrying f's attachment at the far side.
    e.at(target) = Attachment{target, f.at(target)->component, std::nullopt};
  }
  RealizationTree result = t;
  std::vector<SumEdge> edges = t.edges();
  edges[edge_e] = std::move(e);
  result.set_edges(std::move(edges));
  result = renormalize_order(result);
  assert_valid_after_move(result, "slide");
  return result;
}

std::string CanonicalForm::to_string() const {
  std::ostringstream os;
  os << "summands:";
  for (std::size_t i = 0; i < summands.size(); ++i) {
    os << (i ? ", " : " ") << summands[i];
  }
  os << "; labels:";
  for (std::size_t i = 0; i < sum_labels.size(); ++i) {
    os << (i ? ", " : " ") << sum_labels[i].to_string();
  }
  return os.str();
}

RealizationTree canonicalize_tree(const RealizationTree& t) {
  require_valid(t);
  RealizationTree current = t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < current.edges().size(); ++i) {
      if (contract_applicable(current, i)) {
        current = contract_trivial(current, i);
        changed = true;
        break;
      }
    }
  }
  return current;
}

CanonicalForm canonicalize(const RealizationTree& t) {
  RealizationTree residual = canonicalize_tree(t);
  CanonicalForm form;
  for (const TreeNode& n : residual.nodes()) {
    form.summands.push_back(n.atom.name());
  }
  for (const SumEdge& e : residual.edges()) {
    form.sum_labels.push_back(e.type);
  }
  std::sort(form.summands.begin(), form.summands.end());
  std::sort(form.sum_labels.begin(), form.sum_labels.end());
  return form;
}

bool equivalent(const RealizationTree& t1, const RealizationTree& t2) {
  return canonicalize(t1) == canonicalize(t2);
}

std::pair<RealizationTree, RealizationTree> split_at_edge(
    const RealizationTree& t, std::size_t edge_index) {
  if (edge_index >= t.edges().size()) {
    throw std::out_of_range("split_at_edge: edge index out of range");
  }
  const SumEdge& cut = t.edges()[edge_index];

  auto side_of = [&](NodeId start) {
    std::set<NodeId> side{start};
    bool grewn = true;
    while (grewn) {
      grewn = false;
      for (std::size_t i = 0; i < t.edges().size(); ++i) {
        if (i == edge_index) continue;
        const SumEdge& e = t.edges()[i];
        if (side.count(e.a) != side.count(e.b)) {
          side.insert(e.a);
          side.insert(e.b);
          grewn = true;
        }
      }
    }
    return side;
  };

  auto make_side = [&](NodeId cut_end) {
    std::set<NodeId> members = side_of(cut_end);
    RealizationTree side;
    // Node ids restart from zero in the side tree; remap attachments.
    std::map<NodeId, NodeId> remap;
    for (const TreeNode& n : t.nodes()) {
      if (!members.count(n.id)) continue;
      remap[n.id] = side.add_node(n.atom, n.label);
    }
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
      if (i == edge_index) continue;
      const SumEdge& e = t.edges()[i];
      if (!members.count(e.a)) continue;
      SumEdge copy = e;
      copy.a = remap[e.a];
      copy.b = remap[e.b];
      if (copy.at_a) copy.at_a->node = copy.a;
      if (copy.at_b) copy.at_b->node = copy.b;
      side.add_edge(std::move(copy));
    }
    side.set_root(members.count(t.root()) ? remap[t.root()] : remap[cut_end]);
    return renormalize_order(side);
  };

  return {make_side(cut.a), make_side(cut.b)};
}

namespace {

std::string attachment_code(const std::optional<Attachment>& att) {
  if (!att) return "-";
  std::string s = "c" + std::to_string(att->component);
  if (att->vertex) s += "v" + std::to_string(*att->vertex);
  return s;
}

std::string atom_code(const Atom& a) {
  return a.is_identity() ? "!" + a.name() : a.name();
}

std::string encode_from(const RealizationTree& t,
                        const std::multimap<NodeId, std::size_t>& incidence,
                        NodeId node, std::size_t via_edge) {
  std::vector<std::string> parts;
  auto [lo, hi] = incidence.equal_range(node);
  for (auto it = lo; it != hi; ++it) {
    if (it->second == via_edge) continue;
    const SumEdge& e = t.edges()[it->second];
    NodeId child = e.other(node);
    std::string code = e.type.to_string() + "|" + attachment_code(e.at(node)) +
                       "|" + attachment_code(e.at(child)) + "|" +
                       encode_from(t, incidence, child, it->second);
    parts.push_back(std::move(code));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = atom_code(t.atom_of(node)) + "(";
  for (const std::string& p : parts) out += p + ";";
  out += ")";
  return out;
}

}  // namespace

std::string certificate(const RealizationTree& t) {
  std::multimap<NodeId, std::size_t> incidence;
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    incidence.emplace(t.edges()[i].a, i);
    incidence.emplace(t.edges()[i].b, i);
  }
  std::string best;
  for (const TreeNode& n : t.nodes()) {
    std::string enc =
        encode_from(t, incidence, n.id, t.edges().size() /*no via edge*/);
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

std::string describe_edge(const RealizationTree& t, std::size_t edge_index) {
  const SumEdge& e = t.edges()[edge_index];
  return node_ref(t, e.a) + "--" + node_ref(t, e.b) + ":" +
         e.type.to_string();
}

}  // namespace orbsum
