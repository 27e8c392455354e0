#include "orbsum/atom.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbsum {

SingularComponent SingularComponent::circle(ConeOrder order) {
  SingularComponent c;
  c.kind_ = Kind::Circle;
  c.order_ = order;
  return c;
}

SingularComponent SingularComponent::graph(
    std::vector<ConeOrder> edge_orders, std::vector<Triple> vertex_triples) {
  if (edge_orders.empty()) {
    throw std::invalid_argument("graph component needs at least one edge");
  }
  if (vertex_triples.empty()) {
    throw std::invalid_argument("graph component needs at least one vertex");
  }
  std::sort(edge_orders.begin(), edge_orders.end());
  for (Triple& t : vertex_triples) {
    t = make_vertex_triple(t[0], t[1], t[2]);
    for (const ConeOrder& o : t) {
      if (!std::binary_search(edge_orders.begin(), edge_orders.end(), o)) {
        throw std::invalid_argument(
            "vertex triple order " + std::to_string(o.value()) +
            " does not appear among the component's edge orders");
      }
    }
  }
  std::sort(vertex_triples.begin(), vertex_triples.end());
  SingularComponent c;
  c.kind_ = Kind::Graph;
  c.edge_orders_ = std::move(edge_orders);
  c.vertex_triples_ = std::move(vertex_triples);
  return c;
}

ConeOrder SingularComponent::circle_order() const {
  if (kind_ != Kind::Circle) {
    throw std::logic_error("circle_order() on a graph component");
  }
  return *order_;
}

const std::vector<ConeOrder>& SingularComponent::edge_orders() const {
  if (kind_ != Kind::Graph) {
    throw std::logic_error("edge_orders() on a circle component");
  }
  return edge_orders_;
}

const std::vector<Triple>& SingularComponent::vertex_triples() const {
  if (kind_ != Kind::Graph) {
    throw std::logic_error("vertex_triples() on a circle component");
  }
  return vertex_triples_;
}

bool SingularComponent::has_order(ConeOrder p) const {
  if (kind_ == Kind::Circle) return *order_ == p;
  return std::binary_search(edge_orders_.begin(), edge_orders_.end(), p);
}

Atom Atom::irreducible(std::string name,
                       std::vector<SingularComponent> components) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  Atom a;
  a.name_ = std::move(name);
  a.components_ = std::move(components);
  return a;
}

std::string identity_name(const SphericalType& t) {
  switch (t.kind()) {
    case SphericalType::Kind::Ordinary:
      return "S3o";
    case SphericalType::Kind::Cyclic:
      return "S3c(" + std::to_string(t.order().value()) + ")";
    case SphericalType::Kind::Vertex: {
      Triple tr = t.triple();
      std::ostringstream os;
      os << "S3v(" << tr[0].value() << "," << tr[1].value() << ","
         << tr[2].value() << ")";
      return os.str();
    }
  }
  return "?";
}

bool is_reserved_atom_name(const std::string& name) {
  return name == "S3o" || name.rfind("S3c", 0) == 0 ||
         name.rfind("S3v", 0) == 0;
}

Atom builtin_identity(const SphericalType& t) {
  Atom a;
  a.name_ = identity_name(t);
  a.identity_of_ = t;
  switch (t.kind()) {
    case SphericalType::Kind::Ordinary:
      break;
    case SphericalType::Kind::Cyclic:
      a.components_.push_back(SingularComponent::circle(t.order()));
      break;
    case SphericalType::Kind::Vertex: {
      // Doubling the Y-graph of the vertex discal orbifold joins the three
      // free ends pairwise: a theta graph with two vertices of the triple.
      Triple tr = t.triple();
      a.components_.push_back(SingularComponent::graph(
          {tr[0], tr[1], tr[2]}, {tr, tr}));
      break;
    }
  }
  return a;
}

std::set<SphericalType> puncture_capabilities(const Atom& a) {
  std::set<SphericalType> caps;
  caps.insert(SphericalType::ordinary());
  for (const SingularComponent& c : a.components()) {
    if (c.is_circle()) {
      caps.insert(SphericalType::cyclic(c.circle_order()));
    } else {
      for (const ConeOrder& o : c.edge_orders()) {
        caps.insert(SphericalType::cyclic(o));
      }
      for (const Triple& t : c.vertex_triples()) {
        caps.insert(SphericalType::vertex(t));
      }
    }
  }
  return caps;
}

}  // namespace orbsum
