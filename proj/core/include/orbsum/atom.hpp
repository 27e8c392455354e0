#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbsum/spherical.hpp"

namespace orbsum {

/// One component of the singular set of a summand: either a vertex-free
/// circle of a single order, or a closed trivalent graph recorded only
/// through its multiset of edge orders and multiset of vertex triples.
class SingularComponent {
 public:
  enum class Kind { Circle, Graph };

  static SingularComponent circle(ConeOrder order);

  /// edge_orders nonempty; vertex_triples nonempty; every order appearing
  /// in a vertex triple must appear among the edge orders.
  static SingularComponent graph(std::vector<ConeOrder> edge_orders,
                                 std::vector<Triple> vertex_triples);

  Kind kind() const { return kind_; }
  bool is_circle() const { return kind_ == Kind::Circle; }
  bool has_vertices() const { return kind_ == Kind::Graph; }

  /// Circle only.
  ConeOrder circle_order() const;
  /// Graph only; sorted.
  const std::vector<ConeOrder>& edge_orders() const;
  const std::vector<Triple>& vertex_triples() const;

  /// True iff the component contains a strand of the given order.
  bool has_order(ConeOrder p) const;

  bool operator==(const SingularComponent&) const = default;

 private:
  SingularComponent() = default;

  Kind kind_ = Kind::Circle;
  std::optional<ConeOrder> order_;
  std::vector<ConeOrder> edge_orders_;
  std::vector<Triple> vertex_triples_;
};

/// An irreducible summand descriptor. Irreducibility of non-identity atoms
/// is the user's declaration; the constructor only enforces the shape of
/// the three identity families.
class Atom {
 public:
  Atom() = default;

  /// A user-declared irreducible summand.
  static Atom irreducible(std::string name,
                          std::vector<SingularComponent> components);

  const std::string& name() const { return name_; }
  const std::optional<SphericalType>& identity_of() const {
    return identity_of_;
  }
  bool is_identity() const { return identity_of_.has_value(); }
  const std::vector<SingularComponent>& components() const {
    return components_;
  }

  bool operator==(const Atom&) const = default;

 private:
  friend Atom builtin_identity(const SphericalType&);

  std::string name_;
  std::optional<SphericalType> identity_of_;
  std::vector<SingularComponent> components_;
};

/// Reserved name of the identity atom of the given type:
/// "S3o", "S3c(p)", "S3v(p,q,r)".
std::string identity_name(const SphericalType& t);

bool is_reserved_atom_name(const std::string& name);

/// The identity element of each sum type: the plain sphere, the sphere with
/// one order-p circle, and the double of the vertex discal orbifold (a
/// theta-shaped graph with two (p,q,r) vertices and edges of orders p,q,r).
Atom builtin_identity(const SphericalType& t);

/// Which puncture types the atom supports: ordinary always; cyclic(p) iff
/// some component carries an order-p strand; vertex(p,q,r) iff some graph
/// component has a vertex with that triple.
std::set<SphericalType> puncture_capabilities(const Atom& a);

}  // namespace orbsum
