#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace orbsum {

/// Order of a cone point or singular strand. Always >= 2.
class ConeOrder {
 public:
  explicit ConeOrder(int value);

  int value() const { return value_; }

  auto operator<=>(const ConeOrder&) const = default;

 private:
  int value_;
};

using Triple = std::array<ConeOrder, 3>;

/// True iff the sorted triple is (2,2,p) for some p>=2, or (2,3,p) with
/// p in {3,4,5}. These are the only order triples a trivalent singular
/// vertex can carry.
bool is_admissible_vertex_triple(ConeOrder p, ConeOrder q, ConeOrder r);

/// Sorts and validates; throws std::invalid_argument on an inadmissible triple.
Triple make_vertex_triple(ConeOrder p, ConeOrder q, ConeOrder r);

/// The three-way type tag shared by spherical 2-orbifolds, discal and
/// spherical 3-orbifolds, punctures, and sum edges: plain, one order-p
/// strand, or a trivalent vertex with orders (p,q,r).
class SphericalType {
 public:
  enum class Kind { Ordinary = 0, Cyclic = 1, Vertex = 2 };

  static SphericalType ordinary();
  static SphericalType cyclic(ConeOrder p);
  static SphericalType vertex(ConeOrder p, ConeOrder q, ConeOrder r);
  static SphericalType vertex(const Triple& t);

  Kind kind() const { return kind_; }
  bool is_ordinary() const { return kind_ == Kind::Ordinary; }
  bool is_cyclic() const { return kind_ == Kind::Cyclic; }
  bool is_vertex() const { return kind_ == Kind::Vertex; }

  /// Cyclic only.
  ConeOrder order() const;
  /// Vertex only; sorted ascending.
  Triple triple() const;

  /// Ordinary -> 0, Cyclic -> 1, Vertex -> 2. "More complicated" comparisons
  /// use this class alone; orders are ignored.
  int complexity_class() const { return static_cast<int>(kind_); }

  /// "ordinary", "cyclic(5)", "vertex(2,3,4)" — also the CLI syntax.
  std::string to_string() const;

  auto operator<=>(const SphericalType&) const = default;

 private:
  SphericalType(Kind kind, std::array<int, 3> orders)
      : kind_(kind), orders_(orders) {}

  Kind kind_;
  std::array<int, 3> orders_;  // zero-filled slots unused for the kind
};

inline int complexity_class(const SphericalType& t) {
  return t.complexity_class();
}

/// Type of the discal 3-orbifold obtained by capping every boundary
/// component of a punctured discal orbifold except boundary[keep].
/// Throws MaximalityViolation unless boundary[keep] has maximal
/// complexity class in the list.
SphericalType cap_punctured_discal(const std::vector<SphericalType>& boundary,
                                   std::size_t keep);

/// A punctured spherical 3-orbifold is discal iff the puncture has the
/// same type (orders included) as the orbifold itself.
inline bool punctured_spherical_is_discal(const SphericalType& orbifold_type,
                                          const SphericalType& puncture_type) {
  return orbifold_type == puncture_type;
}

}  // namespace orbsum
