#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbsum/spherical.hpp"

namespace orbsum {

/// Closed orientable 2-orbifold: support surface of the given genus with a
/// multiset of cone points. Cone orders are kept sorted.
struct TwoOrbifold {
  int genus = 0;
  std::vector<ConeOrder> cone_orders;

  static TwoOrbifold make(int genus, std::vector<int> orders);

  bool operator==(const TwoOrbifold&) const = default;
};

/// Geometric classification of a closed orientable 2-orbifold.
class Classification {
 public:
  enum class Kind { Bad, Spherical, Euclidean, Hyperbolic };

  static Classification bad() { return {Kind::Bad, std::nullopt}; }
  static Classification spherical(SphericalType t) {
    return {Kind::Spherical, t};
  }
  static Classification euclidean() { return {Kind::Euclidean, std::nullopt}; }
  static Classification hyperbolic() {
    return {Kind::Hyperbolic, std::nullopt};
  }

  Kind kind() const { return kind_; }
  bool is_bad() const { return kind_ == Kind::Bad; }
  bool is_spherical() const { return kind_ == Kind::Spherical; }

  /// Spherical only: the bounding type.
  const SphericalType& spherical_type() const;

  std::string to_string() const;

  bool operator==(const Classification&) const = default;

 private:
  Classification(Kind kind, std::optional<SphericalType> t)
      : kind_(kind), type_(t) {}

  Kind kind_;
  std::optional<SphericalType> type_;
};

/// Sign of the orbifold Euler characteristic (2 - 2g) - sum(1 - 1/p_i),
/// computed in exact integer arithmetic: -1, 0, or +1.
int euler_characteristic_sign(const TwoOrbifold& s);

/// The bad 2-orbifolds are exactly the spheres with one cone point or with
/// two cone points of distinct orders. The spherical ones are the plain
/// sphere, the (p,p) sphere, and the admissible-triple sphere. Everything
/// else is classified by the sign of the orbifold Euler characteristic;
/// a positive sign outside the listed cases would contradict the
/// classification and trips an internal check.
Classification classify_two_orbifold(const TwoOrbifold& s);

}  // namespace orbsum
