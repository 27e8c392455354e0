#include "orbsum/two_orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbsum {

TwoOrbifold TwoOrbifold::make(int genus, std::vector<int> orders) {
  if (genus < 0) {
    throw std::invalid_argument("genus must be non-negative");
  }
  TwoOrbifold s;
  s.genus = genus;
  s.cone_orders.reserve(orders.size());
  for (int p : orders) s.cone_orders.emplace_back(p);
  std::sort(s.cone_orders.begin(), s.cone_orders.end());
  return s;
}

const SphericalType& Classification::spherical_type() const {
  if (!type_) {
    throw std::logic_error("spherical_type() on a non-spherical class");
  }
  return *type_;
}

std::string Classification::to_string() const {
  switch (kind_) {
    case Kind::Bad: return "bad";
    case Kind::Spherical: return "spherical " + type_->to_string();
    case Kind::Euclidean: return "euclidean";
    case Kind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

namespace {

// chi = (2 - 2g - n) + sum 1/p_i, accumulated as an exact fraction.
// Denominators divide lcm of the orders, comfortably inside int64 for any
// input this suite meets.
struct Fraction {
  long long num = 0;
  long long den = 1;

  void add(long long n, long long d) {
    long long g = std::gcd(den, d);
    long long scale = d / g;
    num = num * scale + n * (den / g);
    den = den * scale;
    g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
};

}  // namespace

int euler_characteristic_sign(const TwoOrbifold& s) {
  Fraction chi;
  chi.add(2 - 2LL * s.genus - static_cast<long long>(s.cone_orders.size()), 1);
  for (const ConeOrder& p : s.cone_orders) chi.add(1, p.value());
  return chi.sign();
}

Classification classify_two_orbifold(const TwoOrbifold& s) {
  const auto& cones = s.cone_orders;
  if (s.genus == 0) {
    if (cones.size() == 1) return Classification::bad();
    if (cones.size() == 2 && cones[0] != cones[1]) return Classification::bad();
    if (cones.empty()) {
      return Classification::spherical(SphericalType::ordinary());
    }
    if (cones.size() == 2) {
      return Classification::spherical(SphericalType::cyclic(cones[0]));
    }
    if (cones.size() == 3 &&
        is_admissible_vertex_triple(cones[0], cones[1], cones[2])) {
      return Classification::spherical(
          SphericalType::vertex(cones[0], cones[1], cones[2]));
    }
  }
  int sign = euler_characteristic_sign(s);
  if (sign > 0) {
    // Every good closed orientable 2-orbifold with positive chi is one of
    // the spherical cases handled above.
    std::ostringstream os;
    os << "positive Euler characteristic outside the spherical cases: genus "
       << s.genus << " with " << cones.size() << " cone points";
    throw std::logic_error(os.str());
  }
  return sign == 0 ? Classification::euclidean() : Classification::hyperbolic();
}

}  // namespace orbsum
