#include "orbsum/spherical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orbsum/error.hpp"

namespace orbsum {

ConeOrder::ConeOrder(int value) : value_(value) {
  if (value < 2) {
    throw std::invalid_argument("cone order must be >= 2, got " +
                                std::to_string(value));
  }
}

bool is_admissible_vertex_triple(ConeOrder p, ConeOrder q, ConeOrder r) {
  std::array<int, 3> t{p.value(), q.value(), r.value()};
  std::sort(t.begin(), t.end());
  if (t[0] == 2 && t[1] == 2) return true;
  return t[0] == 2 && t[1] == 3 && t[2] >= 3 && t[2] <= 5;
}

Triple make_vertex_triple(ConeOrder p, ConeOrder q, ConeOrder r) {
  if (!is_admissible_vertex_triple(p, q, r)) {
    std::ostringstream os;
    os << "inadmissible vertex triple (" << p.value() << "," << q.value()
       << "," << r.value() << ")";
    throw std::invalid_argument(os.str());
  }
  Triple t{p, q, r};
  std::sort(t.begin(), t.end());
  return t;
}

SphericalType SphericalType::ordinary() {
  return SphericalType(Kind::Ordinary, {0, 0, 0});
}

SphericalType SphericalType::cyclic(ConeOrder p) {
  return SphericalType(Kind::Cyclic, {p.value(), 0, 0});
}

SphericalType SphericalType::vertex(ConeOrder p, ConeOrder q, ConeOrder r) {
  Triple t = make_vertex_triple(p, q, r);
  return SphericalType(Kind::Vertex,
                       {t[0].value(), t[1].value(), t[2].value()});
}

SphericalType SphericalType::vertex(const Triple& t) {
  return vertex(t[0], t[1], t[2]);
}

ConeOrder SphericalType::order() const {
  if (kind_ != Kind::Cyclic) {
    throw std::logic_error("order() on a non-cyclic spherical type");
  }
  return ConeOrder(orders_[0]);
}

Triple SphericalType::triple() const {
  if (kind_ != Kind::Vertex) {
    throw std::logic_error("triple() on a non-vertex spherical type");
  }
  return Triple{ConeOrder(orders_[0]), ConeOrder(orders_[1]),
                ConeOrder(orders_[2])};
}

std::string SphericalType::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Ordinary:
      os << "ordinary";
      break;
    case Kind::Cyclic:
      os << "cyclic(" << orders_[0] << ")";
      break;
    case Kind::Vertex:
      os << "vertex(" << orders_[0] << "," << orders_[1] << "," << orders_[2]
         << ")";
      break;
  }
  return os.str();
}

SphericalType cap_punctured_discal(const std::vector<SphericalType>& boundary,
                                   std::size_t keep) {
  if (keep >= boundary.size()) {
    throw std::out_of_range("cap_punctured_discal: keep index out of range");
  }
  int kept_class = boundary[keep].complexity_class();
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (boundary[i].complexity_class() > kept_class) {
      raise(ErrorCode::MaximalityViolation,
            "boundary component " + std::to_string(i) + " (" +
                boundary[i].to_string() + ") is more complicated than kept " +
                boundary[keep].to_string());
    }
  }
  return boundary[keep];
}

}  // namespace orbsum
