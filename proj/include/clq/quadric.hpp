#ifndef CLQ_QUADRIC_HPP
#define CLQ_QUADRIC_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "clq/field.hpp"

namespace clq {

// Points of the hyperbolic quadric Q+(5,q) in the model V = E^2 over F,
// quadratic form Q(x,y) = T(xy).  A point is the F*-class of a pair (x,y),
// normalized so that the leading F-coordinate (basis {1, Omega, Omega^2},
// coordinate of 1 first; x inspected before y) equals 1.
struct Quadric {
  struct Pt {
    std::uint32_t x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  };

  const FieldTable* tbl = nullptr;
  std::vector<Pt> points;
  std::unordered_map<std::uint64_t, std::uint32_t> index_map;

  long long q() const { return tbl->q; }
  std::size_t size() const { return points.size(); }

  static std::uint64_t key(std::uint32_t x, std::uint32_t y) {
    return ((std::uint64_t)x << 32) | y;
  }

  Pt normalize(std::uint32_t x, std::uint32_t y) const;

  std::uint32_t index_of(std::uint32_t x, std::uint32_t y) const {
    Pt n = normalize(x, y);
    auto it = index_map.find(key(n.x, n.y));
    if (it == index_map.end()) throw ParameterError("pair is not on the quadric");
    return it->second;
  }

  // polar form f(u,v) = T(u1 v2) + T(u2 v1) = T(u1 v2 + u2 v1), as an E-code in F
  std::uint32_t polar(const Pt& u, const Pt& v) const {
    return tbl->trace(tbl->add(tbl->mul(u.x, v.y), tbl->mul(u.y, v.x)));
  }

  bool perp(const Pt& u, const Pt& v) const {
    return tbl->trace_zero[tbl->add(tbl->mul(u.x, v.y), tbl->mul(u.y, v.x))];
  }

  // collinearity graph adjacency: distinct points joined by a singular line
  bool collinear(std::uint32_t i, std::uint32_t j) const {
    return i != j && perp(points[i], points[j]);
  }
};

Quadric enumerate_quadric(const FieldTable& tbl);

}  // namespace clq

#endif
