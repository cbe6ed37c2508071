#include "clq/quadric.hpp"

namespace clq {

Quadric::Pt Quadric::normalize(std::uint32_t x, std::uint32_t y) const {
  if (!x && !y) throw ParameterError("zero pair");
  std::uint32_t lead = x ? x : y;
  auto c = tbl->f_coords(lead);
  int first = c[0] ? c[0] : (c[1] ? c[1] : c[2]);
  std::uint32_t scale = tbl->inv(tbl->f_elements[first]);
  return {tbl->mul(x, scale), tbl->mul(y, scale)};
}

Quadric enumerate_quadric(const FieldTable& tbl) {
  Quadric qd;
  qd.tbl = &tbl;
  const long long N = tbl.ext_order;
  const long long q = tbl.q;
  const long long expected = (q * q + 1) * (q * q + q + 1);
  qd.points.reserve(expected);

  // normalized representatives of E*/F* (leading F-coordinate equal to 1)
  std::vector<std::uint32_t> reps;
  reps.reserve(q * q + q + 1);
  for (long long z = 1; z < N; ++z) {
    auto c = tbl.f_coords((std::uint32_t)z);
    int first = c[0] ? c[0] : (c[1] ? c[1] : c[2]);
    if (first == tbl.f_one) reps.push_back((std::uint32_t)z);
  }

  // x = 0 block: the plane pi2 = { <(0,y)> }
  for (std::uint32_t y : reps) qd.points.push_back({0, y});
  // x != 0: y ranges over the trace-kernel hyperplane of x
  for (std::uint32_t x : reps) {
    for (long long y = 0; y < N; ++y) {
      if (tbl.trace_zero[tbl.mul(x, (std::uint32_t)y)]) qd.points.push_back({x, (std::uint32_t)y});
    }
  }
  if ((long long)qd.points.size() != expected) throw std::runtime_error("quadric count mismatch");

  qd.index_map.reserve(qd.points.size() * 2);
  for (std::uint32_t i = 0; i < qd.points.size(); ++i)
    qd.index_map.emplace(Quadric::key(qd.points[i].x, qd.points[i].y), i);
  return qd;
}

}  // namespace clq
