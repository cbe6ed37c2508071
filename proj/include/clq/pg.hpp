#ifndef CLQ_PG_HPP
#define CLQ_PG_HPP

#include <array>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "clq/quadric.hpp"

namespace clq {

// PG(3,q) with coordinates stored as indices into FieldTable::f_elements.
// Points and plane duals are normalized with first nonzero coordinate 1.
// Lines carry their reduced-echelon spanning rows and a normalized Plucker
// 6-tuple in the order (p01, p02, p03, p23, p31, p12).
struct PG3 {
  using Vec4 = std::array<int, 4>;
  using Plucker = std::array<int, 6>;

  struct Line {
    Vec4 a, b;  // echelon basis rows
    Plucker pl;
    std::vector<int> pts;  // the q+1 point indices, sorted
  };

  const FieldTable* tbl = nullptr;
  int q = 0;

  std::vector<Vec4> points;
  std::vector<Line> lines;
  std::vector<Vec4> planes;  // dual vectors, same enumeration as points
  std::unordered_map<std::uint64_t, int> point_index;
  std::unordered_map<std::uint64_t, int> line_index;       // keyed by Plucker tuple
  std::vector<std::vector<int>> lines_through;             // per point

  static std::uint64_t vkey(const Vec4& v) {
    return ((std::uint64_t)v[0] << 24) | ((std::uint64_t)v[1] << 16) |
           ((std::uint64_t)v[2] << 8) | (std::uint64_t)v[3];
  }
  static std::uint64_t pkey(const Plucker& p) {
    std::uint64_t k = 0;
    for (int c : p) k = (k << 8) | (std::uint64_t)c;
    return k;
  }

  Vec4 normalize(Vec4 v) const;
  Plucker plucker_of_span(const Vec4& a, const Vec4& b) const;  // normalized; throws on rank<2
  int line_from_points(int pi, int pj) const;
  int line_from_span(const Vec4& a, const Vec4& b) const;

  bool point_on_plane(const Vec4& pt, const Vec4& plane) const;
  bool line_in_plane(int line, const Vec4& plane) const;

  // Laplace expansion of det[a b c d] via the two lines' 2x2 minors
  bool lines_meet(int li, int lj) const {
    const Plucker& u = lines[li].pl;
    const Plucker& v = lines[lj].pl;
    const FieldTable& t = *tbl;
    int s = 0;
    for (int k = 0; k < 3; ++k) {
      s = t.fadd(s, t.fmul(u[k], v[k + 3]));
      s = t.fadd(s, t.fmul(u[k + 3], v[k]));
    }
    return s == 0;
  }

  std::vector<int> lines_in_plane(const Vec4& plane) const;
  std::vector<int> star_of_point(int pt) const { return lines_through[pt]; }
};

PG3 enumerate_pg3(const FieldTable& tbl);

// Klein correspondence between lines of PG(3,q) and points of the quadric.
std::uint32_t klein_map(const PG3& pg, int line, const Quadric& qd);
int klein_inverse(const PG3& pg, std::uint32_t quadric_point, const Quadric& qd);

// The regular spread induced by a GF(q^2)-structure on F^4: q^2+1 pairwise
// disjoint lines covering the point set.
std::vector<int> regular_spread(const PG3& pg);

// Image of a line set under a (seeded) random invertible collineation.
std::vector<int> apply_random_collineation(const PG3& pg, const std::vector<int>& line_set,
                                           std::mt19937_64& rng);

}  // namespace clq

#endif
