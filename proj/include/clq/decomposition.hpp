#ifndef CLQ_DECOMPOSITION_HPP
#define CLQ_DECOMPOSITION_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "clq/pg.hpp"

namespace clq {

// Point classes of the tactical decomposition: the distinguished plane pi
// (dual vector (1,0,0,0)), the distinguished point P = (1:0:0:0), and the
// two line-degree classes.
enum PointClass { IN_PI = 0, IS_P = 1, P1 = 2, P2 = 3, UNCLASSIFIED = 4 };

// Line classes: line(pi), star(P), L1, L2.
enum LineClass { LINE_PI = 0, STAR_P = 1, L1 = 2, L2 = 3 };

int distinguished_point(const PG3& pg);            // index of P
PG3::Vec4 distinguished_plane(const PG3& pg);      // dual vector of pi

// Line class of every line given L1 membership; throws if L1 meets
// line(pi) or star(P).
std::vector<int> line_classes(const PG3& pg, const std::vector<char>& in_l1);

struct DegreeClassification {
  std::vector<long long> degree;     // L1-degree per point
  std::vector<int> point_class;      // PointClass per point
  std::vector<long long> spectrum;   // distinct degrees off pi and P, sorted
  long long d1 = -1, d2 = -1;        // the two values when two_valued
  bool two_valued = false;
};

DegreeClassification line_degrees(const PG3& pg, const std::vector<char>& in_l1);

struct PlaneProfiles {
  std::vector<int> admissible;       // plane indices with pi' != pi, P not on pi'
  std::vector<long long> l1_counts;  // lines of L1 inside each admissible plane
  std::vector<long long> spectrum;   // distinct values, sorted
  bool two_valued = false;
  bool pass = false;                 // one line of line(pi), none of star(P), sum identity
  std::string detail;
};

PlaneProfiles plane_profiles(const PG3& pg, const std::vector<char>& in_l1);

struct TacticalReport {
  bool pass = false;
  // point_table[i][j]: lines of line-class j through a point of point-class i
  std::array<std::array<long long, 4>, 4> point_table{};
  // line_table[i][j]: points of point-class i on a line of line-class j
  std::array<std::array<long long, 4>, 4> line_table{};
  std::string failure;  // names the first non-constant cell, with witnesses
};

TacticalReport tactical_check(const PG3& pg, const std::vector<char>& in_l1,
                              const DegreeClassification& classes);

struct AffineTwoIntersectionSet {
  int plane = -1;                        // carrier plane pi'
  int infinite_line = -1;                // pi' ∩ pi
  std::vector<int> k_points;             // K, point indices
  std::map<long long, long long> spectrum;  // line intersection size -> count
  bool two_valued = false;
  long long m = -1, n = -1;
  bool counting_ok = false;              // exact identities for a two-valued set
};

AffineTwoIntersectionSet extract_affine(const PG3& pg, const DegreeClassification& classes,
                                        int plane_index);

}  // namespace clq

#endif
