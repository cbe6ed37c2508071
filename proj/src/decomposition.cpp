#include "clq/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace clq {

int distinguished_point(const PG3& pg) {
  PG3::Vec4 v{};
  v[0] = pg.tbl->f_one;
  return pg.point_index.at(PG3::vkey(v));
}

PG3::Vec4 distinguished_plane(const PG3& pg) {
  PG3::Vec4 v{};
  v[0] = pg.tbl->f_one;
  return v;
}

std::vector<int> line_classes(const PG3& pg, const std::vector<char>& in_l1) {
  if (in_l1.size() != pg.lines.size()) throw ParameterError("line membership has wrong length");
  const PG3::Vec4 pi = distinguished_plane(pg);
  const int P = distinguished_point(pg);
  std::vector<int> cls(pg.lines.size(), L2);
  for (int li = 0; li < (int)pg.lines.size(); ++li) {
    bool in_pi = pg.line_in_plane(li, pi);
    bool through_p = std::binary_search(pg.lines[li].pts.begin(), pg.lines[li].pts.end(), P);
    if (in_pi)
      cls[li] = LINE_PI;
    else if (through_p)
      cls[li] = STAR_P;
    else if (in_l1[li])
      cls[li] = L1;
    if (in_l1[li] && (in_pi || through_p))
      throw ParameterError("L1 meets line(pi) or star(P)");
  }
  return cls;
}

DegreeClassification line_degrees(const PG3& pg, const std::vector<char>& in_l1) {
  DegreeClassification out;
  const PG3::Vec4 pi = distinguished_plane(pg);
  const int P = distinguished_point(pg);
  out.degree.assign(pg.points.size(), 0);
  out.point_class.assign(pg.points.size(), UNCLASSIFIED);

  for (int pt = 0; pt < (int)pg.points.size(); ++pt) {
    long long d = 0;
    for (int li : pg.lines_through[pt])
      if (in_l1[li]) ++d;
    out.degree[pt] = d;
  }

  std::set<long long> vals;
  for (int pt = 0; pt < (int)pg.points.size(); ++pt) {
    if (pg.point_on_plane(pg.points[pt], pi)) {
      out.point_class[pt] = IN_PI;
    } else if (pt == P) {
      out.point_class[pt] = IS_P;
    } else {
      vals.insert(out.degree[pt]);
    }
  }
  out.spectrum.assign(vals.begin(), vals.end());
  out.two_valued = (vals.size() == 2);
  if (out.two_valued) {
    out.d1 = out.spectrum[0];
    out.d2 = out.spectrum[1];
    for (int pt = 0; pt < (int)pg.points.size(); ++pt)
      if (out.point_class[pt] == UNCLASSIFIED)
        out.point_class[pt] = (out.degree[pt] == out.d1) ? P1 : P2;
  }
  return out;
}

PlaneProfiles plane_profiles(const PG3& pg, const std::vector<char>& in_l1) {
  PlaneProfiles out;
  const int q = pg.q;
  auto lcls = line_classes(pg, in_l1);
  const PG3::Vec4 pi = distinguished_plane(pg);
  std::ostringstream detail;
  out.pass = true;

  std::set<long long> vals;
  for (int pl = 0; pl < (int)pg.planes.size(); ++pl) {
    const PG3::Vec4& v = pg.planes[pl];
    if (v == pi) continue;
    if (v[0] == 0) continue;  // P on the plane
    out.admissible.push_back(pl);
    long long c_pi = 0, c_star = 0, c1 = 0, c2 = 0;
    for (int li : pg.lines_in_plane(v)) {
      switch (lcls[li]) {
        case LINE_PI: ++c_pi; break;
        case STAR_P: ++c_star; break;
        case L1: ++c1; break;
        default: ++c2; break;
      }
    }
    out.l1_counts.push_back(c1);
    vals.insert(c1);
    if (c_pi != 1 || c_star != 0 || c_pi + c_star + c1 + c2 != (long long)q * q + q + 1) {
      out.pass = false;
      detail << "plane " << pl << ": line(pi)=" << c_pi << " star(P)=" << c_star
             << " L1=" << c1 << " L2=" << c2 << "; ";
    }
  }
  out.spectrum.assign(vals.begin(), vals.end());
  out.two_valued = (vals.size() == 2);
  out.detail = detail.str();
  return out;
}

TacticalReport tactical_check(const PG3& pg, const std::vector<char>& in_l1,
                              const DegreeClassification& classes) {
  TacticalReport rep;
  auto lcls = line_classes(pg, in_l1);
  const auto& pcls = classes.point_class;
  for (int c : pcls)
    if (c == UNCLASSIFIED) {
      rep.failure = "point classification incomplete (degree spectrum not two-valued)";
      return rep;
    }

  std::array<std::array<long long, 4>, 4> pt_tab{}, ln_tab{};
  std::array<std::array<bool, 4>, 4> pt_set{}, ln_set{};
  std::ostringstream fail;

  for (int pt = 0; pt < (int)pg.points.size(); ++pt) {
    std::array<long long, 4> cnt{};
    for (int li : pg.lines_through[pt]) ++cnt[lcls[li]];
    int pc = pcls[pt];
    for (int j = 0; j < 4; ++j) {
      if (!pt_set[pc][j]) {
        pt_tab[pc][j] = cnt[j];
        pt_set[pc][j] = true;
      } else if (pt_tab[pc][j] != cnt[j]) {
        fail << "cell (point-class " << pc << ", line-class " << j << "): point " << pt
             << " sees " << cnt[j] << " expected " << pt_tab[pc][j] << "; ";
      }
    }
  }
  for (int li = 0; li < (int)pg.lines.size(); ++li) {
    std::array<long long, 4> cnt{};
    for (int pt : pg.lines[li].pts) ++cnt[pcls[pt]];
    int lc = lcls[li];
    for (int i = 0; i < 4; ++i) {
      if (!ln_set[lc][i]) {
        ln_tab[lc][i] = cnt[i];
        ln_set[lc][i] = true;
      } else if (ln_tab[lc][i] != cnt[i]) {
        fail << "cell (line-class " << lc << ", point-class " << i << "): line " << li
             << " carries " << cnt[i] << " expected " << ln_tab[lc][i] << "; ";
      }
    }
  }

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      rep.point_table[i][j] = pt_tab[i][j];
      rep.line_table[i][j] = ln_tab[j][i];
    }
  rep.failure = fail.str();
  rep.pass = rep.failure.empty();
  return rep;
}

AffineTwoIntersectionSet extract_affine(const PG3& pg, const DegreeClassification& classes,
                                        int plane_index) {
  const int q = pg.q;
  AffineTwoIntersectionSet out;
  out.plane = plane_index;
  const PG3::Vec4& v = pg.planes[plane_index];
  const PG3::Vec4 pi = distinguished_plane(pg);
  if (v == pi) throw ParameterError("carrier plane equals pi");
  if (v[0] == 0) throw ParameterError("carrier plane contains P");
  for (int c : classes.point_class)
    if (c == UNCLASSIFIED) throw ParameterError("degree classification incomplete");

  // the infinite line pi' ∩ pi is the unique line of pi inside pi'
  out.infinite_line = -1;
  std::vector<int> affine_lines;
  for (int li : pg.lines_in_plane(v)) {
    if (pg.line_in_plane(li, pi)) {
      if (out.infinite_line >= 0) throw std::runtime_error("two infinite lines");
      out.infinite_line = li;
    } else {
      affine_lines.push_back(li);
    }
  }
  if (out.infinite_line < 0) throw std::runtime_error("no infinite line");

  std::vector<char> in_k(pg.points.size(), 0);
  for (int pt = 0; pt < (int)pg.points.size(); ++pt) {
    if (classes.point_class[pt] == P1 && pg.point_on_plane(pg.points[pt], v)) {
      in_k[pt] = 1;
      out.k_points.push_back(pt);
    }
  }

  for (int li : affine_lines) {
    long long c = 0;
    for (int pt : pg.lines[li].pts)
      if (in_k[pt]) ++c;
    ++out.spectrum[c];
  }

  out.two_valued = (out.spectrum.size() == 2);
  if (out.two_valued) {
    out.m = out.spectrum.begin()->first;
    out.n = out.spectrum.rbegin()->first;
    long long a = out.spectrum.at(out.m), b = out.spectrum.at(out.n);
    long long K = (long long)out.k_points.size();
    auto c2 = [](long long t) { return t * (t - 1) / 2; };
    out.counting_ok = (a + b == (long long)q * q + q) && (K * (q + 1) == out.m * a + out.n * b) &&
                      (c2(K) == c2(out.m) * a + c2(out.n) * b);
  }
  return out;
}

}  // namespace clq
