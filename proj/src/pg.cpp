#include "clq/pg.hpp"

#include <algorithm>

namespace clq {

namespace {

int dot4(const FieldTable& t, const PG3::Vec4& a, const PG3::Vec4& b) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s = t.fadd(s, t.fmul(a[i], b[i]));
  return s;
}

int det4(const FieldTable& t, const std::array<PG3::Vec4, 4>& m) {
  // Laplace along first two rows
  auto minor2 = [&](int c1, int c2, int r1, int r2) {
    return t.fsub(t.fmul(m[r1][c1], m[r2][c2]), t.fmul(m[r1][c2], m[r2][c1]));
  };
  static const int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
  int s = 0;
  for (int k = 0; k < 3; ++k) {
    s = t.fadd(s, t.fmul(minor2(idx[k][0], idx[k][1], 0, 1), minor2(idx[k + 3][0], idx[k + 3][1], 2, 3)));
    s = t.fadd(s, t.fmul(minor2(idx[k + 3][0], idx[k + 3][1], 0, 1), minor2(idx[k][0], idx[k][1], 2, 3)));
  }
  return s;
}

}  // namespace

PG3::Vec4 PG3::normalize(Vec4 v) const {
  int lead = -1;
  for (int i = 0; i < 4 && lead < 0; ++i)
    if (v[i]) lead = i;
  if (lead < 0) throw ParameterError("zero vector");
  int s = tbl->finv(v[lead]);
  for (auto& c : v) c = tbl->fmul(c, s);
  return v;
}

PG3::Plucker PG3::plucker_of_span(const Vec4& a, const Vec4& b) const {
  const FieldTable& t = *tbl;
  auto mn = [&](int i, int j) { return t.fsub(t.fmul(a[i], b[j]), t.fmul(a[j], b[i])); };
  Plucker p = {mn(0, 1), mn(0, 2), mn(0, 3), mn(2, 3), mn(3, 1), mn(1, 2)};
  int lead = -1;
  for (int i = 0; i < 6 && lead < 0; ++i)
    if (p[i]) lead = i;
  if (lead < 0) throw ParameterError("degenerate span");
  int s = t.finv(p[lead]);
  for (auto& c : p) c = t.fmul(c, s);
  return p;
}

int PG3::line_from_points(int pi, int pj) const {
  return line_from_span(points[pi], points[pj]);
}

int PG3::line_from_span(const Vec4& a, const Vec4& b) const {
  auto it = line_index.find(pkey(plucker_of_span(a, b)));
  if (it == line_index.end()) throw ParameterError("span does not define a known line");
  return it->second;
}

bool PG3::point_on_plane(const Vec4& pt, const Vec4& plane) const {
  return dot4(*tbl, pt, plane) == 0;
}

bool PG3::line_in_plane(int line, const Vec4& plane) const {
  const Line& l = lines[line];
  return dot4(*tbl, l.a, plane) == 0 && dot4(*tbl, l.b, plane) == 0;
}

std::vector<int> PG3::lines_in_plane(const Vec4& plane) const {
  std::vector<int> out;
  for (int i = 0; i < (int)lines.size(); ++i)
    if (line_in_plane(i, plane)) out.push_back(i);
  return out;
}

PG3 enumerate_pg3(const FieldTable& tbl) {
  PG3 pg;
  pg.tbl = &tbl;
  pg.q = (int)tbl.q;
  const int q = pg.q;
  const int one = tbl.f_one;

  // normalized points in lexicographic coordinate order
  for (int lead = 0; lead < 4; ++lead) {
    PG3::Vec4 v{};
    v[lead] = one;
    int nfree = 3 - lead;
    long long total = 1;
    for (int i = 0; i < nfree; ++i) total *= q;
    for (long long m = 0; m < total; ++m) {
      long long mm = m;
      for (int i = 3; i > lead; --i) {
        v[i] = (int)(mm % q);
        mm /= q;
      }
      pg.points.push_back(v);
    }
  }
  pg.planes = pg.points;
  for (int i = 0; i < (int)pg.points.size(); ++i)
    pg.point_index.emplace(PG3::vkey(pg.points[i]), i);

  // lines as reduced-echelon 2x4 matrices, grouped by pivot columns
  static const int pivots[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  pg.lines_through.resize(pg.points.size());
  for (auto [pi, pj] : pivots) {
    std::array<int, 2> rest{};
    int nr = 0;
    for (int c = 0; c < 4; ++c)
      if (c != pi && c != pj) rest[nr++] = c;
    std::vector<int> free_a, free_b;
    for (int c : rest)
      if (c > pi) free_a.push_back(c);
    for (int c : rest)
      if (c > pj) free_b.push_back(c);
    int na = (int)free_a.size(), nb = (int)free_b.size();
    long long total = 1;
    for (int i = 0; i < na + nb; ++i) total *= q;
    for (long long m = 0; m < total; ++m) {
      PG3::Line l;
      l.a = {};
      l.b = {};
      l.a[pi] = one;
      l.b[pj] = one;
      long long mm = m;
      for (int i = nb - 1; i >= 0; --i) {
        l.b[free_b[i]] = (int)(mm % q);
        mm /= q;
      }
      for (int i = na - 1; i >= 0; --i) {
        l.a[free_a[i]] = (int)(mm % q);
        mm /= q;
      }
      l.pl = pg.plucker_of_span(l.a, l.b);
      l.pts.reserve(q + 1);
      l.pts.push_back(pg.point_index.at(PG3::vkey(pg.normalize(l.a))));
      for (int lam = 0; lam < q; ++lam) {
        PG3::Vec4 v;
        for (int c = 0; c < 4; ++c) v[c] = tbl.fadd(l.b[c], tbl.fmul(lam, l.a[c]));
        l.pts.push_back(pg.point_index.at(PG3::vkey(pg.normalize(v))));
      }
      std::sort(l.pts.begin(), l.pts.end());
      int id = (int)pg.lines.size();
      pg.lines.push_back(std::move(l));
      pg.line_index.emplace(PG3::pkey(pg.lines.back().pl), id);
      for (int pt : pg.lines.back().pts) pg.lines_through[pt].push_back(id);
    }
  }
  if ((long long)pg.lines.size() != (long long)(q * q + 1) * (q * q + q + 1))
    throw std::runtime_error("line count mismatch");
  return pg;
}

std::uint32_t klein_map(const PG3& pg, int line, const Quadric& qd) {
  const FieldTable& t = *pg.tbl;
  const PG3::Plucker& p = pg.lines[line].pl;
  std::uint32_t x = 0, y = 0;
  for (int i = 0; i < 3; ++i) {
    x = t.add(x, t.mul(t.f_elements[p[i]], t.basis[i]));
    y = t.add(y, t.mul(t.f_elements[p[i + 3]], t.dual[i]));
  }
  return qd.index_of(x, y);
}

int klein_inverse(const PG3& pg, std::uint32_t quadric_point, const Quadric& qd) {
  const FieldTable& t = *pg.tbl;
  const Quadric::Pt& P = qd.points[quadric_point];
  auto xc = t.f_coords(P.x);
  PG3::Plucker p;
  for (int i = 0; i < 3; ++i) {
    p[i] = xc[i];
    p[i + 3] = t.f_index_of_code[t.trace(t.mul(P.y, t.basis[i]))];
  }
  int lead = -1;
  for (int i = 0; i < 6 && lead < 0; ++i)
    if (p[i]) lead = i;
  if (lead < 0) throw ParameterError("zero Plucker tuple");
  int s = t.finv(p[lead]);
  for (auto& c : p) c = t.fmul(c, s);
  auto it = pg.line_index.find(PG3::pkey(p));
  if (it == pg.line_index.end()) throw ParameterError("no line with these Plucker coordinates");
  return it->second;
}

std::vector<int> regular_spread(const PG3& pg) {
  const FieldTable& t = *pg.tbl;
  const int q = pg.q;
  // smallest (alpha, beta) with t^2 - alpha t - beta irreducible over F
  int alpha = -1, beta = -1;
  for (int a = 0; a < q && alpha < 0; ++a) {
    for (int b = 0; b < q && alpha < 0; ++b) {
      bool has_root = false;
      for (int s = 0; s < q && !has_root; ++s)
        has_root = (t.fmul(s, s) == t.fadd(t.fmul(a, s), b));
      if (!has_root) {
        alpha = a;
        beta = b;
      }
    }
  }
  if (alpha < 0) throw std::runtime_error("no irreducible quadratic");  // impossible

  // K = F[t]/(t^2 - alpha t - beta); lines are the K-1-subspaces of K^2
  std::vector<int> out;
  out.reserve(q * q + 1);
  PG3::Vec4 u = {0, 0, t.f_one, 0}, v = {0, 0, 0, t.f_one};
  out.push_back(pg.line_from_span(u, v));
  for (int s0 = 0; s0 < q; ++s0) {
    for (int s1 = 0; s1 < q; ++s1) {
      PG3::Vec4 a = {t.f_one, 0, s0, s1};
      PG3::Vec4 b = {0, t.f_one, t.fmul(beta, s1), t.fadd(s0, t.fmul(alpha, s1))};
      out.push_back(pg.line_from_span(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> apply_random_collineation(const PG3& pg, const std::vector<int>& line_set,
                                           std::mt19937_64& rng) {
  const FieldTable& t = *pg.tbl;
  const int q = pg.q;
  std::array<PG3::Vec4, 4> m;
  do {
    for (auto& row : m)
      for (auto& c : row) c = (int)(rng() % q);
  } while (det4(t, m) == 0);

  auto apply = [&](const PG3::Vec4& v) {
    PG3::Vec4 r{};
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) r[j] = t.fadd(r[j], t.fmul(v[i], m[i][j]));
    return r;
  };
  std::vector<int> out;
  out.reserve(line_set.size());
  for (int li : line_set)
    out.push_back(pg.line_from_span(apply(pg.lines[li].a), apply(pg.lines[li].b)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clq
