#include <doctest.h>

#include <random>
#include <set>

#include "clq/pg.hpp"

using namespace clq;

namespace {
struct Ctx {
  FieldTable tbl;
  Quadric qd;
  PG3 pg;
  Ctx(long long q) : tbl(make_field(q)), qd(enumerate_quadric(tbl)), pg(enumerate_pg3(tbl)) {}
};
}  // namespace

TEST_CASE("counts at q=5") {
  Ctx c(5);
  CHECK(c.pg.points.size() == 156);
  CHECK(c.pg.lines.size() == 806);  // equals the quadric point count
  CHECK(c.pg.lines.size() == c.qd.size());
  for (const auto& l : c.pg.lines) CHECK(l.pts.size() == 6);
}

TEST_CASE("Plucker relation holds for every line") {
  Ctx c(5);
  const auto& t = c.tbl;
  for (const auto& l : c.pg.lines) {
    int s = 0;
    for (int k = 0; k < 3; ++k) s = t.fadd(s, t.fmul(l.pl[k], l.pl[k + 3]));
    REQUIRE(s == 0);
  }
}

TEST_CASE("klein map is a bijection onto the quadric at q=5") {
  Ctx c(5);
  std::set<std::uint32_t> images;
  for (int li = 0; li < (int)c.pg.lines.size(); ++li) {
    std::uint32_t p = klein_map(c.pg, li, c.qd);  // index_of validates T(xy)=0
    images.insert(p);
    CHECK(klein_inverse(c.pg, p, c.qd) == li);
  }
  CHECK(images.size() == c.qd.size());
}

TEST_CASE("klein map preserves incidence both ways, exhaustive at q=5") {
  Ctx c(5);
  std::vector<std::uint32_t> img(c.pg.lines.size());
  for (int li = 0; li < (int)c.pg.lines.size(); ++li) img[li] = klein_map(c.pg, li, c.qd);
  for (int i = 0; i < (int)c.pg.lines.size(); ++i)
    for (int j = i + 1; j < (int)c.pg.lines.size(); ++j) {
      bool meet = c.pg.lines_meet(i, j);
      bool coll = c.qd.collinear(img[i], img[j]);
      if (meet != coll) {
        CAPTURE(i);
        CAPTURE(j);
        REQUIRE(meet == coll);
      }
    }
}

TEST_CASE("lines through (1:0:0:0) map into pi1") {
  Ctx c(5);
  PG3::Vec4 e0{};
  e0[0] = c.tbl.f_one;
  int p0 = c.pg.point_index.at(PG3::vkey(e0));
  CHECK(c.pg.lines_through[p0].size() == 31);
  for (int li : c.pg.lines_through[p0]) {
    const auto& l = c.pg.lines[li];
    CHECK(l.pl[3] == 0);
    CHECK(l.pl[4] == 0);
    CHECK(l.pl[5] == 0);
    std::uint32_t qpt = klein_map(c.pg, li, c.qd);
    CHECK(c.qd.points[qpt].y == 0);
  }
}

TEST_CASE("star and plane-line pencils") {
  Ctx c(5);
  std::mt19937_64 rng(17);
  int P = (int)(rng() % c.pg.points.size());
  auto star = c.pg.star_of_point(P);
  CHECK(star.size() == 31);
  // a plane through the point and one off it
  PG3::Vec4 off_plane{}, on_plane{};
  bool found_on = false, found_off = false;
  for (const auto& pl : c.pg.planes) {
    if (c.pg.point_on_plane(c.pg.points[P], pl) && !found_on) {
      on_plane = pl;
      found_on = true;
    }
    if (!c.pg.point_on_plane(c.pg.points[P], pl) && !found_off) {
      off_plane = pl;
      found_off = true;
    }
  }
  REQUIRE(found_on);
  REQUIRE(found_off);
  auto lines_on = c.pg.lines_in_plane(on_plane);
  auto lines_off = c.pg.lines_in_plane(off_plane);
  CHECK(lines_on.size() == 31);
  CHECK(lines_off.size() == 31);
  int meet_on = 0, meet_off = 0;
  for (int li : lines_on)
    if (std::find(star.begin(), star.end(), li) != star.end()) ++meet_on;
  for (int li : lines_off)
    if (std::find(star.begin(), star.end(), li) != star.end()) ++meet_off;
  CHECK(meet_on == 6);  // q+1 when the point is on the plane
  CHECK(meet_off == 0);
}

TEST_CASE("images of a star and a plane pencil are totally singular planes") {
  Ctx c(5);
  PG3::Vec4 e0{};
  e0[0] = c.tbl.f_one;
  int P = c.pg.point_index.at(PG3::vkey(e0));
  auto star = c.pg.star_of_point(P);
  auto pencil = c.pg.lines_in_plane(c.pg.planes[0]);
  for (auto* fam : {&star, &pencil}) {
    for (int a : *fam)
      for (int b : *fam) {
        std::uint32_t ia = klein_map(c.pg, a, c.qd), ib = klein_map(c.pg, b, c.qd);
        REQUIRE(c.qd.perp(c.qd.points[ia], c.qd.points[ib]));
      }
  }
}

TEST_CASE("regular spread") {
  Ctx c(5);
  auto spread = regular_spread(c.pg);
  CHECK(spread.size() == 26);  // q^2+1
  std::vector<char> covered(c.pg.points.size(), 0);
  for (int li : spread)
    for (int pt : c.pg.lines[li].pts) {
      CHECK(!covered[pt]);  // pairwise disjoint
      covered[pt] = 1;
    }
  CHECK(std::count(covered.begin(), covered.end(), (char)1) == 156);

  // image under kappa: pairwise non-collinear quadric points
  for (int a : spread)
    for (int b : spread) {
      if (a == b) continue;
      std::uint32_t ia = klein_map(c.pg, a, c.qd), ib = klein_map(c.pg, b, c.qd);
      CHECK_FALSE(c.qd.perp(c.qd.points[ia], c.qd.points[ib]));
    }
}

TEST_CASE("spread count at q=9") {
  Ctx c(9);
  auto spread = regular_spread(c.pg);
  CHECK(spread.size() == 82);
  std::vector<char> covered(c.pg.points.size(), 0);
  long long total = 0;
  for (int li : spread)
    for (int pt : c.pg.lines[li].pts) {
      REQUIRE(!covered[pt]);
      covered[pt] = 1;
      ++total;
    }
  CHECK(total == (long long)c.pg.points.size());
}

TEST_CASE("random collineation images of the spread are spreads") {
  Ctx c(5);
  auto spread = regular_spread(c.pg);
  std::mt19937_64 rng(42);
  for (int k = 0; k < 5; ++k) {
    auto img = apply_random_collineation(c.pg, spread, rng);
    CHECK(img.size() == 26);
    std::vector<char> covered(c.pg.points.size(), 0);
    for (int li : img)
      for (int pt : c.pg.lines[li].pts) {
        REQUIRE(!covered[pt]);
        covered[pt] = 1;
      }
  }
}

TEST_CASE("degenerate spans are rejected") {
  Ctx c(5);
  PG3::Vec4 a = c.pg.points[10];
  CHECK_THROWS_AS(c.pg.plucker_of_span(a, a), ParameterError);
}
