#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/geometry.hpp"
#include "type_builder.hpp"

using namespace trop;
using trop::testutil::Builder;

namespace {

QPoint qp(long long x, long long y) { return {Rat(x), Rat(y)}; }

// A line whose two markings subdivide the (-1,0) and (1,1) ends.
CombType line_two_marks() {
  Builder b;
  int v = b.vertex(), m1 = b.vertex(), m2 = b.vertex();
  b.end(v, {0, -1});
  b.bounded(v, m1);
  b.real_mark(m1, 0);
  b.end(m1, {-1, 0});
  b.bounded(v, m2);
  b.real_mark(m2, 1);
  b.end(m2, {1, 1});
  CombType t = b.t;
  t.build_adj();
  REQUIRE(derive_directions(t));
  return t;
}

Degree line_degree(bool fix_left = false) {
  Degree d;
  d.ends = {{{-1, 0}, fix_left}, {{0, -1}, false}, {{1, 1}, false}};
  return d;
}

} // namespace

TEST_CASE("a line through two points") {
  CombType t = line_two_marks();
  Degree deg = line_degree();
  Conditions cond;
  cond.real_pts = {qp(0, 0), qp(3, 1)};

  Placement p = place_curve(t, deg, cond);
  REQUIRE(p.status == PlaceStatus::ok);
  CHECK(p.pos[0] == qp(2, 0));
  CHECK(p.pos[1] == qp(0, 0));
  CHECK(p.pos[2] == qp(3, 1));
  CHECK(p.length[1] == Rat(2));
  CHECK(p.length[4] == Rat(1));

  // The second point right at the vertex: a zero-length bounded edge.
  cond.real_pts[1] = qp(2, 0);
  CHECK(place_curve(t, deg, cond).status == PlaceStatus::degenerate);

  // The second point on the wrong side: the edge length goes negative.
  cond.real_pts[1] = qp(-1, -2);
  CHECK(place_curve(t, deg, cond).status == PlaceStatus::not_realizable);
}

TEST_CASE("the full solver agrees with propagation") {
  CombType t = line_two_marks();
  Degree deg = line_degree();
  Conditions cond;
  cond.real_pts = {qp(0, 0), qp(3, 1)};

  LinearSystem sys = build_system(t, deg, cond);
  REQUIRE(sys.a.size() == 4);
  REQUIRE(sys.cols.size() == 2);
  auto sol = solve_exact(sys);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rat(2)); // root vertex x
  CHECK((*sol)[1] == Rat(0)); // root vertex y
  CHECK((*sol)[2] == Rat(2)); // length toward the first marking
  CHECK((*sol)[3] == Rat(1)); // length toward the second
}

TEST_CASE("fixed ends pin a vertex to a line") {
  // The (-1,0) end is fixed, one marking subdivides the (1,1) end.
  Builder b;
  int v = b.vertex(), m = b.vertex();
  b.end(v, {-1, 0}, true, 0);
  b.end(v, {0, -1}, false, 1);
  b.bounded(v, m);
  b.real_mark(m, 0);
  b.end(m, {1, 1}, false, 2);
  CombType t = b.t;
  t.build_adj();
  REQUIRE(derive_directions(t));

  Degree deg = line_degree(true);
  Conditions cond;
  cond.real_pts = {qp(3, 1)};
  cond.end_offsets = {Rat(0), Rat(0), Rat(0)};

  Placement p = place_curve(t, deg, cond);
  REQUIRE(p.status == PlaceStatus::ok);
  CHECK(p.pos[0] == qp(2, 0)); // det((-1,0), pos) = -y = 0
  CHECK(p.pos[1] == qp(3, 1));

  // Moving the line moves the vertex.
  cond.end_offsets[0] = Rat(1); // -y = 1
  p = place_curve(t, deg, cond);
  REQUIRE(p.status == PlaceStatus::ok);
  CHECK(p.pos[0] == QPoint{Rat(1), Rat(-1)});

  // A line through the marked point itself collapses the bounded edge.
  cond.end_offsets[0] = Rat(-1);
  CHECK(place_curve(t, deg, cond).status == PlaceStatus::degenerate);

  // A line on the far side of the marking flips the edge around.
  cond.end_offsets[0] = Rat(-2);
  CHECK(place_curve(t, deg, cond).status == PlaceStatus::not_realizable);
}

TEST_CASE("rank-deficient types are rejected as singular") {
  // Two markings stacked on the same end chain: their y-conditions repeat,
  // so the square system can never be regular.
  Builder b;
  int v = b.vertex(), m1 = b.vertex(), m2 = b.vertex();
  b.end(v, {0, -1});
  b.end(v, {1, 1});
  b.bounded(v, m1);
  b.real_mark(m1, 0);
  b.bounded(m1, m2);
  b.real_mark(m2, 1);
  b.end(m2, {-1, 0});
  CombType t = b.t;
  t.build_adj();
  REQUIRE(derive_directions(t));
  Degree deg = line_degree();

  Conditions cond;
  cond.real_pts = {qp(0, 0), qp(5, 1)}; // different heights: plainly impossible
  CHECK(place_curve(t, deg, cond).status == PlaceStatus::not_realizable);

  cond.real_pts = {qp(0, 0), qp(5, 0)}; // aligned: the matrix itself is singular
  CHECK(place_curve(t, deg, cond).status == PlaceStatus::singular);
  CHECK_FALSE(solve_exact(build_system(t, deg, cond)).has_value());
}

TEST_CASE("condition counting") {
  // One marking on a line: two conditions, three degrees of freedom.
  Builder b;
  int v = b.vertex(), m = b.vertex();
  b.end(v, {-1, 0});
  b.end(v, {0, -1});
  b.bounded(v, m);
  b.real_mark(m, 0);
  b.end(m, {1, 1});
  CombType t = b.t;
  t.build_adj();
  REQUIRE(derive_directions(t));
  Conditions cond;
  cond.real_pts = {qp(0, 0)};
  CHECK(place_curve(t, line_degree(), cond).status == PlaceStatus::not_square);
}

TEST_CASE("placement of a curve with double ends") {
  // The all-even curve: ends (-2,0), a double (0,-2) and a double (2,2),
  // complex markings at the two double-end vertices.
  Builder b;
  int v0 = b.vertex(), v1 = b.vertex(), v2 = b.vertex();
  b.end(v0, {-2, 0});
  b.bounded(v0, v1);
  b.bounded(v0, v2);
  b.complex_mark(v1, 0);
  b.pair_end(v1, {0, -2}, 1, 2);
  b.complex_mark(v2, 1);
  b.pair_end(v2, {2, 2}, 3, 4);
  CombType t = b.t;
  t.build_adj();
  REQUIRE(derive_directions(t));

  Degree deg;
  deg.ends = {{{-2, 0}, false}, {{0, -1}, false}, {{0, -1}, false},
              {{1, 1}, false}, {{1, 1}, false}};

  Conditions cond;
  cond.complex_pts = {qp(0, -3), qp(4, 4)};
  Placement p = place_curve(t, deg, cond);
  REQUIRE(p.status == PlaceStatus::ok);
  CHECK(p.pos[0] == qp(0, 0));
  CHECK(p.length[1] == Rat(3, 2));
  CHECK(p.length[2] == Rat(2));

  cond.complex_pts = {qp(0, -3), qp(0, 0)};
  CHECK(place_curve(t, deg, cond).status == PlaceStatus::degenerate);

  cond.complex_pts = {qp(0, -3), qp(-4, -4)};
  CHECK(place_curve(t, deg, cond).status == PlaceStatus::not_realizable);
}

TEST_CASE("placement survives small perturbations of the conditions") {
  CombType t = line_two_marks();
  Degree deg = line_degree();
  const Rat eps(1, 1000000);
  for (int sx : {-1, 0, 1}) {
    for (int sy : {-1, 0, 1}) {
      Conditions cond;
      cond.real_pts = {qp(0, 0), {Rat(3) + Rat(sx) * eps, Rat(1) + Rat(sy) * eps}};
      Placement p = place_curve(t, deg, cond);
      REQUIRE(p.status == PlaceStatus::ok);
      CHECK(p.length[1] > 0);
      CHECK(p.length[4] > 0);
      // the vertex slides off (2,0) by an amount of the same order
      CHECK((p.pos[0].x - Rat(2)) * Rat(1000000) >= Rat(-2));
      CHECK((p.pos[0].x - Rat(2)) * Rat(1000000) <= Rat(2));
    }
  }
}
