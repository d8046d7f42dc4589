#include <doctest.h>

#include <random>

#include "pairwalls/cohom.hpp"

using namespace pairwalls;

namespace {

std::mt19937 rng(90125);

StdSheaf random_sheaf() {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<i64> tw(-8, 8), deg(1, 5), len(0, 6);
  switch (kind(rng)) {
    case 0: return StdSheaf::line_bundle(tw(rng));
    case 1: return StdSheaf::plane(tw(rng));
    case 2: return StdSheaf::line(tw(rng));
    case 3: return StdSheaf::planar_curve(deg(rng), tw(rng));
    case 4: return StdSheaf::points(len(rng));
    default: {
      i64 d = deg(rng);
      std::uniform_int_distribution<i64> extra(0, 4);
      SchemeClass z = SchemeClass::curve(d, min_euler(d) + extra(rng), true);
      return StdSheaf::ideal_of(z, tw(rng));
    }
  }
}

}  // namespace

TEST_CASE("cohomology of the standard sheaves") {
  CHECK(h(StdSheaf::planar_curve(3, -4)).h1 == 12);  // plane cubic
  CHECK(h(StdSheaf::line(-4)).h1 == 3);
  Hdims pts = h(StdSheaf::points(2));
  CHECK(pts.h0 == 2);
  CHECK(pts.h1 == 0);
  CHECK(h(StdSheaf::line_bundle(2)).h0 == 10);
  CHECK(h(StdSheaf::line_bundle(-4)).h3 == 1);
  CHECK(h(StdSheaf::line_bundle(-3)).h3 == 0);
  CHECK(h(StdSheaf::plane(1)).h0 == 3);
  CHECK(h(StdSheaf::plane(-3)).h2 == 1);
  CHECK(h(StdSheaf::plane(-2)).h2 == 0);
  CHECK(h(StdSheaf::line(1)).h0 == 2);
  CHECK(h(StdSheaf::planar_curve(2, -4)).h1 == 7);
  CHECK(h(StdSheaf::planar_curve(1, -4)).h1 == 3);
}

TEST_CASE("ideal sheaves with general-position points") {
  // h^1(I_A) = number of points of A (the plane-curve part is ACM)
  SchemeClass cubic2 = SchemeClass::curve(3, 2, true);
  CHECK(h(StdSheaf::ideal_of(cubic2, 0)).h1 == 2);
  CHECK(h(StdSheaf::ideal_of(cubic2, 0)).h0 == 0);
  SchemeClass line = SchemeClass::curve(1, 1, true);
  CHECK(h(StdSheaf::ideal_of(line, 1)).h0 == 2);  // pencil of planes through a line
  CHECK(h(StdSheaf::ideal_of(line, 1)).h1 == 0);
  SchemeClass pts3;
  pts3 = SchemeClass::points_of(3);
  CHECK(h(StdSheaf::ideal_of(pts3, 0)).h1 == 2);   // constants account for rank 1
  CHECK(h(StdSheaf::ideal_of(pts3, -1)).h1 == 3);
  CHECK(h(StdSheaf::ideal_of(pts3, 1)).h0 == 1);  // 4 - 3
}

TEST_CASE("unsupported composites are rejected") {
  CHECK_THROWS_AS(StdSheaf::ideal_of(SchemeClass::curve(4, 1, false), 0), std::invalid_argument);
  SchemeClass bad;
  bad.dim = 1;
  CHECK_THROWS_AS(StdSheaf::ideal_of(bad, 0), std::invalid_argument);
  CHECK_THROWS_AS(StdSheaf::planar_curve(0, 0), std::invalid_argument);
}

TEST_CASE("alternating sum equals the Riemann-Roch Euler characteristic") {
  for (int i = 0; i < 150; ++i) {
    StdSheaf f = random_sheaf();
    Rat chi = hilbert_polynomial(chern_character(f)).eval(0);
    INFO(f.str());
    CHECK(Rat(h(f).alternating_sum()) == chi);
  }
}

TEST_CASE("Serre duality for line bundles") {
  for (i64 a = -8; a <= 8; ++a) {
    Hdims x = h(StdSheaf::line_bundle(a));
    Hdims y = h(StdSheaf::line_bundle(-a - 4));
    CHECK(x.h0 == y.h3);
    CHECK(x.h1 == y.h2);
    CHECK(x.h2 == y.h1);
    CHECK(x.h3 == y.h0);
  }
}

TEST_CASE("ext_plus values and lower bound") {
  CHECK(ext_plus(SchemeClass::curve(1, 2, true), 1) == 6);   // line (+ a point)
  CHECK(ext_plus(SchemeClass::curve(3, 2, true), 1) == 15);  // plane cubic + points
  CHECK(ext_plus(SchemeClass::curve(3, 0, true), 1) == 15);  // points drop out
  CHECK(ext_plus(SchemeClass::curve(2, 1, true), 1) == 10);  // conic
  for (i64 d = 1; d <= 5; ++d)
    for (i64 l = 1; l <= 4; ++l)
      CHECK(ext_plus(SchemeClass::curve(d, min_euler(d), true), l) >= 3);
  CHECK_THROWS_AS(ext_plus(SchemeClass::curve(1, 1, true), 0), std::invalid_argument);
}

TEST_CASE("ext_minus: disjoint equals the point count of A") {
  std::uniform_int_distribution<i64> dd(1, 5), nn(0, 5), ll(1, 3);
  for (int i = 0; i < 100; ++i) {
    i64 d = dd(rng), n = nn(rng);
    SchemeClass a = SchemeClass::curve(d, min_euler(d) + n, true);
    SchemeClass p = SchemeClass::points_of(2);
    CHECK(ext_minus(a, p, ll(rng), Incidence::Disjoint) == n);
    CHECK(ext_minus(a, SchemeClass::empty(), ll(rng), Incidence::Disjoint) == n);
  }
}

TEST_CASE("ext_minus case tables") {
  SchemeClass line = SchemeClass::curve(1, 1, true);
  SchemeClass pt = SchemeClass::points_of(1);
  CHECK(ext_minus(line, pt, 1, Incidence::PointOnPureCurve) == 1);
  CHECK(ext_minus(line, pt, 1, Incidence::Disjoint) == 0);

  SchemeClass cubic1 = SchemeClass::curve(3, 1, true);  // one embedded point
  CHECK(ext_minus(cubic1, pt, 1, Incidence::Disjoint) == 1);
  CHECK(ext_minus(cubic1, pt, 1, Incidence::PointEqualsEmbedded) == 3);
  CHECK(ext_minus(cubic1, pt, 1, Incidence::PointOnPureCurve) == 1);
  CHECK(ext_minus(cubic1, pt, 1, Incidence::PointEqualsEmbeddedOnCurve) == 6);

  SchemeClass cubic0 = SchemeClass::curve(3, 0, true);  // pure
  SchemeClass two = SchemeClass::points_of(2);
  CHECK(ext_minus(cubic0, two, 1, Incidence::Disjoint) == 0);
  CHECK(ext_minus(cubic0, two, 1, Incidence::PointOnPureCurve) == 1);
  CHECK(ext_minus(cubic0, two, 1, Incidence::EmbeddedOffPlane) == 2);

  CHECK_THROWS_AS(ext_minus(cubic0, SchemeClass::points_of(3), 1, Incidence::PointOnPureCurve),
                  std::domain_error);
  auto cases = ext_minus_cases(cubic1, pt, 1);
  CHECK(cases.size() == 4);
  CHECK(cases[0].first == Incidence::Disjoint);
}

TEST_CASE("extension fibers over the Hilbert scheme") {
  // plane quartic + 2 points at twist -2
  CHECK(hilbert_fiber_dim({StdSheaf::planar_curve(4, 0), StdSheaf::points(2)}, -2) == 10);
  // plane conic + point
  CHECK(hilbert_fiber_dim({StdSheaf::planar_curve(2, 0), StdSheaf::points(1)}, -2) == 3);
  // two skew lines
  CHECK(hilbert_fiber_dim({StdSheaf::line(0), StdSheaf::line(0)}, -2) == 2);
  // elliptic quartic (CM): h^0 vanishes, so h^1 = -chi
  CHECK(hilbert_fiber_dim_cm(parse_poly("4*t"), -2) == 8);
  CHECK(hilbert_fiber_dim_cm(parse_poly("3*t+1"), -2) == 5);  // twisted cubic
  CHECK_THROWS_AS(hilbert_fiber_dim_cm(parse_poly("4*t"), 1), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_fiber_dim({StdSheaf::line_bundle(0)}, -2), std::invalid_argument);
}

TEST_CASE("group-1 wall fibers with a 1-dimensional quotient") {
  SchemeClass conic = SchemeClass::curve(2, 1, true);
  SchemeClass line = SchemeClass::curve(1, 1, false);
  PairExtPair pe = ext_group1_pair(conic, line);
  CHECK(pe.forward == 9);
  CHECK(pe.reverse == 3);
  CHECK_THROWS_AS(ext_group1_pair(line, conic), std::domain_error);
}

TEST_CASE("points in a plane and the saturation criterion") {
  CHECK(points_in_plane_h1(3, 1) == 0);
  CHECK(points_in_plane_h1(4, 1) == 1);
  CHECK(points_in_plane_h1(2, -1) == 2);
  // quotient points off the plane: always saturated
  CHECK(family_wall_saturated(0, 3, 1, 0));
  // many points forced onto the plane can obstruct saturation
  CHECK(!family_wall_saturated(20, 1, 1, 0));
}
