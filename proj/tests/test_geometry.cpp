/*
 * Unit tests for the exact-geometry layer: hulls, counting, equivalence,
 * interior/outward polygons, Minkowski sums and the divisor-polygon map.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpoly/geometry.h"

using namespace latpoly;

static Polygon tri(i64 d) { return hull({{0, 0}, {d, 0}, {0, d}}); }

TEST_CASE("hull handles degenerate inputs") {
  CHECK(hull({{2, 3}}).dim == Dim::POINT);
  CHECK(hull({{0, 0}, {2, 4}, {1, 2}}).dim == Dim::SEGMENT);
  CHECK(hull({{0, 0}, {2, 4}, {1, 2}}).verts == std::vector<Pt>{{0, 0}, {2, 4}});
  Polygon p = hull({{0, 0}, {2, 0}, {1, 0}, {2, 2}, {0, 2}, {1, 1}});
  CHECK(p.dim == Dim::TWO_D);
  CHECK(p.verts == std::vector<Pt>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

TEST_CASE("volume and point counts satisfy Pick's identity") {
  Polygon p = tri(4);
  CHECK(volume2(p) == 16);
  Counts c = counts(p);
  CHECK(c.interior == 3);
  CHECK(c.boundary == 12);
  CHECK(c.lattice == 15);
  CHECK(volume2(p) == 2 * c.interior + c.boundary - 2);
  CHECK((i64)lattice_points(p).size() == c.lattice);
  CHECK((i64)interior_lattice_points(p).size() == c.interior);
}

TEST_CASE("containment") {
  Polygon p = tri(3);
  CHECK(contains(p, {0, 0}));
  CHECK(contains(p, {1, 1}));
  CHECK(!contains(p, {2, 2}));
  CHECK(contains_strictly(p, {1, 1}));
  CHECK(!contains_strictly(p, {0, 0}));
}

TEST_CASE("minkowski sum and mixed volume") {
  Polygon s = tri(1), sq = hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  Polygon sum = minkowski_sum(s, sq);
  CHECK(volume2(sum) == volume2(s) + volume2(sq) + 2 * mixed_volume(s, sq));
  CHECK(mixed_volume(s, s) == volume2(s));
  // mixed volume with a primitive segment equals the strip width
  Polygon seg = hull({{0, 0}, {0, 1}});
  CHECK(mixed_volume(tri(5), seg) == 5);
}

TEST_CASE("unimodular maps preserve the canonical form") {
  Polygon p = hull({{0, 0}, {1, -1}, {3, -2}, {4, -2}, {4, 2}, {3, 2}, {1, 1}});
  UnimodularMap u{{{2, 1}, {1, 1}}, -7, 5};
  REQUIRE(u.det() == 1);
  Polygon q = apply(u, p);
  CHECK(volume2(q) == volume2(p));
  CHECK(counts(q).interior == counts(p).interior);
  CHECK(canonical_form(q) == canonical_form(p));
  CHECK(are_equivalent(p, q));
  // mirror images are equivalent too (GL_2(Z), not just SL_2)
  UnimodularMap mir{{{1, 0}, {0, -1}}, 0, 0};
  CHECK(are_equivalent(p, apply(mir, p)));
}

TEST_CASE("equivalence distinguishes genuinely different classes") {
  CHECK(are_equivalent(tri(1), hull({{5, 7}, {6, 7}, {5, 8}})));
  CHECK(!are_equivalent(tri(2), hull({{0, 0}, {2, 0}, {1, 2}})));
  CHECK(!are_equivalent(tri(3), hull({{0, 0}, {3, 0}, {0, 3}, {1, 3}})));
}

TEST_CASE("canonical form is idempotent and degenerate-safe") {
  Polygon p = hull({{3, 9}, {5, 9}, {4, 11}});
  CHECK(canonical_form(canonical_form(p)) == canonical_form(p));
  CHECK(canonical_form(hull({{7, -2}})).verts == std::vector<Pt>{{0, 0}});
  CHECK(canonical_form(hull({{1, 1}, {3, 5}})).verts == std::vector<Pt>{{0, 0}, {2, 0}});
}

TEST_CASE("interior hull of dSigma is (d-3)Sigma") {
  CHECK(interior_hull(tri(3)).dim == Dim::POINT);
  CHECK(are_equivalent(interior_hull(tri(4)), tri(1)));
  CHECK(are_equivalent(interior_hull(tri(7)), tri(4)));
  CHECK(interior_hull(tri(2)).dim == Dim::EMPTY);
}

TEST_CASE("outward polygon certifies interior hulls") {
  // Upsilon is an interior hull: its outward polygon is a lattice polygon
  Polygon ups = hull({{-1, -1}, {1, 0}, {0, 1}});
  RationalPolygon out = outward_polygon(ups);
  CHECK(out.is_lattice);
  // 2Sigma is the interior hull of 5Sigma
  CHECK(outward_polygon(tri(2)).is_lattice);
  CHECK(are_equivalent(interior_hull(tri(5)), tri(2)));
  // a polygon that is no interior hull: adjacent pushed edges meet off-lattice
  CHECK(!outward_polygon(hull({{0, 0}, {3, 1}, {1, 2}})).is_lattice);
}

TEST_CASE("max polygon round trip") {
  Polygon p = hull({{0, 0}, {1, -1}, {3, -2}, {4, -2}, {4, 2}, {3, 2}, {1, 1}});
  Polygon m = max_polygon(p);
  CHECK(interior_hull(m) == interior_hull(p));
  for (const Pt& v : p.verts) CHECK(contains(m, v));
  CHECK(canonical_form(max_polygon(m)) == canonical_form(m));
  CHECK(are_equivalent(max_polygon(tri(4)), tri(4)));  // dSigma is maximal
  CHECK_THROWS_AS(max_polygon(tri(2)), unsupported_case);
}

TEST_CASE("divisor polygon: ample class on the projective plane") {
  TorusDivisor d{{{1, 0}, {0, 1}, {-1, -1}}, {1, 1, 1}};
  DivisorPolygon dp = divisor_polygon(d);
  CHECK(dp.polygon.is_lattice);
  CHECK(dp.is_cartier);
  CHECK(dp.is_convex);
  CHECK(dp.is_strictly_convex);
  CHECK(dp.polygon.verts.size() == 3);
}

TEST_CASE("divisor polygon: trivial divisor gives a point") {
  TorusDivisor d{{{1, 0}, {0, 1}, {-1, -1}}, {0, 0, 0}};
  DivisorPolygon dp = divisor_polygon(d);
  REQUIRE(dp.polygon.verts.size() == 1);
  CHECK(dp.polygon.verts[0] == RatPt{Rat(0), Rat(0)});
  CHECK(dp.is_convex);
  CHECK(!dp.is_strictly_convex);
}

TEST_CASE("divisor polygon: non-integral apex is not Cartier") {
  TorusDivisor d{{{1, 0}, {0, 1}, {-2, -1}, {0, -1}}, {2, 2, 1, 1}};
  DivisorPolygon dp = divisor_polygon(d);
  CHECK(!dp.is_cartier);
  CHECK(!dp.polygon.is_lattice);
}

TEST_CASE("divisor polygon rejects bad ray systems") {
  CHECK_THROWS_AS(divisor_polygon({{{1, 0}, {0, 1}}, {1, 1}}), domain_error);
  CHECK_THROWS_AS(divisor_polygon({{{1, 0}, {0, 1}, {1, 1}}, {1, 1, 1}}), domain_error);
  CHECK_THROWS_AS(divisor_polygon({{{1, 0}, {0, 1}, {-2, -2}}, {1, 1, 1}}), domain_error);
}

TEST_CASE("polygon text round trip") {
  Polygon p = parse_polygon("(0,0),(3,0),(0,3)");
  CHECK(p == tri(3));
  CHECK(parse_polygon("[[0,0],[3,0],[0,3]]") == p);
  CHECK(parse_polygon(format_polygon(p)) == p);
  CHECK_THROWS_AS(parse_polygon("nonsense"), domain_error);
  CHECK_THROWS_AS(parse_polygon("(1,2),(3"), domain_error);
  CHECK_THROWS_AS(parse_polygon(""), domain_error);
}

TEST_CASE("checked arithmetic overflows loudly") {
  CHECK_THROWS_AS(mul_ck(INT64_MAX / 2, 3), domain_error);
  CHECK(add_ck(2, 3) == 5);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
}
