/*
 * Exact lattice-polygon geometry over Z^2.
 *
 * Everything is integer (or reduced-fraction) arithmetic; products go through
 * 128-bit intermediates and throw on 64-bit overflow rather than wrapping.
 * Polygons are immutable value types: a counterclockwise vertex list starting
 * at the lexicographically least vertex, with degenerate dimensions (empty
 * set, single point, segment) carried explicitly.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latpoly {

using i64 = long long;

// exit-code-1 class of failures: bad input, parameter out of domain
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};
// exit-code-2 class: the operation is not defined for this (degenerate) case
struct unsupported_case : std::runtime_error {
  explicit unsupported_case(const std::string& m) : std::runtime_error(m) {}
};

i64 add_ck(i64 a, i64 b);
i64 sub_ck(i64 a, i64 b);
i64 mul_ck(i64 a, i64 b);
i64 gcd_nonneg(i64 a, i64 b);  // gcd(|a|,|b|), gcd(0,0) = 0
// g = a*x + b*y with g = gcd(|a|,|b|) >= 0
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);
i64 floor_div(i64 a, i64 b);
i64 ceil_div(i64 a, i64 b);

struct Pt {
  i64 x = 0, y = 0;
  friend auto operator<=>(const Pt&, const Pt&) = default;
};

inline Pt operator+(Pt a, Pt b) { return {add_ck(a.x, b.x), add_ck(a.y, b.y)}; }
inline Pt operator-(Pt a, Pt b) { return {sub_ck(a.x, b.x), sub_ck(a.y, b.y)}; }
// z-component of (a x b)
inline i64 cross(Pt a, Pt b) { return sub_ck(mul_ck(a.x, b.y), mul_ck(a.y, b.x)); }
inline i64 dot(Pt a, Pt b) { return add_ck(mul_ck(a.x, b.x), mul_ck(a.y, b.y)); }

// Primitive direction, one representative per +-pair: a > 0, or a == 0 and b > 0.
struct Dir {
  i64 a = 1, b = 0;
  friend auto operator<=>(const Dir&, const Dir&) = default;
};
Dir make_dir(i64 a, i64 b);  // normalizes sign, demands primitivity after gcd division
// strip functional of v = (a,b): f(p) = a*y - b*x
inline i64 strip_value(Dir v, Pt p) { return sub_ck(mul_ck(v.a, p.y), mul_ck(v.b, p.x)); }

struct Rat {
  i64 num = 0, den = 1;  // reduced, den > 0
  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d);
  bool is_integer() const { return den == 1; }
  friend Rat operator+(Rat a, Rat b);
  friend Rat operator-(Rat a, Rat b);
  friend Rat operator*(Rat a, Rat b);
  friend Rat operator/(Rat a, Rat b);
  friend bool operator==(const Rat&, const Rat&) = default;
  std::strong_ordering operator<=>(const Rat& o) const;
};

struct RatPt {
  Rat x, y;
  friend bool operator==(const RatPt&, const RatPt&) = default;
};

enum class Dim { EMPTY, POINT, SEGMENT, TWO_D };

struct Polygon {
  std::vector<Pt> verts;  // CCW, lex-least vertex first; no redundant vertices
  Dim dim = Dim::EMPTY;
  friend auto operator<=>(const Polygon&, const Polygon&) = default;
};

struct RationalPolygon {
  std::vector<RatPt> verts;  // CCW
  bool is_lattice = false;
};

struct UnimodularMap {
  i64 m[2][2] = {{1, 0}, {0, 1}};
  i64 tx = 0, ty = 0;
  Pt operator()(Pt p) const {
    return {add_ck(add_ck(mul_ck(m[0][0], p.x), mul_ck(m[0][1], p.y)), tx),
            add_ck(add_ck(mul_ck(m[1][0], p.x), mul_ck(m[1][1], p.y)), ty)};
  }
  i64 det() const { return sub_ck(mul_ck(m[0][0], m[1][1]), mul_ck(m[0][1], m[1][0])); }
};

struct TorusDivisor {
  // primitive inward normals with their true signs (not +-classes), pairwise
  // distinct, positively spanning the plane
  std::vector<Pt> rays;
  std::vector<i64> coeffs;  // same length
};

struct Counts {
  i64 lattice = 0, boundary = 0, interior = 0;
};

struct DivisorPolygon {
  RationalPolygon polygon;
  bool is_cartier = false;
  bool is_convex = false;
  bool is_strictly_convex = false;
};

Polygon hull(std::vector<Pt> points);
i64 volume2(const Polygon& p);
Counts counts(const Polygon& p);
std::vector<Pt> lattice_points(const Polygon& p);
std::vector<Pt> interior_lattice_points(const Polygon& p);
bool contains(const Polygon& p, Pt q);
bool contains_strictly(const Polygon& p, Pt q);

Polygon minkowski_sum(const Polygon& p, const Polygon& q);
i64 mixed_volume(const Polygon& p, const Polygon& q);

Polygon apply(const UnimodularMap& u, const Polygon& p);
Polygon canonical_form(const Polygon& p);
bool are_equivalent(const Polygon& p, const Polygon& q);

Polygon interior_hull(const Polygon& p);
// half-planes of G's edges each pushed outward by one; is_lattice tells whether
// the result certifies G as an interior hull
RationalPolygon outward_polygon(const Polygon& g);
Polygon max_polygon(const Polygon& p);

DivisorPolygon divisor_polygon(const TorusDivisor& d);

// text format "(x1,y1),(x2,y2),..." or JSON "[[x,y],...]"; input points are hulled
Polygon parse_polygon(const std::string& text);
std::string format_polygon(const Polygon& p);

// shear/translate to a small bounding box; used to seed width searches
Polygon box_reduce(const Polygon& p);

}  // namespace latpoly
