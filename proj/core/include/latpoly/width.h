/*
 * Directional width machinery: strip widths w(P,v), the per-level width
 * invariants E_l computed on the interior hull, complete bounded-width
 * direction searches, lattice width, lattice size, and the determinant-based
 * pencil-distinctness test.
 */
#pragma once

#include <vector>

#include "latpoly/geometry.h"

namespace latpoly {

struct WidthProfile {
  Dir direction;
  i64 width = -1;              // max - min of the strip functional; -1 for the empty set
  i64 offset = 0;              // the min
  std::vector<i64> invariants; // E_1..E_{width-1}, counted on the interior hull
};

struct StripData {
  i64 width = -1;
  i64 offset = 0;
};

StripData width(const Polygon& p, Dir v);
WidthProfile width_invariants(const Polygon& p, Dir v);

// complete set of direction classes with w(P,v) <= d (P must be 2D)
std::vector<Dir> directions_with_width_at_most(const Polygon& p, i64 d);

i64 lattice_width(const Polygon& p);
std::vector<Dir> lattice_width_directions(const Polygon& p);

i64 lattice_size(const Polygon& p);

// sufficient condition: w(interior_hull(P), v1) > |det(v1,v2)| - 2 (or with
// the roles swapped) forces the two combinatorial pencils apart
bool provably_distinct_pencils(const Polygon& p, Dir v1, Dir v2);

}  // namespace latpoly
