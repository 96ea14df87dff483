/*
 * Recognition of the recurring polygon families: the standard triangle and its
 * multiples, the unit square, the one-interior-point triangle Upsilon, the
 * three genus-5 hulls, the genus-7/8 hulls, and the three exceptional maximal
 * polygons from the near-gonal bound table.
 */
#pragma once

#include <optional>

#include "latpoly/geometry.h"

namespace latpoly {

enum class Family {
  SIGMA_MULTIPLE,    // d * conv{(0,0),(1,0),(0,1)}
  SQUARE_MULTIPLE,   // d * unit square
  UPSILON_MULTIPLE,  // d * conv{(-1,-1),(1,0),(0,1)}
  GAMMA51_MULTIPLE,  // d * conv{(-1,0),(0,-1),(1,0),(0,1)}
  GAMMA52,           // conv{(-1,0),(0,-1),(1,-1),(0,1)}
  GAMMA53,           // conv{(-1,-1),(1,-1),(0,1)}
  GAMMA7,            // conv{(-1,-1),(0,-1),(2,0),(1,1),(0,1)}
  GAMMA8,            // conv{(-1,-1),(0,-1),(3,0),(1,1),(0,1)}
  DELTA1,            // conv{(-2,0),(6,-2),(0,2),(-2,3)}
  DELTA2,            // conv{(-2,1),(-1,0),(3,-2),(4,-2),(1,4)}
  DELTA3,            // conv{(-2,-2),(4,0),(4,1),(1,4)}
};

struct NamedFamily {
  Family family;
  i64 d = 1;  // scale; 1 for the non-scalable families
};

const char* family_name(Family f);

// base template at scale 1
Polygon family_template(Family f);
Polygon scaled(const Polygon& p, i64 d);

std::optional<NamedFamily> recognize(const Polygon& p);

// convenience tests against specific classes (arguments may be any polygon)
bool is_sigma_multiple(const Polygon& p, i64* d_out = nullptr);
bool is_multiple_of(const Polygon& p, Family f, i64* d_out = nullptr);
bool equivalent_to_family(const Polygon& p, Family f, i64 d = 1);

}  // namespace latpoly
