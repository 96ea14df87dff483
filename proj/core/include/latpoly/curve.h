/*
 * Curve invariants read off the Newton polygon: genus, gonality and its
 * pencils, Clifford index/dimension, scrollar invariants with completeness /
 * rank / scroll dimension, the near-gonal classification, and the two
 * closed-form application families (semigroup triangles and Hirzebruch
 * trapezoids).
 */
#pragma once

#include <optional>
#include <vector>

#include "latpoly/width.h"

namespace latpoly {

enum class PencilCountKind { EXACTLY, AT_MOST, INFINITE };

struct PencilCount {
  PencilCountKind kind = PencilCountKind::EXACTLY;
  i64 n = 0;                    // unused for INFINITE
  std::vector<Dir> directions;  // present iff finite and combinatorial
};

struct PencilData {
  Dir direction;
  i64 degree = 0;              // w(P, v)
  std::vector<i64> scrollar;   // sorted non-negative width invariants
  bool complete = false;       // no negative width invariant
  i64 rank = 1;                // negatives + 1
  i64 scroll_dim = 0;          // non-negatives, capped at genus - 1
};

enum class NearGonalClass {
  ALL_COMBINATORIAL,
  INFINITELY_MANY,
  EXISTS_NON_COMBINATORIAL,
  NO_COMBINATORIAL_EXISTENCE_OPEN,
  NOT_APPLICABLE,
};

const char* near_gonal_name(NearGonalClass c);

struct CliffordData {
  i64 index = 0;
  i64 dimension = 1;
};

struct CurveProfile {
  i64 genus = 0;
  i64 gonality = 0;
  PencilCount gonality_pencils;
  std::optional<CliffordData> clifford;
  bool smooth_plane = false;
  NearGonalClass near_gonal = NearGonalClass::NOT_APPLICABLE;
  i64 lw = 0;
  i64 ls_interior = 0;
  std::vector<PencilData> pencil_blocks;  // one per gonality direction when finite
};

i64 genus(const Polygon& p);
i64 gonality(const Polygon& p);
PencilCount gonality_pencils(const Polygon& p);
bool has_combinatorial_gonality_pencil(const Polygon& p);
CliffordData clifford(const Polygon& p);
bool is_smooth_plane_model(const Polygon& p);
PencilData pencil_data(const Polygon& p, Dir v);
NearGonalClass near_gonal(const Polygon& p);
CurveProfile curve_profile(const Polygon& p);

struct CabProfile {
  Polygon polygon;
  i64 genus = 0;
  i64 gonality = 0;
};
CabProfile cab_profile(i64 a, i64 b);

struct HirzebruchProfile {
  Polygon polygon;
  i64 genus = 0;
  i64 gonality = 0;
  std::vector<i64> scrollar;
  i64 recovered_n = 0;
};
HirzebruchProfile hirzebruch_profile(i64 n, i64 a, i64 d);

}  // namespace latpoly
