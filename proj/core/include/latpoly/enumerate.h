/*
 * Enumeration of lattice polygons up to equivalence.
 *
 * Strategy: polygons with no interior point are classified directly (the
 * double triangle plus height-1 trapezoids); polygons with collinear interior
 * points live in a height-2 strip normal form; polygons with two-dimensional
 * interior hull are grown by clipping vertices off the maximal polygon of each
 * admissible hull. Interior hulls of genus g are exactly the two-dimensional
 * classes with g lattice points whose outward polygon is again a lattice
 * polygon, which ties the recursion by lattice point count.
 */
#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "latpoly/named.h"
#include "latpoly/width.h"

namespace latpoly {

struct EnumerationRecord {
  Polygon canonical;
  i64 genus = 0;
  i64 lattice_points = 0;
  i64 lw = 0;
  i64 volume2 = 0;
  bool is_maximal = false;
  bool is_interior_hull_2d = false;
};

EnumerationRecord make_record(const Polygon& canonical);

std::vector<EnumerationRecord> enumerate_with_point_count(i64 k);
std::vector<EnumerationRecord> enumerate_interior_hulls(i64 g);
std::vector<EnumerationRecord> enumerate_maximal(i64 g);
std::vector<EnumerationRecord> enumerate_by_genus(i64 g);

struct StreamOptions {
  int threads = 1;
  // resume: canonical interior-hull keys already finished (the degenerate
  // strip unit is keyed "strip")
  const std::set<std::string>* skip_units = nullptr;
  std::function<void(const std::string&)> unit_done;
};

// streams every genus-g class exactly once (minus skipped units); returns the
// number of records emitted
i64 stream_by_genus(i64 g, const std::function<void(const EnumerationRecord&)>& emit,
                    const StreamOptions& opt = {});

enum class BoundTable { GONAL, NEARGONAL };

struct BoundRow {
  i64 lw = 0;
  i64 min_volume2 = 0;  // 0 when no witness found at or below the cutoff
  Polygon witness;
};

struct BoundReport {
  BoundTable table = BoundTable::GONAL;
  std::vector<BoundRow> rows;  // sorted by lw
  std::vector<NamedFamily> exceptions_found;
  std::vector<Polygon> sub_bound_outliers;  // non-excepted maximal polygons below the claim
  bool pass = false;
};

// exclude=false drops the exceptional-hull filter (negative control);
// cutoff_slack widens the searched volume window (saturation check)
BoundReport verify_gonality_bounds(i64 max_lw, i64 cutoff_slack = 0, bool exclude = true);
BoundReport verify_neargonal_bounds(i64 max_lw, i64 cutoff_slack = 0, bool exclude = true);

// independent brute-force oracle: canonical forms of every genus-g class whose
// edge-vector loop fits in a width x height box (dedup by canonical form)
std::set<std::string> oracle_by_genus(i64 g, i64 box_w, i64 box_h);

}  // namespace latpoly
