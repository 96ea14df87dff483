/*
 * Shared universally-quantified property checks: each check appends a
 * human-readable violation message instead of asserting, so the same battery
 * drives both the unit suite and the acceptance gate.
 */
#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "latpoly/curve.h"
#include "latpoly/named.h"

namespace latpoly_tests {

using namespace latpoly;

struct PropertyStats {
  long long polygons_checked = 0;
  std::vector<std::string> violations;

  void fail(const Polygon& p, const std::string& what) {
    if (violations.size() < 25)  // keep reports readable
      violations.push_back(what + " at " + format_polygon(p));
    else if (violations.size() == 25)
      violations.push_back("...");
  }
};

// the full battery for one two-dimensional polygon
inline void check_polygon_properties(const Polygon& p, PropertyStats& st) {
  ++st.polygons_checked;
  Counts c = counts(p);
  if (volume2(p) != 2 * c.interior + c.boundary - 2) st.fail(p, "Pick identity");

  i64 lw = lattice_width(p);
  Polygon ih = interior_hull(p);
  bool sigma = is_sigma_multiple(p);

  // width recursion: the interior hull is two levels narrower, except dSigma
  if (ih.dim != Dim::EMPTY) {
    i64 gap = lw - lattice_width(ih);
    if (gap != (sigma ? 3 : 2)) st.fail(p, "lattice width recursion");
  }

  std::vector<Dir> dirs = lattice_width_directions(p);

  // every width direction of the polygon computes the hull's width too
  if (ih.dim == Dim::SEGMENT || ih.dim == Dim::TWO_D) {
    i64 ihlw = lattice_width(ih);
    for (Dir v : dirs)
      if (width(ih, v).width != ihlw) st.fail(p, "width direction not inherited by hull");
  }

  // non-negative width invariants at width directions (dSigma excepted)
  if (lw >= 2 && !sigma) {
    for (Dir v : dirs)
      for (i64 e : width_invariants(p, v).invariants)
        if (e < 0) st.fail(p, "negative width invariant at a width direction");
  }

  // direction-pair bounds, with the dGamma51 characterizations
  bool g51 = is_multiple_of(p, Family::GAMMA51_MULTIPLE);
  if (dirs.size() > 4) st.fail(p, "more than four width direction pairs");
  if (dirs.size() == 4 && !g51) st.fail(p, "four direction pairs off dGamma51");
  for (size_t i = 0; i < dirs.size(); ++i)
    for (size_t j = i + 1; j < dirs.size(); ++j) {
      i64 det = dirs[i].a * dirs[j].b - dirs[i].b * dirs[j].a;
      if (det < 0) det = -det;
      if (det > 2) st.fail(p, "width direction pair with |det| > 2");
      if (det == 2 && !g51) st.fail(p, "|det| = 2 direction pair off dGamma51");
    }

  // width-volume inequality with the dUpsilon equality case
  bool upsilon = is_multiple_of(p, Family::UPSILON_MULTIPLE);
  i64 lhs = 3 * lw * lw, rhs = 4 * volume2(p);
  if (lhs > rhs) st.fail(p, "3 lw^2 > 4 volume2");
  if ((lhs == rhs) != upsilon) st.fail(p, "width-volume equality detects dUpsilon");

  // two independent width directions squeeze the genus
  if (dirs.size() >= 2 && c.interior > (lw - 1) * (lw - 1))
    st.fail(p, "genus above (lw-1)^2 with two width directions");

  // each invariant is bounded by the genus: lw * E_l <= 2 g - 2
  if (lw >= 2 && c.interior >= 1) {
    for (Dir v : dirs)
      for (i64 e : width_invariants(p, v).invariants)
        if (lw * e > 2 * c.interior - 2) st.fail(p, "lw * E_l exceeds 2g - 2");
  }

  // scroll degree: a complete pencil of degree d spans invariants summing to g - d + 1
  if (c.interior >= 1 && lw >= 2) {
    for (Dir v : dirs) {
      PencilData pd = pencil_data(p, v);
      if (!pd.complete) continue;
      i64 sum = 0;
      for (i64 e : pd.scrollar) sum += e;
      if (sum != c.interior - pd.degree + 1) st.fail(p, "scroll degree identity");
    }
  }

  // the mixed volume with a primitive segment is the strip width
  for (Dir v : {Dir{1, 0}, Dir{0, 1}, Dir{1, 1}, Dir{2, -1}}) {
    Polygon seg = hull({{0, 0}, {v.a, v.b}});
    if (mixed_volume(p, seg) != width(p, v).width)
      st.fail(p, "mixed volume vs strip width");
  }
}

inline std::vector<Polygon> fuzz_polygons(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Polygon> out;
  while ((int)out.size() < count) {
    std::uniform_int_distribution<i64> box(2, 6), npts(3, 8);
    i64 n = box(rng);
    std::uniform_int_distribution<i64> coord(-n, n);
    std::vector<Pt> pts;
    for (i64 i = npts(rng); i > 0; --i) pts.push_back({coord(rng), coord(rng)});
    Polygon p = hull(std::move(pts));
    if (p.dim == Dim::TWO_D) out.push_back(std::move(p));
  }
  return out;
}

// independent scan: every primitive direction in a coefficient box
inline bool direction_search_matches_bruteforce(const Polygon& p, i64 d, i64 box) {
  std::set<Dir> brute;
  for (i64 a = -box; a <= box; ++a)
    for (i64 b = -box; b <= box; ++b) {
      if ((a == 0 && b == 0) || gcd_nonneg(a, b) != 1) continue;
      Dir v = make_dir(a, b);
      if (width(p, v).width <= d) brute.insert(v);
    }
  std::vector<Dir> fast = directions_with_width_at_most(p, d);
  return std::set<Dir>(fast.begin(), fast.end()) == brute;
}

}  // namespace latpoly_tests
