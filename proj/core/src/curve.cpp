#include "latpoly/curve.h"

#include <algorithm>

#include "latpoly/named.h"

namespace latpoly {

const char* near_gonal_name(NearGonalClass c) {
  switch (c) {
    case NearGonalClass::ALL_COMBINATORIAL: return "all_combinatorial";
    case NearGonalClass::INFINITELY_MANY: return "infinitely_many";
    case NearGonalClass::EXISTS_NON_COMBINATORIAL: return "exists_non_combinatorial";
    case NearGonalClass::NO_COMBINATORIAL_EXISTENCE_OPEN: return "no_combinatorial_existence_open";
    case NearGonalClass::NOT_APPLICABLE: return "not_applicable";
  }
  return "?";
}

namespace {

void require_2d(const Polygon& p, const char* what) {
  if (p.dim != Dim::TWO_D)
    throw unsupported_case(std::string(what) + " requires a two-dimensional polygon");
}

// hull equivalent to k * standard triangle for some k >= 1 (a single point
// counts as the k = 0 degenerate member)
bool hull_is_sigma_like(const Polygon& ih) {
  return ih.dim == Dim::POINT || (ih.dim == Dim::TWO_D && is_sigma_multiple(ih));
}

}  // namespace

i64 genus(const Polygon& p) {
  require_2d(p, "genus");
  return counts(p).interior;
}

i64 gonality(const Polygon& p) {
  require_2d(p, "gonality");
  Polygon ih = interior_hull(p);
  switch (ih.dim) {
    case Dim::EMPTY:
      return 1;
    case Dim::POINT:
    case Dim::SEGMENT:
      return 2;
    case Dim::TWO_D:
      break;
  }
  if (equivalent_to_family(ih, Family::UPSILON_MULTIPLE, 1)) return 3;
  return lattice_width(ih) + 2;
}

PencilCount gonality_pencils(const Polygon& p) {
  require_2d(p, "pencil count");
  Polygon ih = interior_hull(p);
  PencilCount out;
  if (ih.dim == Dim::EMPTY) {
    out.kind = PencilCountKind::EXACTLY;
    out.n = 1;
    if (lattice_width(p) == 1) out.directions = lattice_width_directions(p);
    return out;
  }
  if (hull_is_sigma_like(ih) ||
      (ih.dim == Dim::TWO_D &&
       (equivalent_to_family(ih, Family::UPSILON_MULTIPLE, 2) ||
        equivalent_to_family(ih, Family::GAMMA51_MULTIPLE, 1) ||
        equivalent_to_family(ih, Family::GAMMA52) ||
        equivalent_to_family(ih, Family::GAMMA53)))) {
    out.kind = PencilCountKind::INFINITE;
    return out;
  }
  if (ih.dim == Dim::TWO_D && equivalent_to_family(ih, Family::UPSILON_MULTIPLE, 1)) {
    out.kind = PencilCountKind::AT_MOST;
    out.n = 2;
    return out;
  }
  out.kind = PencilCountKind::EXACTLY;
  out.directions = lattice_width_directions(p);
  out.n = (i64)out.directions.size();
  if (ih.dim == Dim::SEGMENT && out.n != 1)
    throw domain_error("internal consistency: hyperelliptic polygon with several width pairs");
  return out;
}

bool has_combinatorial_gonality_pencil(const Polygon& p) {
  require_2d(p, "combinatorial pencil test");
  return lattice_width(p) == gonality(p);
}

CliffordData clifford(const Polygon& p) {
  i64 g = genus(p);
  if (g < 1) throw unsupported_case("Clifford data requires genus >= 1");
  Polygon ih = interior_hull(p);
  if (g <= 3) return {g == 3 && ih.dim == Dim::TWO_D ? 1 : 0, 1};
  i64 k;
  if (ih.dim == Dim::TWO_D && is_sigma_multiple(ih, &k)) return {k - 1, 2};
  if (ih.dim == Dim::TWO_D && equivalent_to_family(ih, Family::UPSILON_MULTIPLE, 1))
    return {1, 1};
  if (ih.dim == Dim::TWO_D && equivalent_to_family(ih, Family::UPSILON_MULTIPLE, 2))
    return {3, 3};
  return {lattice_width(ih), 1};
}

bool is_smooth_plane_model(const Polygon& p) {
  require_2d(p, "smooth plane test");
  Polygon ih = interior_hull(p);
  return ih.dim == Dim::EMPTY || hull_is_sigma_like(ih);
}

PencilData pencil_data(const Polygon& p, Dir v) {
  require_2d(p, "pencil data");
  i64 g = counts(p).interior;
  if (g < 1) throw unsupported_case("pencil data requires genus >= 1");
  WidthProfile wp = width_invariants(p, v);  // throws for width < 2
  PencilData out;
  out.direction = v;
  out.degree = wp.width;
  i64 neg = 0;
  for (i64 e : wp.invariants) {
    if (e >= 0)
      out.scrollar.push_back(e);
    else
      ++neg;
  }
  std::sort(out.scrollar.begin(), out.scrollar.end());
  out.complete = neg == 0;
  out.rank = neg + 1;
  out.scroll_dim = (i64)out.scrollar.size();
  if (out.scroll_dim == g) out.scroll_dim = g - 1;
  return out;
}

NearGonalClass near_gonal(const Polygon& p) {
  require_2d(p, "near-gonal classification");
  if (counts(p).interior < 3) return NearGonalClass::NOT_APPLICABLE;
  Polygon ih = interior_hull(p);
  if (ih.dim == Dim::TWO_D) {
    if (equivalent_to_family(ih, Family::UPSILON_MULTIPLE, 2) ||
        equivalent_to_family(ih, Family::GAMMA7))
      return NearGonalClass::INFINITELY_MANY;
    if (equivalent_to_family(ih, Family::UPSILON_MULTIPLE, 3))
      return NearGonalClass::EXISTS_NON_COMBINATORIAL;
    if (equivalent_to_family(ih, Family::GAMMA8))
      return NearGonalClass::NO_COMBINATORIAL_EXISTENCE_OPEN;
  }
  return lattice_size(ih) >= lattice_width(ih) + 2 ? NearGonalClass::ALL_COMBINATORIAL
                                                   : NearGonalClass::INFINITELY_MANY;
}

CurveProfile curve_profile(const Polygon& p) {
  require_2d(p, "curve profile");
  CurveProfile out;
  out.genus = genus(p);
  out.gonality = gonality(p);
  out.gonality_pencils = gonality_pencils(p);
  if (out.genus >= 1) out.clifford = clifford(p);
  out.smooth_plane = is_smooth_plane_model(p);
  out.near_gonal = near_gonal(p);
  out.lw = lattice_width(p);
  out.ls_interior = lattice_size(interior_hull(p));
  if (out.genus >= 1 && out.gonality >= 2)
    for (Dir v : out.gonality_pencils.directions) out.pencil_blocks.push_back(pencil_data(p, v));
  return out;
}

CabProfile cab_profile(i64 a, i64 b) {
  if (a < 2 || b < 2) throw domain_error("semigroup triangle requires a, b >= 2");
  if (gcd_nonneg(a, b) != 1) throw domain_error("semigroup triangle requires gcd(a, b) = 1");
  CabProfile out;
  out.polygon = hull({{b, 0}, {0, a}, {0, 0}});
  out.genus = (a - 1) * (b - 1) / 2;
  out.gonality = std::min(a, b);
  if (genus(out.polygon) != out.genus)
    throw domain_error("internal consistency: semigroup triangle genus");
  if (gonality(out.polygon) != out.gonality)
    throw domain_error("internal consistency: semigroup triangle gonality");
  return out;
}

HirzebruchProfile hirzebruch_profile(i64 n, i64 a, i64 d) {
  if (n < 0 || a < 0 || d < 2 || (a == 0 && n == 0))
    throw domain_error("trapezoid parameters out of range");
  HirzebruchProfile out;
  out.polygon = hull({{0, 0}, {add_ck(a, mul_ck(d, n)), 0}, {a, d}, {0, d}});
  out.genus = genus(out.polygon);
  i64 closed_genus = mul_ck(d * (d - 1) / 2, n) + mul_ck(d - 1, a - 1);
  if (out.genus != closed_genus)
    throw domain_error("internal consistency: trapezoid genus closed form");
  out.gonality = gonality(out.polygon);
  if (out.genus >= 1) {
    PencilData pd = pencil_data(out.polygon, Dir{1, 0});
    out.scrollar = pd.scrollar;
    std::vector<i64> closed;
    for (i64 l = 1; l <= d - 1; ++l)
      if (a - 2 + l * n >= 0) closed.push_back(a - 2 + l * n);
    std::sort(closed.begin(), closed.end());
    if (closed != out.scrollar)
      throw domain_error("internal consistency: trapezoid scrollar closed form");
  }
  // recovery runs on the vertical pencil's degree (d, or d - 1 in the
  // triangle degeneration), which can exceed the overall gonality for thin
  // trapezoids
  i64 gam = (a == 0 && n == 1) ? d - 1 : d;
  if (gam >= 3 && !out.scrollar.empty()) {
    i64 g2 = 2 * out.genus, e1 = out.scrollar.front();
    i64 num = g2 - 2 * (gam - 1) * (e1 + 1), den = (gam - 1) * (gam - 2);
    if (num % den != 0)
      throw domain_error("internal consistency: trapezoid invariant not integral");
    out.recovered_n = num / den;
  } else {
    out.recovered_n = n;  // the invariant needs a degree >= 3 pencil
  }
  return out;
}

}  // namespace latpoly
