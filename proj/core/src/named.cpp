#include "latpoly/named.h"

#include <array>
#include <cmath>

namespace latpoly {

const char* family_name(Family f) {
  switch (f) {
    case Family::SIGMA_MULTIPLE: return "sigma_multiple";
    case Family::SQUARE_MULTIPLE: return "square_multiple";
    case Family::UPSILON_MULTIPLE: return "upsilon_multiple";
    case Family::GAMMA51_MULTIPLE: return "gamma51_multiple";
    case Family::GAMMA52: return "gamma52";
    case Family::GAMMA53: return "gamma53";
    case Family::GAMMA7: return "gamma7";
    case Family::GAMMA8: return "gamma8";
    case Family::DELTA1: return "delta1";
    case Family::DELTA2: return "delta2";
    case Family::DELTA3: return "delta3";
  }
  return "?";
}

Polygon family_template(Family f) {
  switch (f) {
    case Family::SIGMA_MULTIPLE: return hull({{0, 0}, {1, 0}, {0, 1}});
    case Family::SQUARE_MULTIPLE: return hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    case Family::UPSILON_MULTIPLE: return hull({{-1, -1}, {1, 0}, {0, 1}});
    case Family::GAMMA51_MULTIPLE: return hull({{-1, 0}, {0, -1}, {1, 0}, {0, 1}});
    case Family::GAMMA52: return hull({{-1, 0}, {0, -1}, {1, -1}, {0, 1}});
    case Family::GAMMA53: return hull({{-1, -1}, {1, -1}, {0, 1}});
    case Family::GAMMA7: return hull({{-1, -1}, {0, -1}, {2, 0}, {1, 1}, {0, 1}});
    case Family::GAMMA8: return hull({{-1, -1}, {0, -1}, {3, 0}, {1, 1}, {0, 1}});
    case Family::DELTA1: return hull({{-2, 0}, {6, -2}, {0, 2}, {-2, 3}});
    case Family::DELTA2: return hull({{-2, 1}, {-1, 0}, {3, -2}, {4, -2}, {1, 4}});
    case Family::DELTA3: return hull({{-2, -2}, {4, 0}, {4, 1}, {1, 4}});
  }
  return {};
}

Polygon scaled(const Polygon& p, i64 d) {
  std::vector<Pt> v;
  v.reserve(p.verts.size());
  for (const Pt& q : p.verts) v.push_back({mul_ck(q.x, d), mul_ck(q.y, d)});
  return hull(std::move(v));
}

namespace {

constexpr std::array<Family, 4> kScalable = {
    Family::SIGMA_MULTIPLE, Family::SQUARE_MULTIPLE, Family::UPSILON_MULTIPLE,
    Family::GAMMA51_MULTIPLE};
constexpr std::array<Family, 7> kFixed = {Family::GAMMA52, Family::GAMMA53, Family::GAMMA7,
                                          Family::GAMMA8,  Family::DELTA1,  Family::DELTA3,
                                          Family::DELTA2};

// d with base_vol2 * d^2 == v2, if any
std::optional<i64> scale_from_volume(i64 base_vol2, i64 v2) {
  if (v2 <= 0 || v2 % base_vol2 != 0) return std::nullopt;
  i64 q = v2 / base_vol2;
  i64 d = (i64)std::llround(std::sqrt((double)q));
  for (i64 c = std::max<i64>(1, d - 2); c <= d + 2; ++c)
    if (mul_ck(c, c) == q) return c;
  return std::nullopt;
}

}  // namespace

bool is_multiple_of(const Polygon& p, Family f, i64* d_out) {
  if (p.dim != Dim::TWO_D) return false;
  Polygon base = family_template(f);
  auto d = scale_from_volume(volume2(base), volume2(p));
  if (!d) return false;
  if (!are_equivalent(p, scaled(base, *d))) return false;
  if (d_out) *d_out = *d;
  return true;
}

bool is_sigma_multiple(const Polygon& p, i64* d_out) {
  return is_multiple_of(p, Family::SIGMA_MULTIPLE, d_out);
}

bool equivalent_to_family(const Polygon& p, Family f, i64 d) {
  if (p.dim != Dim::TWO_D) return false;
  Polygon t = d == 1 ? family_template(f) : scaled(family_template(f), d);
  return volume2(p) == volume2(t) && are_equivalent(p, t);
}

std::optional<NamedFamily> recognize(const Polygon& p) {
  if (p.dim != Dim::TWO_D) return std::nullopt;
  for (Family f : kScalable) {
    i64 d;
    if (is_multiple_of(p, f, &d)) return NamedFamily{f, d};
  }
  for (Family f : kFixed)
    if (equivalent_to_family(p, f)) return NamedFamily{f, 1};
  return std::nullopt;
}

}  // namespace latpoly
