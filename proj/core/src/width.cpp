#include "latpoly/width.h"

#include <algorithm>
#include <set>

namespace latpoly {

StripData width(const Polygon& p, Dir v) {
  if (p.dim == Dim::EMPTY) return {-1, 0};
  i64 lo = strip_value(v, p.verts[0]), hi = lo;
  for (const Pt& q : p.verts) {
    i64 t = strip_value(v, q);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {sub_ck(hi, lo), lo};
}

WidthProfile width_invariants(const Polygon& p, Dir v) {
  StripData s = width(p, v);
  if (s.width < 2)
    throw unsupported_case("width invariants require width >= 2");
  WidthProfile out;
  out.direction = v;
  out.width = s.width;
  out.offset = s.offset;
  out.invariants.assign((size_t)(s.width - 1), -1);
  for (const Pt& q : interior_lattice_points(p)) {
    i64 level = sub_ck(strip_value(v, q), s.offset);
    // interior points sit strictly inside the strip
    out.invariants[(size_t)(level - 1)] += 1;
  }
  return out;
}

std::vector<Dir> directions_with_width_at_most(const Polygon& p, i64 d) {
  if (p.dim != Dim::TWO_D)
    throw unsupported_case("direction search requires a two-dimensional polygon");
  std::set<Dir> found;
  if (d < 0) return {};
  // two independent edge vectors; any v with w(P,v) <= d has both cross
  // products in [-d, d], which pins v inside a finite parallelotope
  Pt s1 = p.verts[1] - p.verts[0];
  Pt s2 = p.verts.back() - p.verts[0];
  i64 det = cross(s1, s2);
  for (i64 c1 = -d; c1 <= d; ++c1) {
    for (i64 c2 = -d; c2 <= d; ++c2) {
      i64 an = sub_ck(mul_ck(s1.x, c2), mul_ck(s2.x, c1));
      i64 bn = sub_ck(mul_ck(s1.y, c2), mul_ck(s2.y, c1));
      if (an % det != 0 || bn % det != 0) continue;
      i64 a = an / det, b = bn / det;
      if (a == 0 && b == 0) continue;
      if (gcd_nonneg(a, b) != 1) continue;
      Dir v = make_dir(a, b);
      if (width(p, v).width <= d) found.insert(v);
    }
  }
  return {found.begin(), found.end()};
}

i64 lattice_width(const Polygon& p) {
  switch (p.dim) {
    case Dim::EMPTY:
      return -1;
    case Dim::POINT:
    case Dim::SEGMENT:
      return 0;
    case Dim::TWO_D:
      break;
  }
  Polygon r = box_reduce(p);
  i64 ub = INT64_MAX;
  for (Dir v : {Dir{1, 0}, Dir{0, 1}, Dir{1, 1}, Dir{1, -1},
                Dir{1, 2}, Dir{2, 1}, Dir{1, -2}, Dir{2, -1}})
    ub = std::min(ub, width(r, v).width);
  i64 best = ub;
  for (Dir v : directions_with_width_at_most(r, ub))
    best = std::min(best, width(r, v).width);
  return best;
}

std::vector<Dir> lattice_width_directions(const Polygon& p) {
  switch (p.dim) {
    case Dim::EMPTY:
      throw unsupported_case("no width directions for the empty polygon");
    case Dim::POINT:
      throw unsupported_case("every direction computes the width of a point");
    case Dim::SEGMENT: {
      Pt d = p.verts[1] - p.verts[0];
      return {make_dir(d.x, d.y)};
    }
    case Dim::TWO_D:
      break;
  }
  i64 lw = lattice_width(p);
  std::vector<Dir> out;
  for (Dir v : directions_with_width_at_most(p, lw))
    if (width(p, v).width == lw) out.push_back(v);
  std::sort(out.begin(), out.end(),
            [](const Dir& x, const Dir& y) { return std::pair(x.b, x.a) < std::pair(y.b, y.a); });
  return out;
}

namespace {

// best triangle bound for the ordered functional pair (u, w) with det +-1:
// max<u+w, p> - min<u, p> - min<w, p>
i64 pair_value(const std::vector<Pt>& verts, Pt u, Pt w) {
  i64 minu = INT64_MAX, minw = INT64_MAX, maxs = INT64_MIN;
  for (const Pt& q : verts) {
    i64 du = dot(u, q), dw = dot(w, q);
    minu = std::min(minu, du);
    minw = std::min(minw, dw);
    maxs = std::max(maxs, add_ck(du, dw));
  }
  return sub_ck(sub_ck(maxs, minu), minw);
}

}  // namespace

i64 lattice_size(const Polygon& p) {
  switch (p.dim) {
    case Dim::EMPTY:
      return -2;
    case Dim::POINT:
      return 0;
    case Dim::SEGMENT: {
      Pt d = p.verts[1] - p.verts[0];
      return gcd_nonneg(d.x, d.y);
    }
    case Dim::TWO_D:
      break;
  }
  Polygon r = box_reduce(p);
  i64 best = pair_value(r.verts, {1, 0}, {0, 1});
  // any witnessing pair consists of functionals of width <= the optimum,
  // so the width-bounded direction set is a complete candidate pool
  std::vector<Pt> funcs;
  for (Dir v : directions_with_width_at_most(r, best)) {
    funcs.push_back({-v.b, v.a});
    funcs.push_back({v.b, -v.a});
  }
  for (size_t i = 0; i < funcs.size(); ++i) {
    for (size_t j = i + 1; j < funcs.size(); ++j) {
      i64 d = cross(funcs[i], funcs[j]);
      if (d != 1 && d != -1) continue;
      best = std::min(best, pair_value(r.verts, funcs[i], funcs[j]));
    }
  }
  return best;
}

bool provably_distinct_pencils(const Polygon& p, Dir v1, Dir v2) {
  if (v1 == v2) throw domain_error("directions coincide up to sign");
  Polygon ih = interior_hull(p);
  i64 det = sub_ck(mul_ck(v1.a, v2.b), mul_ck(v1.b, v2.a));
  if (det < 0) det = -det;
  i64 w1 = width(ih, v1).width, w2 = width(ih, v2).width;
  return w1 > det - 2 || w2 > det - 2;
}

}  // namespace latpoly
